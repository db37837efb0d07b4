// Copyright 2026 The layoutweave Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON form of the document model. Field names and order are fixed; the
// "elements" object of a page is written in reading order.

#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "layoutweave/core/error.hpp"
#include "layoutweave/core/model.hpp"

namespace layoutweave {

using Json = nlohmann::ordered_json;

namespace json_detail {

inline const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ValidationError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(path + "." + key + ": missing field");
  return *it;
}

inline double number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ValidationError(path + ": expected a number");
  return j.get<double>();
}

inline int integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ValidationError(path + ": expected an integer");
  return j.get<int>();
}

inline std::string string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ValidationError(path + ": expected a string");
  return j.get<std::string>();
}

inline std::optional<std::string> optional_string(const Json& obj, const char* key,
                                                  const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return string(*it, path + "." + key);
}

inline std::vector<std::string> string_list(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path + ": expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(string(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

// Cells may arrive as numbers or booleans from enrichment services.
inline std::string cell_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  return j.dump();
}

}  // namespace json_detail

inline Json to_json(const BBox& b) {
  return Json{{"left", b.left}, {"top", b.top}, {"right", b.right}, {"bottom", b.bottom}};
}

inline Json to_json(const Point& p) { return Json{{"x", p.x}, {"y", p.y}}; }

inline Json data_to_json(const std::vector<DataRow>& rows) {
  Json out = Json::array();
  for (const DataRow& row : rows) {
    Json r = Json::object();
    for (const auto& [k, v] : row) r[k] = v;
    out.push_back(std::move(r));
  }
  return out;
}

// Rows with differing key sets are aligned to the first-seen key order;
// missing cells become "".
inline std::vector<DataRow> data_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path + ": expected an array of row objects");
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_object())
      throw ValidationError(path + "[" + std::to_string(i) + "]: expected an object");
    for (const auto& [k, v] : j[i].items())
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  }
  std::vector<DataRow> rows;
  for (const Json& r : j) {
    DataRow row;
    for (const std::string& k : keys) {
      auto it = r.find(k);
      row.emplace_back(k, it == r.end() ? std::string{} : json_detail::cell_text(*it));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const EntityValue& v) {
  Json j{{"text", v.text}};
  if (v.title) j["title"] = *v.title;
  if (v.summary) j["summary"] = *v.summary;
  if (v.data) j["data"] = data_to_json(*v.data);
  return j;
}

inline Json to_json(const Entity& e) {
  Json j;
  j["id"] = e.id;
  j["type"] = to_string(e.type);
  j["confidence"] = e.confidence;
  j["value"] = to_json(e.value);
  j["pixel_coordinates"] = to_json(e.pixel_coordinates);
  j["mid_point"] = to_json(e.mid_point);
  j["x_center"] = e.x_center;
  j["y_center"] = e.y_center;
  j["weight"] = e.weight;
  if (e.image_payload) j["image_payload"] = *e.image_payload;
  return j;
}

inline Json to_json(const Group& g) {
  Json j;
  j["type"] = to_string(g.type);
  j["ids"] = g.ids;
  j["pixel_coordinates"] = to_json(g.pixel_coordinates);
  j["mid_point"] = to_json(g.mid_point);
  j["x_center"] = g.x_center;
  j["y_center"] = g.y_center;
  return j;
}

inline Json to_json(const PageResult& p) {
  Json j;
  j["page_number"] = p.page_number;
  Json elements = Json::object();
  for (const Entity& e : p.elements) elements[e.id] = to_json(e);
  j["elements"] = std::move(elements);
  Json groups = Json::array();
  for (const Group& g : p.groups) groups.push_back(to_json(g));
  j["groups"] = std::move(groups);
  j["non_groups"] = p.non_groups;
  j["skipped_images"] = p.skipped_images;
  return j;
}

inline Json to_json(const DocumentResult& d) {
  Json j;
  j["filename"] = d.filename;
  j["total_pages"] = d.total_pages;
  j["total_processed_pages"] = d.total_processed_pages;
  j["total_failed_pages"] = d.total_failed_pages;
  j["total_llm_calls"] = d.total_llm_calls;
  Json meta = Json::object();
  for (const auto& [k, v] : d.metadata) meta[k] = v;
  j["metadata"] = std::move(meta);
  j["document_category"] = d.document_category;
  Json pages = Json::array();
  for (const PageResult& p : d.pages) pages.push_back(to_json(p));
  j["pages"] = std::move(pages);
  return j;
}

inline BBox bbox_from_json(const Json& j, const std::string& path) {
  using namespace json_detail;
  BBox b{number(field(j, "left", path), path + ".left"), number(field(j, "top", path), path + ".top"),
         number(field(j, "right", path), path + ".right"),
         number(field(j, "bottom", path), path + ".bottom")};
  try {
    b.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return b;
}

inline EntityValue value_from_json(const Json& j, const std::string& path) {
  using namespace json_detail;
  EntityValue v;
  v.text = string(field(j, "text", path), path + ".text");
  v.title = optional_string(j, "title", path);
  v.summary = optional_string(j, "summary", path);
  if (auto it = j.find("data"); it != j.end() && !it->is_null())
    v.data = data_from_json(*it, path + ".data");
  return v;
}

// Derived geometry is recomputed from the box and must match what was
// stored. The stored weight is kept so custom schemas survive a round trip.
inline Entity entity_from_json(const Json& j, const std::string& path) {
  using namespace json_detail;
  const std::string id = string(field(j, "id", path), path + ".id");
  const ElementLabel type = [&] {
    try {
      return parse_element_label(string(field(j, "type", path), path + ".type"));
    } catch (const ValidationError& e) {
      throw ValidationError(path + ".type: " + e.what());
    }
  }();
  const double conf = number(field(j, "confidence", path), path + ".confidence");
  EntityValue value = value_from_json(field(j, "value", path), path + ".value");
  const BBox box = bbox_from_json(field(j, "pixel_coordinates", path), path + ".pixel_coordinates");
  Entity e = Entity::make(id, type, conf, std::move(value), box, SchemaWeights::defaults(),
                          optional_string(j, "image_payload", path));
  if (auto it = j.find("weight"); it != j.end()) {
    e.weight = integer(*it, path + ".weight");
    if (e.weight <= 0) throw ValidationError(path + ".weight: must be positive");
  }
  auto check = [&](const char* key, double expected) {
    auto it = j.find(key);
    if (it == j.end()) return;
    if (std::abs(number(*it, path + "." + key) - expected) > 1e-9)
      throw ValidationError(path + "." + key + ": does not match pixel_coordinates");
  };
  check("x_center", e.x_center);
  check("y_center", e.y_center);
  if (auto it = j.find("mid_point"); it != j.end()) {
    const std::string mp = path + ".mid_point";
    if (std::abs(number(field(*it, "x", mp), mp + ".x") - e.mid_point.x) > 1e-9 ||
        std::abs(number(field(*it, "y", mp), mp + ".y") - e.mid_point.y) > 1e-9)
      throw ValidationError(mp + ": does not match pixel_coordinates");
  }
  return e;
}

inline Group group_from_json(const Json& j, const std::string& path) {
  using namespace json_detail;
  Group g;
  g.type = parse_group_type(string(field(j, "type", path), path + ".type"));
  g.ids = string_list(field(j, "ids", path), path + ".ids");
  g.pixel_coordinates = bbox_from_json(field(j, "pixel_coordinates", path), path + ".pixel_coordinates");
  g.mid_point = midpoint(g.pixel_coordinates);
  g.x_center = g.mid_point.x;
  g.y_center = g.mid_point.y;
  return g;
}

inline PageResult page_from_json(const Json& j, const std::string& path) {
  using namespace json_detail;
  PageResult p;
  p.page_number = integer(field(j, "page_number", path), path + ".page_number");
  const Json& elements = field(j, "elements", path);
  if (!elements.is_object()) throw ValidationError(path + ".elements: expected an object");
  for (const auto& [key, value] : elements.items()) {
    Entity e = entity_from_json(value, path + ".elements." + key);
    if (e.id != key) throw ValidationError(path + ".elements." + key + ": key does not match id");
    p.elements.push_back(std::move(e));
  }
  const Json& groups = field(j, "groups", path);
  if (!groups.is_array()) throw ValidationError(path + ".groups: expected an array");
  for (std::size_t i = 0; i < groups.size(); ++i)
    p.groups.push_back(group_from_json(groups[i], path + ".groups[" + std::to_string(i) + "]"));
  p.non_groups = string_list(field(j, "non_groups", path), path + ".non_groups");
  p.skipped_images = string_list(field(j, "skipped_images", path), path + ".skipped_images");
  return p;
}

inline DocumentResult document_from_json(const Json& j) {
  using namespace json_detail;
  const std::string path = "$";
  DocumentResult d;
  d.filename = string(field(j, "filename", path), "$.filename");
  d.total_pages = integer(field(j, "total_pages", path), "$.total_pages");
  d.total_processed_pages = integer(field(j, "total_processed_pages", path), "$.total_processed_pages");
  d.total_failed_pages = integer(field(j, "total_failed_pages", path), "$.total_failed_pages");
  d.total_llm_calls = integer(field(j, "total_llm_calls", path), "$.total_llm_calls");
  const Json& meta = field(j, "metadata", path);
  if (!meta.is_object()) throw ValidationError("$.metadata: expected an object");
  for (const auto& [k, v] : meta.items()) d.metadata[k] = json_detail::cell_text(v);
  d.document_category = string(field(j, "document_category", path), "$.document_category");
  const Json& pages = field(j, "pages", path);
  if (!pages.is_array()) throw ValidationError("$.pages: expected an array");
  for (std::size_t i = 0; i < pages.size(); ++i)
    d.pages.push_back(page_from_json(pages[i], "$.pages[" + std::to_string(i) + "]"));
  d.validate();
  return d;
}

// 1-based line of a byte offset, for parse error messages.
inline std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ":" + std::to_string(line_of_offset(text, e.byte)) + ": " + e.what());
  }
}

inline DocumentResult load_document_result(const std::string& path) {
  const Json j = parse_json_text(read_file(path), path);
  try {
    return document_from_json(j);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

// Two-space indented, trailing newline.
inline std::string dump(const Json& j) {
  return j.dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

}  // namespace layoutweave
