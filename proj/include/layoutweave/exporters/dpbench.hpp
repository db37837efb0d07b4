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

// DP-Bench document format, used both for predictions we write and for the
// reference/prediction files the evaluator reads:
//
//   {"<document name>": {"elements": [
//       {"coordinates": [{"x": l, "y": t}, {"x": r, "y": t},
//                        {"x": r, "y": b}, {"x": l, "y": b}],
//        "category": "Paragraph", "id": 0, "page": 1,
//        "content": {"text": "...", "html": "...", "markdown": "..."}}]}}
//
// Category mapping:
//
//   page_header -> Header          page_footer    -> Footer
//   title       -> Heading1        section        -> Heading1
//   header      -> Heading1        text           -> Paragraph
//   list_item   -> List            table_of_content -> Paragraph
//   table_caption, image_caption -> Caption
//   image       -> Figure          table          -> Table
//
// Equation, Chart, Index and Footnote have no source label and are never
// produced.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "layoutweave/core/json_io.hpp"
#include "layoutweave/core/model.hpp"
#include "layoutweave/exporters/render.hpp"

namespace layoutweave::exporters {

struct DpBenchContent {
  std::string text;
  std::optional<std::string> html;
  std::optional<std::string> markdown;

  friend bool operator==(const DpBenchContent&, const DpBenchContent&) = default;
};

struct DpBenchElement {
  std::string category;
  std::array<Point, 4> coordinates;  // LT, RT, RB, LB
  int id = 0;
  int page = 1;
  DpBenchContent content;

  friend bool operator==(const DpBenchElement&, const DpBenchElement&) = default;
};

struct DpBenchDocument {
  std::string name;
  std::vector<DpBenchElement> elements;
};

inline std::string_view dpbench_category(ElementLabel label) {
  switch (label) {
    case ElementLabel::kPageHeader:
      return "Header";
    case ElementLabel::kPageFooter:
      return "Footer";
    case ElementLabel::kTitle:
    case ElementLabel::kSection:
    case ElementLabel::kHeader:
      return "Heading1";
    case ElementLabel::kText:
    case ElementLabel::kTableOfContent:
      return "Paragraph";
    case ElementLabel::kListItem:
      return "List";
    case ElementLabel::kTableCaption:
    case ElementLabel::kImageCaption:
      return "Caption";
    case ElementLabel::kImage:
      return "Figure";
    case ElementLabel::kTable:
      return "Table";
  }
  return "Paragraph";
}

inline std::array<Point, 4> to_polygon(const BBox& b) {
  return {Point{b.left, b.top}, Point{b.right, b.top}, Point{b.right, b.bottom},
          Point{b.left, b.bottom}};
}

inline BBox from_polygon(const std::array<Point, 4>& poly) {
  return BBox{poly[0].x, poly[0].y, poly[2].x, poly[2].y};
}

// Axis-aligned hull of an arbitrary four-point polygon.
inline BBox polygon_bounds(const std::array<Point, 4>& poly) {
  BBox b{poly[0].x, poly[0].y, poly[0].x, poly[0].y};
  for (const Point& p : poly) {
    b.left = std::min(b.left, p.x);
    b.top = std::min(b.top, p.y);
    b.right = std::max(b.right, p.x);
    b.bottom = std::max(b.bottom, p.y);
  }
  return b;
}

// Elements in reading order with ids numbered from zero across the document.
inline std::vector<DpBenchElement> to_dpbench(const DocumentResult& doc) {
  std::vector<DpBenchElement> out;
  int next_id = 0;
  for (const PageResult& page : doc.pages) {
    for (const Entity& e : page.elements) {
      DpBenchElement el;
      el.category = dpbench_category(e.type);
      el.coordinates = to_polygon(e.pixel_coordinates);
      el.id = next_id++;
      el.page = page.page_number;
      el.content.text = e.value.text;
      if (e.type == ElementLabel::kTable && e.value.data && !e.value.data->empty()) {
        el.content.html = html_table(*e.value.data);
        el.content.markdown = pipe_table(*e.value.data);
      }
      out.push_back(std::move(el));
    }
  }
  return out;
}

inline Json to_json(const DpBenchElement& el) {
  Json coords = Json::array();
  for (const Point& p : el.coordinates) coords.push_back(Json{{"x", p.x}, {"y", p.y}});
  Json content{{"text", el.content.text}};
  if (el.content.html) content["html"] = *el.content.html;
  if (el.content.markdown) content["markdown"] = *el.content.markdown;
  return Json{{"coordinates", std::move(coords)},
              {"category", el.category},
              {"id", el.id},
              {"page", el.page},
              {"content", std::move(content)}};
}

inline Json dpbench_file_json(std::string_view name, const std::vector<DpBenchElement>& elements) {
  Json list = Json::array();
  for (const DpBenchElement& el : elements) list.push_back(to_json(el));
  Json doc;
  doc[std::string(name)] = Json{{"elements", std::move(list)}};
  return doc;
}

inline DpBenchElement dpbench_element_from_json(const Json& j, const std::string& path) {
  using namespace json_detail;
  DpBenchElement el;
  el.category = string(field(j, "category", path), path + ".category");
  el.id = integer(field(j, "id", path), path + ".id");
  if (auto it = j.find("page"); it != j.end()) el.page = integer(*it, path + ".page");
  const Json& coords = field(j, "coordinates", path);
  if (!coords.is_array() || coords.size() != 4)
    throw ValidationError(path + ".coordinates: expected four points");
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string cp = path + ".coordinates[" + std::to_string(i) + "]";
    const Json& c = coords[i];
    if (c.is_object()) {
      el.coordinates[i] = {number(field(c, "x", cp), cp + ".x"), number(field(c, "y", cp), cp + ".y")};
    } else if (c.is_array() && c.size() == 2) {
      el.coordinates[i] = {number(c[0], cp + "[0]"), number(c[1], cp + "[1]")};
    } else {
      throw ValidationError(cp + ": expected {x, y} or [x, y]");
    }
  }
  if (auto it = j.find("content"); it != j.end() && it->is_object()) {
    if (auto t = it->find("text"); t != it->end() && t->is_string()) el.content.text = t->get<std::string>();
    if (auto h = it->find("html"); h != it->end() && h->is_string()) el.content.html = h->get<std::string>();
    if (auto m = it->find("markdown"); m != it->end() && m->is_string())
      el.content.markdown = m->get<std::string>();
  }
  return el;
}

// Documents in file order.
inline std::vector<DpBenchDocument> parse_dpbench(const Json& j) {
  if (!j.is_object()) throw ValidationError("$: expected an object keyed by document name");
  std::vector<DpBenchDocument> docs;
  for (const auto& [name, body] : j.items()) {
    const std::string path = "$." + name;
    DpBenchDocument doc;
    doc.name = name;
    const Json& elements = json_detail::field(body, "elements", path);
    if (!elements.is_array()) throw ValidationError(path + ".elements: expected an array");
    for (std::size_t i = 0; i < elements.size(); ++i)
      doc.elements.push_back(
          dpbench_element_from_json(elements[i], path + ".elements[" + std::to_string(i) + "]"));
    docs.push_back(std::move(doc));
  }
  return docs;
}

inline std::vector<DpBenchDocument> load_dpbench(const std::string& path) {
  const Json j = parse_json_text(read_file(path), path);
  try {
    return parse_dpbench(j);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace layoutweave::exporters
