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

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "layoutweave/core/error.hpp"
#include "layoutweave/core/geometry.hpp"
#include "layoutweave/core/labels.hpp"
#include "layoutweave/core/schema.hpp"

namespace layoutweave {

// One structured-data row: ordered (column name, cell) pairs.
using DataRow = std::vector<std::pair<std::string, std::string>>;

struct EntityValue {
  std::string text;
  std::optional<std::string> title;
  std::optional<std::string> summary;
  std::optional<std::vector<DataRow>> data;

  // Every row must carry the same ordered column names.
  void validate() const {
    if (!data || data->empty()) return;
    const DataRow& head = data->front();
    for (const DataRow& row : *data) {
      bool same = row.size() == head.size();
      for (std::size_t i = 0; same && i < row.size(); ++i) same = row[i].first == head[i].first;
      if (!same) throw ValidationError("data rows do not share an identical key set");
    }
  }

  friend bool operator==(const EntityValue&, const EntityValue&) = default;
};

struct Entity {
  std::string id;
  ElementLabel type = ElementLabel::kText;
  double confidence = 0.0;
  EntityValue value;
  BBox pixel_coordinates;
  Point mid_point;
  double x_center = 0.0;
  double y_center = 0.0;
  int weight = 1;
  std::optional<std::string> image_payload;

  // Builds an entity and derives mid_point, centers and weight.
  static Entity make(std::string id, ElementLabel type, double confidence, EntityValue value,
                     const BBox& box, const SchemaWeights& schema,
                     std::optional<std::string> image_payload = std::nullopt) {
    if (id.empty()) throw ValidationError("entity id must not be empty");
    if (!(confidence >= 0.0 && confidence <= 1.0))
      throw ValidationError("entity '" + id + "' confidence outside [0,1]");
    box.validate();
    value.validate();
    Entity e;
    e.id = std::move(id);
    e.type = type;
    e.confidence = confidence;
    e.value = std::move(value);
    e.pixel_coordinates = box;
    e.mid_point = midpoint(box);
    e.x_center = e.mid_point.x;
    e.y_center = e.mid_point.y;
    e.weight = schema.weight_of(type);
    e.image_payload = std::move(image_payload);
    return e;
  }

  Entity relabeled(ElementLabel label, const SchemaWeights& schema) const {
    Entity copy = *this;
    copy.type = label;
    copy.weight = schema.weight_of(label);
    return copy;
  }

  double top() const { return pixel_coordinates.top; }
  double left() const { return pixel_coordinates.left; }

  friend bool operator==(const Entity&, const Entity&) = default;
};

enum class GroupType { kMultiCol, kRow, kGroup };

inline std::string_view to_string(GroupType type) {
  switch (type) {
    case GroupType::kMultiCol:
      return "multi-col";
    case GroupType::kRow:
      return "row";
    case GroupType::kGroup:
      return "group";
  }
  return "group";
}

inline GroupType parse_group_type(std::string_view name) {
  if (name == "multi-col") return GroupType::kMultiCol;
  if (name == "row") return GroupType::kRow;
  if (name == "group") return GroupType::kGroup;
  throw ValidationError("unknown group type '" + std::string(name) + "'");
}

struct Group {
  GroupType type = GroupType::kGroup;
  std::vector<std::string> ids;
  BBox pixel_coordinates;
  Point mid_point;
  double x_center = 0.0;
  double y_center = 0.0;

  // Members must be non-empty; the box is their union.
  static Group make(GroupType type, const std::vector<const Entity*>& members) {
    if (members.empty()) throw ValidationError("group must have at least one member");
    Group g;
    g.type = type;
    std::vector<BBox> boxes;
    boxes.reserve(members.size());
    for (const Entity* e : members) {
      g.ids.push_back(e->id);
      boxes.push_back(e->pixel_coordinates);
    }
    g.pixel_coordinates = union_bbox(boxes);
    g.mid_point = midpoint(g.pixel_coordinates);
    g.x_center = g.mid_point.x;
    g.y_center = g.mid_point.y;
    return g;
  }

  friend bool operator==(const Group&, const Group&) = default;
};

struct PageResult {
  int page_number = 1;
  std::vector<Entity> elements;  // reading order
  std::vector<Group> groups;
  std::vector<std::string> non_groups;
  std::vector<std::string> skipped_images;

  const Entity* find(std::string_view id) const {
    for (const Entity& e : elements)
      if (e.id == id) return &e;
    return nullptr;
  }

  void validate() const {
    const std::string where = "page " + std::to_string(page_number) + ": ";
    if (page_number <= 0) throw ValidationError(where + "page_number must be positive");
    std::set<std::string, std::less<>> keys;
    for (const Entity& e : elements)
      if (!keys.insert(e.id).second) throw ValidationError(where + "duplicate element id " + e.id);
    std::set<std::string, std::less<>> seen;
    auto claim = [&](const std::string& id) {
      if (!keys.contains(id)) throw ValidationError(where + "id " + id + " is not an element");
      if (!seen.insert(id).second)
        throw ValidationError(where + "id " + id + " appears more than once in groups/non_groups");
    };
    for (const Group& g : groups) {
      if (g.ids.empty()) throw ValidationError(where + "empty group");
      std::vector<BBox> boxes;
      for (const std::string& id : g.ids) {
        claim(id);
        boxes.push_back(find(id)->pixel_coordinates);
      }
      if (!(union_bbox(boxes) == g.pixel_coordinates))
        throw ValidationError(where + "group box is not the union of its members");
    }
    for (const std::string& id : non_groups) claim(id);
    if (seen.size() != keys.size())
      throw ValidationError(where + "groups and non_groups do not cover every element");
    for (const std::string& id : skipped_images)
      if (keys.contains(id)) throw ValidationError(where + "skipped image " + id + " is an element");
  }

  friend bool operator==(const PageResult&, const PageResult&) = default;
};

struct DocumentResult {
  std::string filename;
  int total_pages = 0;
  int total_processed_pages = 0;
  int total_failed_pages = 0;
  int total_llm_calls = 0;
  std::map<std::string, std::string> metadata;
  std::string document_category = "uncategorized";
  std::vector<PageResult> pages;

  void validate() const {
    if (total_processed_pages + total_failed_pages != total_pages)
      throw ValidationError("total_processed_pages + total_failed_pages != total_pages");
    if (total_pages < 0 || total_processed_pages < 0 || total_failed_pages < 0 ||
        total_llm_calls < 0)
      throw ValidationError("document counters must be non-negative");
    for (std::size_t i = 1; i < pages.size(); ++i)
      if (pages[i - 1].page_number >= pages[i].page_number)
        throw ValidationError("pages must be sorted ascending with unique page numbers");
    for (const PageResult& p : pages) p.validate();
  }

  friend bool operator==(const DocumentResult&, const DocumentResult&) = default;
};

}  // namespace layoutweave
