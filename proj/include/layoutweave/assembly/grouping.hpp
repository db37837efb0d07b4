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

// Layout grouping: every element whose midpoint falls inside a layout region
// joins that region's group(s), ordered by a region-specific rule.
//
// All orderings are in top-left-origin pixel space and fall back to the
// entity id, so the result never depends on detection input order.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "layoutweave/assembly/clustering.hpp"
#include "layoutweave/assembly/params.hpp"
#include "layoutweave/core/labels.hpp"
#include "layoutweave/core/model.hpp"

namespace layoutweave::assembly {

struct LayoutRegion {
  LayoutLabel label = LayoutLabel::kLayoutBox;
  double confidence = 0.0;
  BBox box;
};

// Page furniture and tables of contents never join a layout group.
inline bool excluded_from_groups(ElementLabel label) {
  return label == ElementLabel::kPageHeader || label == ElementLabel::kPageFooter ||
         label == ElementLabel::kTableOfContent;
}

inline std::vector<const Entity*> candidate_members(const BBox& layout_box,
                                                    std::span<const Entity> entities) {
  std::vector<const Entity*> out;
  for (const Entity& e : entities)
    if (!excluded_from_groups(e.type) && contains_midpoint(layout_box, e.pixel_coordinates))
      out.push_back(&e);
  return out;
}

namespace detail {

// Top-to-bottom, then left-to-right, then id.
inline bool reads_before(const Entity* a, const Entity* b) {
  return std::tie(a->pixel_coordinates.top, a->pixel_coordinates.left, a->id) <
         std::tie(b->pixel_coordinates.top, b->pixel_coordinates.left, b->id);
}

}  // namespace detail

// Columns are found by clustering min-max scaled x centers. Each cluster
// becomes a multi-col group read top to bottom; noise points become
// singleton groups. Groups come out left to right by mean x center.
inline std::vector<Group> cluster_multi_column(std::vector<const Entity*> members,
                                               const ClusterParams& params) {
  if (members.empty()) return {};
  // Canonical input order keeps cluster numbering independent of the caller.
  std::sort(members.begin(), members.end(), detail::reads_before);
  std::vector<double> xs;
  xs.reserve(members.size());
  for (const Entity* e : members) xs.push_back(e->x_center);
  const std::vector<int> labels = dbscan(minmax_scale(xs), params);

  std::map<int, std::vector<const Entity*>> clusters;
  std::vector<std::vector<const Entity*>> columns;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (labels[i] == kNoise) {
      columns.push_back({members[i]});
    } else {
      clusters[labels[i]].push_back(members[i]);
    }
  }
  for (auto& [label, col] : clusters) columns.push_back(std::move(col));

  struct Column {
    double mean_x;
    double mean_top;
    std::vector<const Entity*> members;
  };
  std::vector<Column> ordered;
  for (auto& col : columns) {
    std::sort(col.begin(), col.end(), detail::reads_before);
    double sx = 0.0;
    double st = 0.0;
    for (const Entity* e : col) {
      sx += e->x_center;
      st += e->pixel_coordinates.top;
    }
    const double n = static_cast<double>(col.size());
    ordered.push_back({sx / n, st / n, std::move(col)});
  }
  std::sort(ordered.begin(), ordered.end(), [](const Column& a, const Column& b) {
    return std::tie(a.mean_x, a.mean_top, a.members.front()->id) <
           std::tie(b.mean_x, b.mean_top, b.members.front()->id);
  });

  std::vector<Group> groups;
  for (const Column& c : ordered) groups.push_back(Group::make(GroupType::kMultiCol, c.members));
  return groups;
}

// Angle of the segment a-b against the horizontal, in [0, 90] degrees.
inline double line_angle(const Point& a, const Point& b) {
  const double dx = std::abs(b.x - a.x);
  const double dy = std::abs(b.y - a.y);
  return std::atan2(dy, dx) * 180.0 / std::numbers::pi;
}

// Left to right by x center; then one pass over adjacent pairs: when a pair
// is steeper than the threshold it is really stacked vertically, and the
// upper element is put first.
inline Group order_row_group(std::vector<const Entity*> members, const RowOrderParams& params) {
  params.validate();
  std::sort(members.begin(), members.end(), [](const Entity* a, const Entity* b) {
    return std::tie(a->x_center, a->pixel_coordinates.top, a->id) <
           std::tie(b->x_center, b->pixel_coordinates.top, b->id);
  });
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    const Entity* a = members[i];
    const Entity* b = members[i + 1];
    if (line_angle(a->mid_point, b->mid_point) >= params.angle_threshold_degrees &&
        b->pixel_coordinates.top < a->pixel_coordinates.top)
      std::swap(members[i], members[i + 1]);
  }
  return Group::make(GroupType::kRow, members);
}

inline Group order_generic_group(std::vector<const Entity*> members) {
  std::sort(members.begin(), members.end(), detail::reads_before);
  return Group::make(GroupType::kGroup, members);
}

struct GroupAssignment {
  std::vector<Group> groups;  // in region processing order
  std::vector<std::string> non_group_ids;
};

// Regions claim entities in descending confidence, then descending area; an
// entity belongs to the first region that claims it. Whatever no region
// claims is a non-group entity.
inline GroupAssignment assign_groups(std::vector<LayoutRegion> regions,
                                     std::span<const Entity> entities,
                                     const AssemblyParams& params = {}) {
  std::sort(regions.begin(), regions.end(), [](const LayoutRegion& a, const LayoutRegion& b) {
    const double aa = a.box.area();
    const double ba = b.box.area();
    return std::make_tuple(-a.confidence, -aa, a.box.top, a.box.left, a.box.right, a.box.bottom,
                           static_cast<int>(a.label)) <
           std::make_tuple(-b.confidence, -ba, b.box.top, b.box.left, b.box.right, b.box.bottom,
                           static_cast<int>(b.label));
  });

  GroupAssignment out;
  std::set<std::string, std::less<>> claimed;
  for (const LayoutRegion& region : regions) {
    std::vector<const Entity*> members;
    for (const Entity* e : candidate_members(region.box, entities))
      if (!claimed.contains(e->id)) members.push_back(e);
    if (members.empty()) continue;
    for (const Entity* e : members) claimed.insert(e->id);
    switch (region.label) {
      case LayoutLabel::kMultiColumn:
        for (Group& g : cluster_multi_column(members, params.cluster)) out.groups.push_back(std::move(g));
        break;
      case LayoutLabel::kRowGroup:
        out.groups.push_back(order_row_group(members, params.row));
        break;
      case LayoutLabel::kGroup:
      case LayoutLabel::kColumnText:
      case LayoutLabel::kColumnGroup:
      case LayoutLabel::kLayoutBox:
        out.groups.push_back(order_generic_group(members));
        break;
    }
  }
  for (const Entity& e : entities)
    if (!claimed.contains(e.id)) out.non_group_ids.push_back(e.id);
  return out;
}

}  // namespace layoutweave::assembly
