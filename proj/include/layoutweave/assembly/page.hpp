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

#include <set>
#include <span>
#include <string>
#include <vector>

#include "layoutweave/assembly/grouping.hpp"
#include "layoutweave/assembly/ordering.hpp"
#include "layoutweave/assembly/params.hpp"
#include "layoutweave/core/model.hpp"
#include "layoutweave/ingest/detections.hpp"

namespace layoutweave::assembly {

inline std::vector<LayoutRegion> regions_from(std::span<const ingest::RawDetection> detections) {
  std::vector<LayoutRegion> out;
  out.reserve(detections.size());
  for (const ingest::RawDetection& d : detections)
    out.push_back({parse_layout_label(d.label), d.confidence, d.bbox});
  return out;
}

// dedupe -> group -> order. Entities must already be gated and enriched.
inline PageResult assemble_page(int page_number, std::span<const LayoutRegion> regions,
                                std::vector<Entity> entities,
                                std::vector<std::string> skipped_images,
                                const AssemblyParams& params = {},
                                std::vector<std::string>* removed_duplicates = nullptr) {
  params.validate();
  std::set<std::string, std::less<>> ids;
  for (const Entity& e : entities)
    if (!ids.insert(e.id).second)
      throw ValidationError("page " + std::to_string(page_number) + ": duplicate entity id " + e.id);

  std::vector<Entity> kept = dedupe_page(std::move(entities), removed_duplicates);
  GroupAssignment assignment =
      assign_groups(std::vector<LayoutRegion>(regions.begin(), regions.end()), kept, params);
  PageOrder order = order_page_elements(assignment.groups, kept);

  PageResult page;
  page.page_number = page_number;
  page.elements = std::move(order.elements);
  page.groups = std::move(order.groups);
  page.non_groups = std::move(order.non_groups);
  std::sort(skipped_images.begin(), skipped_images.end());
  page.skipped_images = std::move(skipped_images);
  return page;
}

}  // namespace layoutweave::assembly
