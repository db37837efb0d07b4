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

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "layoutweave/core/model.hpp"

namespace layoutweave::assembly {

inline constexpr double kDuplicateIou = 0.5;

inline bool is_duplicate(const Entity& a, const Entity& b) {
  return a.type == b.type && a.value.text == b.value.text &&
         iou(a.pixel_coordinates, b.pixel_coordinates) > kDuplicateIou;
}

// Collapses duplicate detections (same type, same text, IoU > 0.5; taken
// transitively) to the most confident one, ties going to the smallest id.
// Survivors keep their input order. Removed ids are appended to `removed`
// when given.
inline std::vector<Entity> dedupe_page(std::vector<Entity> entities,
                                       std::vector<std::string>* removed = nullptr) {
  const std::size_t n = entities.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (is_duplicate(entities[i], entities[j])) parent[find(i)] = find(j);

  std::map<std::size_t, std::size_t> best;  // root -> survivor index
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = best.try_emplace(find(i), i);
    if (fresh) continue;
    const Entity& cur = entities[it->second];
    const Entity& cand = entities[i];
    if (cand.confidence > cur.confidence ||
        (cand.confidence == cur.confidence && cand.id < cur.id))
      it->second = i;
  }
  std::vector<Entity> out;
  out.reserve(best.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (best[find(i)] == i) {
      out.push_back(std::move(entities[i]));
    } else if (removed != nullptr) {
      removed->push_back(entities[i].id);
    }
  }
  return out;
}

struct PageOrder {
  std::vector<Entity> elements;
  std::vector<Group> groups;
  std::vector<std::string> non_groups;
};

// Merges groups and free-standing entities by vertical position. Each group
// is one block keyed by its box top; a run of adjacent multi-col groups whose
// vertical extents overlap (the columns of one region) forms a single block
// so its columns are never interleaved. Page headers go first and page
// footers last regardless of position. Ties break on left, then first id.
inline PageOrder order_page_elements(std::span<const Group> groups,
                                     std::span<const Entity> entities) {
  std::map<std::string, const Entity*, std::less<>> by_id;
  for (const Entity& e : entities) by_id.emplace(e.id, &e);
  std::set<std::string, std::less<>> grouped;
  for (const Group& g : groups)
    for (const std::string& id : g.ids) grouped.insert(id);

  struct Block {
    double top;
    double left;
    std::string first_id;
    std::vector<const Group*> groups;
    const Entity* entity = nullptr;
  };
  std::vector<Block> blocks;
  std::vector<const Entity*> headers;
  std::vector<const Entity*> footers;

  for (std::size_t i = 0; i < groups.size();) {
    Block b{groups[i].pixel_coordinates.top, groups[i].pixel_coordinates.left, groups[i].ids.front(),
            {&groups[i]}};
    double bottom = groups[i].pixel_coordinates.bottom;
    std::size_t j = i + 1;
    if (groups[i].type == GroupType::kMultiCol) {
      while (j < groups.size() && groups[j].type == GroupType::kMultiCol &&
             groups[j].pixel_coordinates.top <= bottom &&
             groups[j].pixel_coordinates.bottom >= b.top) {
        b.top = std::min(b.top, groups[j].pixel_coordinates.top);
        b.left = std::min(b.left, groups[j].pixel_coordinates.left);
        bottom = std::max(bottom, groups[j].pixel_coordinates.bottom);
        b.groups.push_back(&groups[j]);
        ++j;
      }
    }
    blocks.push_back(std::move(b));
    i = j;
  }
  for (const Entity& e : entities) {
    if (grouped.contains(e.id)) continue;
    if (e.type == ElementLabel::kPageHeader) {
      headers.push_back(&e);
    } else if (e.type == ElementLabel::kPageFooter) {
      footers.push_back(&e);
    } else {
      blocks.push_back({e.pixel_coordinates.top, e.pixel_coordinates.left, e.id, {}, &e});
    }
  }
  std::stable_sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    return std::tie(a.top, a.left, a.first_id) < std::tie(b.top, b.left, b.first_id);
  });
  auto by_position = [](const Entity* a, const Entity* b) {
    return std::tie(a->pixel_coordinates.top, a->pixel_coordinates.left, a->id) <
           std::tie(b->pixel_coordinates.top, b->pixel_coordinates.left, b->id);
  };
  std::sort(headers.begin(), headers.end(), by_position);
  std::sort(footers.begin(), footers.end(), by_position);

  PageOrder out;
  auto emit_free = [&](const Entity* e) {
    out.elements.push_back(*e);
    out.non_groups.push_back(e->id);
  };
  for (const Entity* e : headers) emit_free(e);
  for (const Block& b : blocks) {
    if (b.entity != nullptr) {
      emit_free(b.entity);
      continue;
    }
    for (const Group* g : b.groups) {
      out.groups.push_back(*g);
      for (const std::string& id : g->ids) {
        auto it = by_id.find(id);
        if (it == by_id.end()) throw ValidationError("group member " + id + " is not on the page");
        out.elements.push_back(*it->second);
      }
    }
  }
  for (const Entity* e : footers) emit_free(e);
  return out;
}

}  // namespace layoutweave::assembly
