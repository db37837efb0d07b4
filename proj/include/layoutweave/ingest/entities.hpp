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

#include <span>
#include <vector>

#include "layoutweave/core/model.hpp"
#include "layoutweave/core/schema.hpp"
#include "layoutweave/ingest/detections.hpp"
#include "layoutweave/ingest/normalize.hpp"
#include "layoutweave/util/ids.hpp"
#include "layoutweave/util/utf8.hpp"

namespace layoutweave::ingest {

inline constexpr std::size_t kMinTextLength = 3;

inline std::string normalize_for(ElementLabel label, std::string_view text) {
  return is_heading(label) ? normalize_title(text) : normalize_body(text);
}

// One entity per detection. Caller-supplied ids are preserved; the rest are
// drawn from `ids` in detection order.
inline std::vector<Entity> build_entities(std::span<const RawDetection> detections,
                                          const SchemaWeights& schema, IdGenerator& ids) {
  std::vector<Entity> out;
  out.reserve(detections.size());
  for (const RawDetection& d : detections) {
    const ElementLabel label = parse_element_label(d.label);
    EntityValue value;
    value.text = normalize_for(label, d.text.value_or(""));
    out.push_back(Entity::make(d.id ? *d.id : ids.next(), label, d.confidence, std::move(value),
                               d.bbox, schema, d.image_payload));
  }
  return out;
}

// Drops entities whose text has fewer than three characters, except tables
// and images, which stay even when empty.
inline std::vector<Entity> filter_small_text(std::vector<Entity> entities) {
  std::erase_if(entities, [](const Entity& e) {
    return !is_visual(e.type) && utf8::length(e.value.text) < kMinTextLength;
  });
  return entities;
}

}  // namespace layoutweave::ingest
