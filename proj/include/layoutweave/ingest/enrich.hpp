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

#include <optional>
#include <string>
#include <vector>

#include "layoutweave/core/model.hpp"
#include "layoutweave/ingest/clients.hpp"
#include "layoutweave/util/log.hpp"
#include "layoutweave/util/parallel.hpp"

namespace layoutweave::ingest {

struct GateResult {
  std::vector<Entity> kept;
  std::vector<std::string> skipped_ids;
};

// Sends every image to the usefulness classifier; useless ones leave the
// entity list and are reported by id. Tables and text are never sent. A
// classifier failure keeps the image.
inline GateResult gate_images(std::vector<Entity> entities, const UsefulnessClassifier& classifier,
                              std::size_t workers = 1) {
  std::vector<std::size_t> images;
  for (std::size_t i = 0; i < entities.size(); ++i)
    if (entities[i].type == ElementLabel::kImage) images.push_back(i);

  auto verdicts = parallel_map<UsefulnessVerdict>(images.size(), workers, [&](std::size_t k) {
    const Entity& e = entities[images[k]];
    try {
      return classifier.classify(e);
    } catch (const std::exception& ex) {
      log::warn("usefulness classifier failed for " + e.id + ", keeping it: " + ex.what());
      return UsefulnessVerdict::kUseful;
    }
  });

  std::vector<bool> drop(entities.size(), false);
  for (std::size_t k = 0; k < images.size(); ++k)
    drop[images[k]] = verdicts[k] == UsefulnessVerdict::kUseless;

  GateResult out;
  for (std::size_t i = 0; i < entities.size(); ++i) {
    if (drop[i]) {
      out.skipped_ids.push_back(entities[i].id);
    } else {
      out.kept.push_back(std::move(entities[i]));
    }
  }
  return out;
}

inline void merge_enrichment(EntityValue& value, const EnrichmentResult& r) {
  if (r.title) value.title = *r.title;
  if (r.summary) value.summary = *r.summary;
  if (!r.text_or_data) return;
  if (const auto* text = std::get_if<std::string>(&*r.text_or_data)) {
    if (!text->empty()) value.text = *text;
  } else {
    value.data = std::get<std::vector<DataRow>>(*r.text_or_data);
  }
}

struct EnrichOutcome {
  std::vector<Entity> entities;
  int calls = 0;
};

// One client call per table and per remaining image. A null client means
// enrichment is switched off. Failed calls still count, and leave the
// entity as it was.
inline EnrichOutcome enrich_entities(std::vector<Entity> entities, const EnrichmentClient* client,
                                     std::size_t workers = 1) {
  EnrichOutcome out;
  if (client == nullptr) {
    out.entities = std::move(entities);
    return out;
  }
  std::vector<std::size_t> targets;
  for (std::size_t i = 0; i < entities.size(); ++i)
    if (is_visual(entities[i].type)) targets.push_back(i);

  auto results =
      parallel_map<std::optional<EnrichmentResult>>(targets.size(), workers, [&](std::size_t k) {
        const Entity& e = entities[targets[k]];
        try {
          return std::optional<EnrichmentResult>(client->enrich(e));
        } catch (const std::exception& ex) {
          log::warn("enrichment failed for " + e.id + ": " + ex.what());
          return std::optional<EnrichmentResult>{};
        }
      });

  for (std::size_t k = 0; k < targets.size(); ++k)
    if (results[k]) merge_enrichment(entities[targets[k]].value, *results[k]);
  out.calls = static_cast<int>(targets.size());
  out.entities = std::move(entities);
  return out;
}

inline std::string classify_document(std::string_view full_text, const CategoryClassifier& classifier) {
  if (full_text.find_first_not_of(" \t\r\n") == std::string_view::npos) return kDefaultCategory;
  try {
    std::string category = classifier.classify(full_text);
    return category.empty() ? std::string(kDefaultCategory) : category;
  } catch (const std::exception& ex) {
    log::warn(std::string("category classifier failed: ") + ex.what());
    return kDefaultCategory;
  }
}

}  // namespace layoutweave::ingest
