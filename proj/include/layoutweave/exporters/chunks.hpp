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

#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "layoutweave/core/json_io.hpp"
#include "layoutweave/core/model.hpp"
#include "layoutweave/exporters/render.hpp"
#include "layoutweave/ingest/normalize.hpp"
#include "layoutweave/util/ids.hpp"

namespace layoutweave::exporters {

enum class ChunkKind { kPage, kHeaderBlock, kElement };

inline std::string_view to_string(ChunkKind kind) {
  switch (kind) {
    case ChunkKind::kPage:
      return "page";
    case ChunkKind::kHeaderBlock:
      return "header_block";
    case ChunkKind::kElement:
      return "element";
  }
  return "element";
}

struct ChunkMetadata {
  int page_number = 1;
  std::optional<ElementLabel> element_type;
  std::size_t token_count = 0;
  std::string filename;
  std::string document_category;
  ChunkKind chunk_kind = ChunkKind::kElement;

  friend bool operator==(const ChunkMetadata&, const ChunkMetadata&) = default;
};

struct Chunk {
  std::string page_content;
  ChunkMetadata metadata;

  friend bool operator==(const Chunk&, const Chunk&) = default;
};

inline std::size_t whitespace_token_count(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::size_t n = 0;
  for (std::string tok; in >> tok;) ++n;
  return n;
}

// FNV-1a over the NFKC form, so visually identical content collides.
inline std::uint64_t content_hash(std::string_view content) {
  return fnv1a64(ingest::nfkc(content));
}

// Per page: one page-level chunk, one chunk per title/section together with
// the text and list items that follow it up to the next title/section, and
// one chunk per element. Later chunks whose content hash was already seen
// are dropped.
inline std::vector<Chunk> to_chunks(const DocumentResult& doc) {
  std::vector<Chunk> all;
  auto add = [&](std::string content, int page, std::optional<ElementLabel> type, ChunkKind kind) {
    if (content.empty()) return;
    Chunk c;
    c.metadata = {page, type, whitespace_token_count(content), doc.filename, doc.document_category, kind};
    c.page_content = std::move(content);
    all.push_back(std::move(c));
  };

  for (const PageResult& page : doc.pages) {
    std::vector<std::string> texts;
    for (const Entity& e : page.elements)
      if (std::string c = element_content(e); !c.empty()) texts.push_back(std::move(c));
    add(join(texts, "\n"), page.page_number, std::nullopt, ChunkKind::kPage);

    auto opens_block = [](ElementLabel l) {
      return l == ElementLabel::kTitle || l == ElementLabel::kSection;
    };
    for (std::size_t i = 0; i < page.elements.size(); ++i) {
      const Entity& head = page.elements[i];
      if (!opens_block(head.type)) continue;
      std::vector<std::string> parts;
      if (!head.value.text.empty()) parts.push_back(head.value.text);
      for (std::size_t j = i + 1; j < page.elements.size() && !opens_block(page.elements[j].type); ++j) {
        const Entity& e = page.elements[j];
        if ((e.type == ElementLabel::kText || e.type == ElementLabel::kListItem) && !e.value.text.empty())
          parts.push_back(e.value.text);
      }
      add(join(parts, "\n"), page.page_number, head.type, ChunkKind::kHeaderBlock);
    }

    for (const Entity& e : page.elements)
      add(element_content(e), page.page_number, e.type, ChunkKind::kElement);
  }

  std::vector<Chunk> out;
  std::set<std::uint64_t> seen;
  for (Chunk& c : all)
    if (seen.insert(content_hash(c.page_content)).second) out.push_back(std::move(c));
  return out;
}

inline Json to_json(const Chunk& c) {
  Json meta;
  meta["page_number"] = c.metadata.page_number;
  meta["element_type"] = c.metadata.element_type ? Json(to_string(*c.metadata.element_type)) : Json(nullptr);
  meta["token_count"] = c.metadata.token_count;
  meta["filename"] = c.metadata.filename;
  meta["document_category"] = c.metadata.document_category;
  meta["chunk_kind"] = to_string(c.metadata.chunk_kind);
  return Json{{"page_content", c.page_content}, {"metadata", std::move(meta)}};
}

// One compact JSON record per line.
inline std::string chunks_to_ndjson(const std::vector<Chunk>& chunks) {
  std::string out;
  for (const Chunk& c : chunks) out += to_json(c).dump(-1, ' ', false, Json::error_handler_t::replace) + "\n";
  return out;
}

}  // namespace layoutweave::exporters
