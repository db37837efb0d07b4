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

#include <regex>
#include <string>
#include <vector>

#include "layoutweave/core/model.hpp"
#include "layoutweave/exporters/render.hpp"
#include "layoutweave/util/utf8.hpp"

namespace layoutweave::exporters {

struct MarkdownOptions {
  bool skip_headers_footers = false;
  // Precede each element with an "<!-- element:ID -->" comment so every
  // element can be traced back to the JSON result.
  bool element_anchors = true;
};

namespace detail {

inline bool is_bullet_glyph(char32_t c) {
  return c == U'\u2022' || c == U'\u25CF' || c == U'\u25AA' || c == U'\u2023' || c == U'\u00B7';
}

inline std::string trim_ascii(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::string single_line(std::string_view s) {
  std::string out;
  for (char c : s) out += (c == '\n' || c == '\r') ? ' ' : c;
  return out;
}

}  // namespace detail

// Splits list text into items: one per line, and additionally at every
// bullet glyph that starts a line or follows whitespace. Leading "- ", "* "
// and enumerators ("1.", "2)") are stripped; empty items dropped.
inline std::vector<std::string> extract_list_items(std::string_view text) {
  static const std::regex marker(R"(^(?:[-*+]|\d+[.)])(?:\s+|$))");
  std::vector<std::string> pieces;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::u32string line = utf8::decode(text.substr(start, end - start));
    std::u32string cur;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const bool boundary = i == 0 || line[i - 1] == U' ' || line[i - 1] == U'\t';
      if (detail::is_bullet_glyph(line[i]) && boundary) {
        pieces.push_back(utf8::encode(cur));
        cur.clear();
      } else {
        cur.push_back(line[i]);
      }
    }
    pieces.push_back(utf8::encode(cur));
    start = end + 1;
  }
  std::vector<std::string> items;
  for (const std::string& p : pieces) {
    std::string item = detail::trim_ascii(p);
    item = detail::trim_ascii(std::regex_replace(item, marker, "", std::regex_constants::format_first_only));
    if (!item.empty()) items.push_back(std::move(item));
  }
  return items;
}

inline std::string render_markdown_element(const Entity& e) {
  switch (e.type) {
    case ElementLabel::kTitle:
      return "## " + detail::single_line(e.value.text);
    case ElementLabel::kSection:
    case ElementLabel::kHeader:
      return "### " + detail::single_line(e.value.text);
    case ElementLabel::kListItem: {
      std::string out;
      for (const std::string& item : extract_list_items(e.value.text)) {
        if (!out.empty()) out += "\n";
        out += "- " + item;
      }
      return out;
    }
    case ElementLabel::kTable: {
      std::vector<std::string> parts;
      if (e.value.title && !e.value.title->empty()) parts.push_back("**" + *e.value.title + "**");
      if (e.value.summary && !e.value.summary->empty()) parts.push_back("*" + *e.value.summary + "*");
      if (e.value.data && !e.value.data->empty()) {
        parts.push_back(pipe_table(*e.value.data));
      } else if (!e.value.text.empty()) {
        parts.push_back(e.value.text);
      }
      return join(parts, "\n\n");
    }
    case ElementLabel::kImage: {
      std::string out = "![" + detail::single_line(e.value.title.value_or("")) + "](" + e.id + ")";
      if (e.value.summary && !e.value.summary->empty()) out += "\n\n*" + *e.value.summary + "*";
      return out;
    }
    case ElementLabel::kPageHeader:
    case ElementLabel::kPageFooter:
      return "> [" + std::string(to_string(e.type)) + "] " + detail::single_line(e.value.text);
    case ElementLabel::kText:
    case ElementLabel::kTableOfContent:
    case ElementLabel::kTableCaption:
    case ElementLabel::kImageCaption:
      return e.value.text;
  }
  return e.value.text;
}

// Pages in order, separated by a horizontal rule; elements in reading order,
// separated by blank lines.
inline std::string to_markdown(const DocumentResult& doc, const MarkdownOptions& opts = {}) {
  std::vector<std::string> pages;
  for (const PageResult& page : doc.pages) {
    std::vector<std::string> blocks;
    for (const Entity& e : page.elements) {
      if (opts.skip_headers_footers && is_page_furniture(e.type)) continue;
      std::string body = render_markdown_element(e);
      if (opts.element_anchors) {
        body = "<!-- element:" + e.id + " -->" + (body.empty() ? "" : "\n" + body);
      } else if (body.empty()) {
        continue;
      }
      blocks.push_back(std::move(body));
    }
    pages.push_back(join(blocks, "\n\n"));
  }
  return join(pages, "\n\n---\n\n") + "\n";
}

}  // namespace layoutweave::exporters
