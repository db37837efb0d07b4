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
#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "layoutweave/core/error.hpp"
#include "layoutweave/util/log.hpp"
#include "layoutweave/util/utf8.hpp"

namespace layoutweave::metrics {

// Ordered labelled tree of a table: table -> [thead|tbody] -> tr -> td.
// Only td nodes carry text.
struct TableNode {
  std::string tag;
  std::string text;
  int colspan = 1;
  int rowspan = 1;
  std::vector<TableNode> children;

  std::size_t size() const {
    std::size_t n = 1;
    for (const TableNode& c : children) n += c.size();
    return n;
  }

  friend bool operator==(const TableNode&, const TableNode&) = default;
};

inline TableNode make_node(std::string tag) {
  TableNode n;
  n.tag = std::move(tag);
  return n;
}

// Copy with every cell text cleared; spans are kept.
inline TableNode structure_only(TableNode t) {
  t.text.clear();
  for (TableNode& c : t.children) c = structure_only(std::move(c));
  return t;
}

namespace detail {

struct Tag {
  std::string name;  // lower case
  bool closing = false;
  std::map<std::string, std::string> attrs;
};

inline std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Parses the inside of "<...>".
inline Tag parse_tag(std::string_view body) {
  Tag t;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
  };
  skip_ws();
  if (i < body.size() && body[i] == '/') {
    t.closing = true;
    ++i;
  }
  const std::size_t name_start = i;
  while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i])) && body[i] != '/' &&
         body[i] != '>')
    ++i;
  t.name = lower(body.substr(name_start, i - name_start));
  while (i < body.size()) {
    skip_ws();
    const std::size_t k = i;
    while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i])) && body[i] != '=' &&
           body[i] != '/')
      ++i;
    if (i == k) {
      ++i;
      continue;
    }
    std::string key = lower(body.substr(k, i - k));
    skip_ws();
    std::string value;
    if (i < body.size() && body[i] == '=') {
      ++i;
      skip_ws();
      if (i < body.size() && (body[i] == '"' || body[i] == '\'')) {
        const char q = body[i++];
        const std::size_t v = i;
        while (i < body.size() && body[i] != q) ++i;
        value = std::string(body.substr(v, i - v));
        if (i < body.size()) ++i;
      } else {
        const std::size_t v = i;
        while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) ++i;
        value = std::string(body.substr(v, i - v));
      }
    }
    t.attrs[std::move(key)] = std::move(value);
  }
  return t;
}

inline std::string decode_entities(std::string_view s) {
  static const std::map<std::string, std::string, std::less<>> named{
      {"amp", "&"}, {"lt", "<"}, {"gt", ">"}, {"quot", "\""}, {"apos", "'"}, {"nbsp", " "}};
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '&') {
      out += s[i];
      continue;
    }
    const std::size_t semi = s.find(';', i);
    if (semi == std::string_view::npos || semi - i > 10) {
      out += s[i];
      continue;
    }
    const std::string_view ent = s.substr(i + 1, semi - i - 1);
    if (!ent.empty() && ent[0] == '#') {
      std::uint32_t code = 0;
      const bool hex = ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X');
      const std::string_view digits = ent.substr(hex ? 2 : 1);
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), code, hex ? 16 : 10);
      if (ec == std::errc() && p == digits.data() + digits.size() && !digits.empty()) {
        utf8::append(out, static_cast<char32_t>(code));
        i = semi;
        continue;
      }
    } else if (auto it = named.find(ent); it != named.end()) {
      out += it->second;
      i = semi;
      continue;
    }
    out += s[i];
  }
  return out;
}

inline std::string collapse_whitespace(std::string_view s) {
  std::string out;
  bool pending = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending = !out.empty();
    } else {
      if (pending) out += ' ';
      pending = false;
      out += c;
    }
  }
  return out;
}

inline int parse_span(const std::map<std::string, std::string>& attrs, const char* key) {
  auto it = attrs.find(key);
  if (it == attrs.end()) return 1;
  int v = 0;
  const std::string& s = it->second;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 1) {
    log::warn(std::string("bad ") + key + " value '" + s + "', using 1");
    return 1;
  }
  return v;
}

}  // namespace detail

// Tolerant parse of the first <table> in `html`. th cells become td, tfoot
// becomes tbody, cell text is entity-decoded and whitespace-collapsed, and
// markup inside cells (including nested tables) contributes only its text.
// Unclosed rows and cells are closed at the next row/cell/section boundary.
inline TableNode parse_table_html(std::string_view html) {
  TableNode table = make_node("table");
  bool in_table = false;
  int nested = 0;
  TableNode* section = nullptr;
  TableNode* row = nullptr;
  TableNode* cell = nullptr;
  std::string cell_text;

  auto close_cell = [&] {
    if (cell != nullptr) cell->text = detail::collapse_whitespace(detail::decode_entities(cell_text));
    cell = nullptr;
    cell_text.clear();
  };
  auto close_row = [&] {
    close_cell();
    row = nullptr;
  };
  // Child pointers stay valid because a parent never gains children after a
  // sibling of it has been opened.
  auto open_row = [&] {
    close_row();
    TableNode& parent = section != nullptr ? *section : table;
    parent.children.push_back(make_node("tr"));
    row = &parent.children.back();
  };

  std::size_t i = 0;
  bool done = false;
  while (i < html.size() && !done) {
    if (html[i] != '<') {
      const std::size_t next = html.find('<', i);
      const std::size_t end = next == std::string_view::npos ? html.size() : next;
      if (in_table && cell != nullptr) cell_text += html.substr(i, end - i);
      i = end;
      continue;
    }
    if (html.substr(i, 4) == "<!--") {
      const std::size_t end = html.find("-->", i + 4);
      i = end == std::string_view::npos ? html.size() : end + 3;
      continue;
    }
    std::size_t j = i + 1;
    char quote = 0;
    while (j < html.size() && (quote != 0 || html[j] != '>')) {
      if (quote == 0 && (html[j] == '"' || html[j] == '\'')) {
        quote = html[j];
      } else if (quote != 0 && html[j] == quote) {
        quote = 0;
      }
      ++j;
    }
    const detail::Tag tag = detail::parse_tag(html.substr(i + 1, j - i - 1));
    i = j < html.size() ? j + 1 : html.size();

    if (!in_table) {
      if (tag.name == "table" && !tag.closing) in_table = true;
      continue;
    }
    if (tag.name == "table") {
      if (!tag.closing) {
        ++nested;
      } else if (nested > 0) {
        --nested;
      } else {
        done = true;
      }
      continue;
    }
    if (nested > 0) {
      if (cell != nullptr && (tag.name == "td" || tag.name == "th" || tag.name == "tr" || tag.name == "br"))
        cell_text += ' ';
      continue;
    }
    if (tag.name == "thead" || tag.name == "tbody" || tag.name == "tfoot") {
      close_row();
      if (tag.closing) {
        section = nullptr;
      } else {
        table.children.push_back(make_node(tag.name == "thead" ? "thead" : "tbody"));
        section = &table.children.back();
      }
    } else if (tag.name == "tr") {
      if (tag.closing) {
        close_row();
      } else {
        open_row();
      }
    } else if (tag.name == "td" || tag.name == "th") {
      if (tag.closing) {
        close_cell();
      } else {
        close_cell();
        if (row == nullptr) open_row();
        TableNode td = make_node("td");
        td.colspan = detail::parse_span(tag.attrs, "colspan");
        td.rowspan = detail::parse_span(tag.attrs, "rowspan");
        row->children.push_back(std::move(td));
        cell = &row->children.back();
      }
    } else if (tag.name == "br" && cell != nullptr) {
      cell_text += ' ';
    }
  }
  if (!in_table) throw ParseError("no table found");
  close_row();
  return table;
}

}  // namespace layoutweave::metrics
