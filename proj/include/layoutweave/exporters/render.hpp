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
#include <string>
#include <string_view>
#include <vector>

#include "layoutweave/core/model.hpp"

namespace layoutweave::exporters {

inline std::string join(std::span<const std::string> parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

inline std::string escape_pipe_cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') {
      out += "\\|";
    } else if (c == '\n') {
      out += "<br>";
    } else if (c != '\r') {
      out += c;
    }
  }
  return out;
}

// Header from the first row's column order.
inline std::string pipe_table(const std::vector<DataRow>& rows) {
  if (rows.empty()) return {};
  std::string out = "|";
  for (const auto& [key, cell] : rows.front()) out += " " + escape_pipe_cell(key) + " |";
  out += "\n|";
  for (std::size_t i = 0; i < rows.front().size(); ++i) out += " --- |";
  for (const DataRow& row : rows) {
    out += "\n|";
    for (const auto& [key, cell] : row) out += " " + escape_pipe_cell(cell) + " |";
  }
  return out;
}

inline std::string escape_html(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

inline std::string html_table(const std::vector<DataRow>& rows) {
  if (rows.empty()) return {};
  std::string out = "<table><thead><tr>";
  for (const auto& [key, cell] : rows.front()) out += "<th>" + escape_html(key) + "</th>";
  out += "</tr></thead><tbody>";
  for (const DataRow& row : rows) {
    out += "<tr>";
    for (const auto& [key, cell] : row) out += "<td>" + escape_html(cell) + "</td>";
    out += "</tr>";
  }
  out += "</tbody></table>";
  return out;
}

// Text an element contributes to retrieval chunks: title, summary, text and
// rendered data rows, whichever are present, one per line.
inline std::string element_content(const Entity& e) {
  std::vector<std::string> parts;
  if (e.value.title && !e.value.title->empty()) parts.push_back(*e.value.title);
  if (e.value.summary && !e.value.summary->empty()) parts.push_back(*e.value.summary);
  if (!e.value.text.empty()) parts.push_back(e.value.text);
  if (e.value.data && !e.value.data->empty()) parts.push_back(pipe_table(*e.value.data));
  return join(parts, "\n");
}

}  // namespace layoutweave::exporters
