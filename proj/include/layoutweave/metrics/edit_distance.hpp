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

// Character edit distances. String overloads operate on Unicode code points
// of UTF-8 input.

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string_view>
#include <vector>

#include "layoutweave/util/utf8.hpp"

namespace layoutweave::metrics {

// Minimum number of single-element insertions and deletions turning a into
// b (no substitutions).
template <typename T>
std::size_t indel_distance(std::basic_string_view<T> a, std::basic_string_view<T> b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = a[i - 1] == b[j - 1] ? diag : 1 + std::min(up, row[j - 1]);
      diag = up;
    }
  }
  return row[b.size()];
}

template <typename T>
std::size_t levenshtein(std::basic_string_view<T> a, std::basic_string_view<T> b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

inline std::size_t indel_distance(std::string_view a, std::string_view b) {
  const std::u32string ua = utf8::decode(a);
  const std::u32string ub = utf8::decode(b);
  return indel_distance<char32_t>(ua, ub);
}

inline std::size_t levenshtein(std::string_view a, std::string_view b) {
  const std::u32string ua = utf8::decode(a);
  const std::u32string ub = utf8::decode(b);
  return levenshtein<char32_t>(ua, ub);
}

// Levenshtein distance divided by the longer length; 0 for two empty strings.
inline double normalized_levenshtein(std::u32string_view a, std::u32string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 0.0;
  return static_cast<double>(levenshtein<char32_t>(a, b)) / static_cast<double>(longest);
}

// Normalized indel similarity: 1 - distance / (|reference| + |prediction|).
// Two empty strings score 1.
inline double nid(std::string_view reference, std::string_view prediction) {
  const std::u32string r = utf8::decode(reference);
  const std::u32string p = utf8::decode(prediction);
  const std::size_t total = r.size() + p.size();
  if (total == 0) return 1.0;
  return 1.0 - static_cast<double>(indel_distance<char32_t>(r, p)) / static_cast<double>(total);
}

}  // namespace layoutweave::metrics
