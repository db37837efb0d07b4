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
#include <string>
#include <vector>

#include "layoutweave/metrics/edit_distance.hpp"
#include "layoutweave/metrics/table_tree.hpp"
#include "layoutweave/util/utf8.hpp"

namespace layoutweave::metrics {

// Insert and delete cost 1. Relabel costs 1 when tags or spans differ; two
// td cells with equal spans cost the normalized Levenshtein distance of
// their texts; anything else is free.
inline double relabel_cost(const TableNode& a, const TableNode& b) {
  if (a.tag != b.tag || a.colspan != b.colspan || a.rowspan != b.rowspan) return 1.0;
  if (a.tag == "td") return normalized_levenshtein(utf8::decode(a.text), utf8::decode(b.text));
  return 0.0;
}

namespace detail {

struct PostorderTree {
  std::vector<const TableNode*> nodes;  // postorder
  std::vector<std::size_t> leftmost;    // leftmost leaf descendant, postorder index
  std::vector<std::size_t> keyroots;    // ascending

  explicit PostorderTree(const TableNode& root) {
    visit(root);
    std::vector<bool> seen(nodes.size(), false);
    for (std::size_t i = nodes.size(); i-- > 0;) {
      if (!seen[leftmost[i]]) {
        seen[leftmost[i]] = true;
        keyroots.push_back(i);
      }
    }
    std::sort(keyroots.begin(), keyroots.end());
  }

 private:
  std::size_t visit(const TableNode& n) {
    std::size_t first_leaf = 0;
    bool has_child = false;
    for (const TableNode& c : n.children) {
      const std::size_t l = visit(c);
      if (!has_child) first_leaf = l;
      has_child = true;
    }
    nodes.push_back(&n);
    const std::size_t idx = nodes.size() - 1;
    leftmost.push_back(has_child ? first_leaf : idx);
    return leftmost.back();
  }
};

}  // namespace detail

// Ordered tree edit distance (Zhang-Shasha).
inline double tree_edit_distance(const TableNode& ta, const TableNode& tb) {
  const detail::PostorderTree a(ta);
  const detail::PostorderTree b(tb);
  const std::size_t n = a.nodes.size();
  const std::size_t m = b.nodes.size();
  std::vector<std::vector<double>> td(n, std::vector<double>(m, 0.0));
  std::vector<std::vector<double>> fd(n + 1, std::vector<double>(m + 1, 0.0));

  for (std::size_t i : a.keyroots) {
    for (std::size_t j : b.keyroots) {
      const std::size_t li = a.leftmost[i];
      const std::size_t lj = b.leftmost[j];
      // fd[x][y]: forest a[li..li+x-1] vs b[lj..lj+y-1].
      const std::size_t rows = i - li + 1;
      const std::size_t cols = j - lj + 1;
      fd[0][0] = 0.0;
      for (std::size_t x = 1; x <= rows; ++x) fd[x][0] = fd[x - 1][0] + 1.0;
      for (std::size_t y = 1; y <= cols; ++y) fd[0][y] = fd[0][y - 1] + 1.0;
      for (std::size_t x = 1; x <= rows; ++x) {
        const std::size_t ia = li + x - 1;
        for (std::size_t y = 1; y <= cols; ++y) {
          const std::size_t jb = lj + y - 1;
          const double del = fd[x - 1][y] + 1.0;
          const double ins = fd[x][y - 1] + 1.0;
          if (a.leftmost[ia] == li && b.leftmost[jb] == lj) {
            const double rel = fd[x - 1][y - 1] + relabel_cost(*a.nodes[ia], *b.nodes[jb]);
            fd[x][y] = std::min({del, ins, rel});
            td[ia][jb] = fd[x][y];
          } else {
            const std::size_t px = a.leftmost[ia] - li;
            const std::size_t py = b.leftmost[jb] - lj;
            fd[x][y] = std::min({del, ins, fd[px][py] + td[ia][jb]});
          }
        }
      }
    }
  }
  return td[n - 1][m - 1];
}

// 1 - distance / max(|Ta|, |Tb|), clamped at 0.
inline double teds(const TableNode& ta, const TableNode& tb) {
  const double size = static_cast<double>(std::max(ta.size(), tb.size()));
  return std::max(0.0, 1.0 - tree_edit_distance(ta, tb) / size);
}

inline double teds_s(const TableNode& ta, const TableNode& tb) {
  return teds(structure_only(ta), structure_only(tb));
}

}  // namespace layoutweave::metrics
