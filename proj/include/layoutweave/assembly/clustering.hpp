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
#include <deque>
#include <numeric>
#include <span>
#include <vector>

#include "layoutweave/assembly/params.hpp"

namespace layoutweave::assembly {

inline constexpr int kNoise = -1;

// (v - min) / (max - min); all zeros when every value is equal.
inline std::vector<double> minmax_scale(std::span<const double> values) {
  std::vector<double> out(values.size(), 0.0);
  if (values.empty()) return out;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double range = *hi - *lo;
  if (range == 0.0) return out;
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - *lo) / range;
  return out;
}

// DBSCAN over 1-D points with |a - b| <= eps as the neighbourhood. A point
// is core when its neighbourhood (itself included) holds at least
// min_samples points. Clusters are numbered in the order their first core
// point appears in the input; a border point joins the first cluster that
// reaches it. Unreached points get kNoise.
inline std::vector<int> dbscan(std::span<const double> points, const ClusterParams& params) {
  params.validate();
  const std::size_t n = points.size();
  std::vector<int> labels(n, kNoise);
  if (n == 0) return labels;

  // Sorted order turns each neighbourhood into a contiguous window.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

  std::vector<std::size_t> lo(n);
  std::vector<std::size_t> hi(n);  // exclusive
  for (std::size_t r = 0, a = 0, b = 0; r < n; ++r) {
    const double x = points[order[r]];
    while (x - points[order[a]] > params.eps) ++a;
    if (b < r + 1) b = r + 1;
    while (b < n && points[order[b]] - x <= params.eps) ++b;
    lo[r] = a;
    hi[r] = b;
  }
  auto is_core = [&](std::size_t r) {
    return hi[r] - lo[r] >= static_cast<std::size_t>(params.min_samples);
  };

  int next = 0;
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r0 = rank[i];
    if (labels[i] != kNoise || !is_core(r0)) continue;
    const int cluster = next++;
    labels[i] = cluster;
    queue.push_back(r0);
    while (!queue.empty()) {
      const std::size_t r = queue.front();
      queue.pop_front();
      for (std::size_t s = lo[r]; s < hi[r]; ++s) {
        const std::size_t q = order[s];
        if (labels[q] != kNoise) continue;
        labels[q] = cluster;
        if (is_core(s)) queue.push_back(s);
      }
    }
  }
  return labels;
}

}  // namespace layoutweave::assembly
