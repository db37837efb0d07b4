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

#include "layoutweave/core/error.hpp"

namespace layoutweave::assembly {

// Column discovery over min-max scaled x centers.
struct ClusterParams {
  double eps = 0.3;
  int min_samples = 2;

  void validate() const {
    if (!(eps > 0.0)) throw ValidationError("cluster eps must be > 0");
    if (min_samples < 1) throw ValidationError("cluster min_samples must be >= 1");
  }
};

struct RowOrderParams {
  double angle_threshold_degrees = 50.0;

  void validate() const {
    if (!(angle_threshold_degrees > 0.0 && angle_threshold_degrees <= 90.0))
      throw ValidationError("row angle threshold must lie in (0, 90]");
  }
};

struct HeaderFooterParams {
  int fuzzy_threshold = 95;        // match needs ratio strictly greater
  double header_top_limit = 100.0;  // pixels
  double bottom_fraction = 0.2;     // "bottom of page" band, as a fraction of height
  std::optional<double> page_height;  // else the page's max element bottom

  void validate() const {
    if (fuzzy_threshold <= 0 || fuzzy_threshold > 100)
      throw ValidationError("fuzzy threshold must lie in (0, 100]");
    if (page_height && !(*page_height > 0.0)) throw ValidationError("page height must be > 0");
  }
};

struct AssemblyParams {
  ClusterParams cluster;
  RowOrderParams row;
  HeaderFooterParams header_footer;

  void validate() const {
    cluster.validate();
    row.validate();
    header_footer.validate();
  }
};

}  // namespace layoutweave::assembly
