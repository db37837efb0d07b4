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

#include <array>
#include <string>

#include "layoutweave/core/error.hpp"
#include "layoutweave/core/labels.hpp"

namespace layoutweave {

/// Per-label integer weights. A lower weight sits higher in the document
/// hierarchy; the knowledge-graph exporter derives parent/child edges from
/// weight differences. The mapping is total over ElementLabel.
class SchemaWeights {
 public:
  SchemaWeights() = default;

  static SchemaWeights defaults() { return SchemaWeights{}; }

  int weight_of(ElementLabel label) const { return weights_[index(label)]; }

  void set(ElementLabel label, int weight) {
    if (weight <= 0)
      throw ValidationError("schema weight for '" + std::string(to_string(label)) +
                            "' must be positive, got " + std::to_string(weight));
    weights_[index(label)] = weight;
  }

  friend bool operator==(const SchemaWeights&, const SchemaWeights&) = default;

 private:
  static std::size_t index(ElementLabel label) { return static_cast<std::size_t>(label); }

  // Indexed by ElementLabel declaration order.
  std::array<int, 12> weights_{
      1,  // title
      2,  // header
      2,  // section
      5,  // page_header
      7,  // page_footer
      6,  // text
      6,  // list_item
      4,  // table_of_content
      3,  // table
      3,  // image
      4,  // table_caption
      4,  // image_caption
  };
};

inline int weight_of(ElementLabel label, const SchemaWeights& schema) {
  return schema.weight_of(label);
}

}  // namespace layoutweave
