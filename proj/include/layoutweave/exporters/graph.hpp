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
#include <set>
#include <string>
#include <vector>

#include "layoutweave/core/json_io.hpp"
#include "layoutweave/core/model.hpp"
#include "layoutweave/exporters/render.hpp"

namespace layoutweave::exporters {

enum class NodeKind { kRoot, kPage, kElement };
enum class Relation { kContains, kSibling, kParentChild };

inline std::string_view to_string(NodeKind k) {
  switch (k) {
    case NodeKind::kRoot:
      return "root";
    case NodeKind::kPage:
      return "page";
    case NodeKind::kElement:
      return "element";
  }
  return "element";
}

inline std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::kContains:
      return "contains";
    case Relation::kSibling:
      return "sibling";
    case Relation::kParentChild:
      return "parent-child";
  }
  return "contains";
}

struct GraphNode {
  std::string id;
  NodeKind kind = NodeKind::kElement;
  std::string label;
  std::optional<int> weight;
  std::optional<std::string> text;  // element content, element nodes only

  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct GraphEdge {
  std::string from;
  std::string to;
  Relation relation = Relation::kContains;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct DocumentGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
};

inline std::string page_node_id(int page_number) { return "page:" + std::to_string(page_number); }
inline constexpr const char* kRootNodeId = "doc:root";

// root -contains-> page -contains-> first element; consecutive elements are
// siblings when their weights match, otherwise parent-child from the lower
// weight (higher in the hierarchy) to the higher one.
inline DocumentGraph to_graph(const DocumentResult& doc) {
  DocumentGraph g;
  g.nodes.push_back({kRootNodeId, NodeKind::kRoot, doc.filename, std::nullopt, std::nullopt});
  std::set<std::string, std::less<>> ids{kRootNodeId};
  for (const PageResult& page : doc.pages) {
    const std::string pid = page_node_id(page.page_number);
    ids.insert(pid);
    g.nodes.push_back({pid, NodeKind::kPage, "page " + std::to_string(page.page_number), std::nullopt,
                       std::nullopt});
    g.edges.push_back({kRootNodeId, pid, Relation::kContains});
    for (std::size_t i = 0; i < page.elements.size(); ++i) {
      const Entity& e = page.elements[i];
      if (!ids.insert(e.id).second) throw ValidationError("graph node id collision: " + e.id);
      g.nodes.push_back({e.id, NodeKind::kElement, std::string(to_string(e.type)), e.weight,
                         element_content(e)});
      if (i == 0) {
        g.edges.push_back({pid, e.id, Relation::kContains});
        continue;
      }
      const Entity& prev = page.elements[i - 1];
      if (prev.weight == e.weight) {
        g.edges.push_back({prev.id, e.id, Relation::kSibling});
      } else if (prev.weight < e.weight) {
        g.edges.push_back({prev.id, e.id, Relation::kParentChild});
      } else {
        g.edges.push_back({e.id, prev.id, Relation::kParentChild});
      }
    }
  }
  return g;
}

inline Json to_json(const DocumentGraph& g) {
  Json nodes = Json::array();
  for (const GraphNode& n : g.nodes) {
    Json j{{"id", n.id}, {"kind", to_string(n.kind)}, {"label", n.label}};
    if (n.weight) j["weight"] = *n.weight;
    if (n.text) j["text"] = *n.text;
    nodes.push_back(std::move(j));
  }
  Json edges = Json::array();
  for (const GraphEdge& e : g.edges)
    edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"relation", to_string(e.relation)}});
  return Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

}  // namespace layoutweave::exporters
