// Copyright 2026 The MDM Link Prediction Authors.
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

#include "mdm/graph/property_graph.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "mdm/common/error.h"

namespace mdm::graph {

const char* kind_name(NodeKind kind) {
  return kind == NodeKind::kOrg ? "Org" : "Person";
}

NodeKind parse_kind(std::string_view name) {
  if (name == "Person") return NodeKind::kPerson;
  if (name == "Org") return NodeKind::kOrg;
  throw Error(ErrorCode::kSchemaMismatch, "unknown node kind '" + std::string(name) + "'");
}

std::uint64_t PropertyGraph::pair_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

PropertyGraph PropertyGraph::build(std::vector<Node> nodes, std::vector<Edge> edges) {
  PropertyGraph g;
  const std::size_t n = nodes.size();
  std::vector<bool> seen(n, false);
  for (const auto& node : nodes) {
    if (node.id >= n || seen[node.id]) {
      throw Error(ErrorCode::kDuplicateNode,
                  "node id " + std::to_string(node.id) + " is duplicated or not dense");
    }
    seen[node.id] = true;
  }
  std::sort(nodes.begin(), nodes.end(),
            [](const Node& a, const Node& b) { return a.id < b.id; });

  std::set<std::tuple<NodeId, NodeId, std::string>> triples;
  for (auto& e : edges) {
    if (e.src >= n || e.dst >= n) {
      throw Error(ErrorCode::kDanglingEdge, "edge (" + std::to_string(e.src) + "," +
                                                std::to_string(e.dst) + ") references a missing node");
    }
    if (e.src == e.dst) {
      throw Error(ErrorCode::kSelfLoop, "self loop on node " + std::to_string(e.src));
    }
    if (e.src > e.dst) std::swap(e.src, e.dst);
    if (!triples.emplace(e.src, e.dst, e.relation).second) {
      throw Error(ErrorCode::kDuplicateEdge, "duplicate edge (" + std::to_string(e.src) + "," +
                                                 std::to_string(e.dst) + "," + e.relation + ")");
    }
  }

  g.nodes_ = std::move(nodes);
  g.edges_ = std::move(edges);
  g.adjacency_.assign(n, {});
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    const auto& e = g.edges_[i];
    g.adjacency_[e.src].push_back({e.dst, i});
    g.adjacency_[e.dst].push_back({e.src, i});
    g.pairs_.insert(pair_key(e.src, e.dst));
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) {
      return std::tie(a.node, a.edge) < std::tie(b.node, b.edge);
    });
  }
  return g;
}

const Node& PropertyGraph::node(NodeId id) const {
  if (!contains(id)) throw Error(ErrorCode::kUnknownNode, "node " + std::to_string(id));
  return nodes_[id];
}

std::span<const Neighbor> PropertyGraph::neighbors(NodeId id) const {
  if (!contains(id)) throw Error(ErrorCode::kUnknownNode, "node " + std::to_string(id));
  return adjacency_[id];
}

std::vector<NodeId> PropertyGraph::neighbor_nodes(NodeId id) const {
  std::vector<NodeId> out;
  for (const auto& nb : neighbors(id)) {
    if (out.empty() || out.back() != nb.node) out.push_back(nb.node);
  }
  return out;
}

bool PropertyGraph::has_edge(NodeId u, NodeId v) const {
  return pairs_.count(pair_key(u, v)) > 0;
}

}  // namespace mdm::graph
