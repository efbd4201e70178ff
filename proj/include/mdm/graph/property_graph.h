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

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace mdm::graph {

using NodeId = std::uint32_t;
inline constexpr NodeId kInvalidNode = std::numeric_limits<NodeId>::max();

enum class NodeKind { kPerson, kOrg };

const char* kind_name(NodeKind kind);
NodeKind parse_kind(std::string_view name);

using AttributeMap = std::map<std::string, std::string>;

struct Node {
  NodeId id = 0;
  NodeKind kind = NodeKind::kPerson;
  // External key (e.g. the resolved entity's record ids). Optional.
  std::string key;
  AttributeMap attributes;

  bool operator==(const Node&) const = default;
};

// Undirected: (u,v,r) and (v,u,r) are the same edge. Stored with src < dst.
struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  std::string relation;
  AttributeMap properties;

  bool operator==(const Edge&) const = default;
};

struct Neighbor {
  NodeId node;
  std::size_t edge;  // index into PropertyGraph::edges()
};

// Immutable after build(). Safe for concurrent readers.
class PropertyGraph {
 public:
  PropertyGraph() = default;

  // Throws DuplicateNode (ids not dense/unique), DanglingEdge, SelfLoop,
  // DuplicateEdge. Distinct relations between the same pair are allowed.
  static PropertyGraph build(std::vector<Node> nodes, std::vector<Edge> edges);

  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Node& node(NodeId id) const;

  // Incident edges ordered by (neighbor, edge index).
  std::span<const Neighbor> neighbors(NodeId id) const;

  // Distinct adjacent node ids, ascending.
  std::vector<NodeId> neighbor_nodes(NodeId id) const;

  // Number of incident edges.
  std::size_t degree(NodeId id) const { return neighbors(id).size(); }

  bool contains(NodeId id) const { return id < nodes_.size(); }
  bool has_edge(NodeId u, NodeId v) const;

  bool operator==(const PropertyGraph& other) const {
    return nodes_ == other.nodes_ && edges_ == other.edges_;
  }

 private:
  static std::uint64_t pair_key(NodeId u, NodeId v);

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::unordered_set<std::uint64_t> pairs_;
};

}  // namespace mdm::graph
