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

#include "mdm/graph/components.h"

#include <algorithm>
#include <deque>

#include "mdm/common/error.h"

namespace mdm::graph {

std::vector<std::vector<NodeId>> connected_components(const PropertyGraph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<bool> visited(n, false);
  std::vector<std::vector<NodeId>> components;
  std::deque<NodeId> queue;
  for (NodeId start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<NodeId> members;
    visited[start] = true;
    queue.push_back(start);
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      members.push_back(u);
      for (const auto& nb : g.neighbors(u)) {
        if (!visited[nb.node]) {
          visited[nb.node] = true;
          queue.push_back(nb.node);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  return components;
}

FilteredGraph induced_subgraph(const PropertyGraph& g, std::vector<NodeId> keep) {
  std::sort(keep.begin(), keep.end());
  FilteredGraph out;
  out.old_to_new.assign(g.num_nodes(), kInvalidNode);
  out.new_to_old = keep;
  std::vector<Node> nodes;
  nodes.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.old_to_new[keep[i]] = static_cast<NodeId>(i);
    Node node = g.node(keep[i]);
    node.id = static_cast<NodeId>(i);
    nodes.push_back(std::move(node));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const NodeId a = out.old_to_new[e.src];
    const NodeId b = out.old_to_new[e.dst];
    if (a == kInvalidNode || b == kInvalidNode) continue;
    Edge copy = e;
    copy.src = a;
    copy.dst = b;
    edges.push_back(std::move(copy));
  }
  out.graph = PropertyGraph::build(std::move(nodes), std::move(edges));
  return out;
}

FilteredGraph filter_components(const PropertyGraph& g, std::size_t min_size) {
  if (min_size == 0) throw Error(ErrorCode::kInvalidArgument, "min_size must be >= 1");
  std::vector<NodeId> keep;
  for (const auto& component : connected_components(g)) {
    if (component.size() >= min_size) keep.insert(keep.end(), component.begin(), component.end());
  }
  if (keep.empty()) {
    throw Error(ErrorCode::kEmptyResult,
                "no component has at least " + std::to_string(min_size) + " nodes");
  }
  return induced_subgraph(g, std::move(keep));
}

}  // namespace mdm::graph
