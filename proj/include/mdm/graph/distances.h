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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mdm/graph/property_graph.h"

namespace mdm::graph {

// Hop distances from one source, truncated at a cutoff. A missing entry
// means the node is farther than the cutoff (or unreachable).
struct DistanceRow {
  NodeId source = 0;
  std::uint32_t cutoff = 0;
  std::unordered_map<NodeId, std::uint32_t> distance;

  std::optional<std::uint32_t> at(NodeId node) const;
  // Entries sorted by node id.
  std::vector<std::pair<NodeId, std::uint32_t>> sorted() const;
};

// Exact BFS distances for every node within `cutoff` hops of `source`.
DistanceRow bfs_distances(const PropertyGraph& g, NodeId source, std::uint32_t cutoff);

class DistanceCache {
 public:
  DistanceCache() = default;

  // Rows for each source. With threads > 1 rows are computed concurrently;
  // the result does not depend on the schedule.
  static DistanceCache compute(const PropertyGraph& g, std::span<const NodeId> sources,
                               std::uint32_t cutoff, unsigned threads = 1);

  std::uint32_t cutoff() const { return cutoff_; }
  bool has_row(NodeId source) const { return rows_.count(source) > 0; }
  const DistanceRow& row(NodeId source) const;

  // Looks up d(a,b) from whichever endpoint has a cached row.
  std::optional<std::uint32_t> distance(NodeId a, NodeId b) const;

 private:
  std::uint32_t cutoff_ = 0;
  std::map<NodeId, DistanceRow> rows_;
};

// Mean hop distance over reachable (source, target) pairs, target != source,
// using untruncated BFS from up to `samples` sources drawn with `seed` (every
// node when samples >= n). Returns 0 for graphs without edges.
double sampled_mean_path_length(const PropertyGraph& g, std::size_t samples, std::uint64_t seed);

}  // namespace mdm::graph
