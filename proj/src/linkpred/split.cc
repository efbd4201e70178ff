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

#include "mdm/linkpred/split.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "mdm/common/error.h"
#include "mdm/common/rng.h"

namespace mdm::linkpred {

using graph::NodeId;
using graph::PropertyGraph;

NodePair make_pair_key(NodeId u, NodeId v) { return u < v ? NodePair{u, v} : NodePair{v, u}; }

std::vector<NodePair> linked_pairs(const PropertyGraph& g) {
  std::set<NodePair> pairs;
  for (const auto& e : g.edges()) pairs.insert(make_pair_key(e.src, e.dst));
  return {pairs.begin(), pairs.end()};
}

LinkSplit split_links(const PropertyGraph& g, double positive_fraction, std::uint64_t seed) {
  if (!(positive_fraction > 0.0 && positive_fraction < 1.0))
    throw Error(ErrorCode::kInvalidArgument, "positive_fraction must be in (0, 1)");
  auto pairs = linked_pairs(g);
  if (pairs.size() < 10) throw Error(ErrorCode::kTooFewEdges, "need at least 10 edges to split");
  // The epsilon keeps 0.1 * 30 from rounding up to 4.
  const auto held = static_cast<std::size_t>(std::ceil(positive_fraction * pairs.size() - 1e-9));

  Rng rng(seed);
  rng.shuffle(pairs);
  LinkSplit split;
  split.positives.assign(pairs.begin(), pairs.begin() + held);
  split.train_edges.assign(pairs.begin() + held, pairs.end());
  std::sort(split.positives.begin(), split.positives.end());
  std::sort(split.train_edges.begin(), split.train_edges.end());

  const std::set<NodePair> removed(split.positives.begin(), split.positives.end());
  std::vector<graph::Edge> kept;
  for (const auto& e : g.edges())
    if (!removed.count(make_pair_key(e.src, e.dst))) kept.push_back(e);
  split.train_graph = PropertyGraph::build(g.nodes(), std::move(kept));
  split.negatives = sample_negatives(g, split.positives, rng.fork(1).next());
  return split;
}

std::vector<NodePair> sample_negatives(const PropertyGraph& g, const std::vector<NodePair>& positives,
                                       std::uint64_t seed) {
  Rng rng(seed);
  const auto n = static_cast<NodeId>(g.num_nodes());
  auto open = [&](NodeId a) { return g.neighbor_nodes(a).size() + 1 < n; };
  auto draw = [&](NodeId a) {
    // Rejection first; fall back to enumerating when a is nearly saturated.
    for (int attempt = 0; attempt < 64; ++attempt) {
      const auto b = static_cast<NodeId>(rng.below(n));
      if (b != a && !g.has_edge(a, b)) return b;
    }
    std::vector<NodeId> options;
    for (NodeId b = 0; b < n; ++b)
      if (b != a && !g.has_edge(a, b)) options.push_back(b);
    return options[rng.below(options.size())];
  };

  std::vector<NodePair> out;
  out.reserve(positives.size());
  for (const auto& [u, v] : positives) {
    NodeId a = rng.bernoulli(0.5) ? u : v;
    if (!open(a)) a = a == u ? v : u;
    if (!open(a))
      throw Error(ErrorCode::kExhaustedCandidates, "both endpoints are adjacent to every node");
    out.push_back(make_pair_key(a, draw(a)));
  }
  return out;
}

}  // namespace mdm::linkpred
