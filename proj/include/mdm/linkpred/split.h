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
#include <utility>
#include <vector>

#include "mdm/graph/property_graph.h"

namespace mdm::linkpred {

// Unordered node pair stored with first < second.
using NodePair = std::pair<graph::NodeId, graph::NodeId>;

NodePair make_pair_key(graph::NodeId u, graph::NodeId v);

// Distinct adjacent pairs of g, ascending. Parallel edges with different
// relations count once.
std::vector<NodePair> linked_pairs(const graph::PropertyGraph& g);

struct LinkSplit {
  graph::PropertyGraph train_graph;  // g without the held-out pairs, same node ids
  std::vector<NodePair> train_edges;
  std::vector<NodePair> positives;
  std::vector<NodePair> negatives;
};

// Holds out ceil(positive_fraction * |pairs|) linked pairs and draws as many
// negatives with sample_negatives. Throws TooFewEdges below 10 pairs and
// InvalidArgument unless 0 < positive_fraction < 1.
LinkSplit split_links(const graph::PropertyGraph& g, double positive_fraction, std::uint64_t seed);

// One negative per positive: an endpoint of the positive paired with a node
// not adjacent to it in g. Throws ExhaustedCandidates when both endpoints are
// adjacent to every other node.
std::vector<NodePair> sample_negatives(const graph::PropertyGraph& g, const std::vector<NodePair>& positives,
                                       std::uint64_t seed);

}  // namespace mdm::linkpred
