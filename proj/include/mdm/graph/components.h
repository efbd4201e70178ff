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
#include <vector>

#include "mdm/graph/property_graph.h"

namespace mdm::graph {

// Each component sorted ascending; components ordered by smallest member.
std::vector<std::vector<NodeId>> connected_components(const PropertyGraph& g);

struct FilteredGraph {
  PropertyGraph graph;
  std::vector<NodeId> new_to_old;
  std::vector<NodeId> old_to_new;  // kInvalidNode for dropped nodes
};

// Subgraph induced on `keep` (any order, no duplicates); ids re-densified in
// ascending order of the original id.
FilteredGraph induced_subgraph(const PropertyGraph& g, std::vector<NodeId> keep);

// Keeps components with at least min_size nodes. Throws EmptyResult when
// nothing survives and InvalidArgument for min_size == 0.
FilteredGraph filter_components(const PropertyGraph& g, std::size_t min_size = 10);

}  // namespace mdm::graph
