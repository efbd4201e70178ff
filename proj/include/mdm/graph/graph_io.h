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

#include <filesystem>

#include "mdm/common/jsonl.h"
#include "mdm/graph/property_graph.h"

namespace mdm::graph {

// Writes <dir>/nodes.jsonl and <dir>/edges.jsonl, creating dir if needed.
void save_graph(const PropertyGraph& g, const std::filesystem::path& dir);

// IoError if a file is missing; SchemaMismatch for malformed rows, dangling
// edges or any other structural violation.
PropertyGraph load_graph(const std::filesystem::path& dir);

Json node_to_json(const Node& node);
Json edge_to_json(const Edge& edge);

}  // namespace mdm::graph
