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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mdm/common/jsonl.h"
#include "mdm/graph/property_graph.h"
#include "mdm/linkpred/train.h"

namespace mdm::graphsheet {

struct GraphFacts {
  std::size_t persons = 0;
  std::size_t orgs = 0;
  std::size_t links = 0;
  std::size_t attributes = 0;  // distinct attribute names over all nodes
  std::size_t relations = 0;   // distinct relation types
  std::map<std::size_t, std::size_t> component_sizes;  // size -> number of components
  double average_path_length = 0.0;
  std::size_t path_samples = 0;
  bool operator==(const GraphFacts&) const = default;
};

struct RunRecord {
  std::string dataset_id;
  std::string dataset_hash;  // FNV-1a of the serialized nodes and edges, hex
  GraphFacts graph;
  std::vector<std::string> protected_attributes;
  std::map<std::string, std::map<std::string, std::size_t>> protected_histograms;
  std::string model_kind;
  linkpred::TrainConfig config;
  linkpred::MetricsReport metrics;
  bool anonymized = false;
  std::string created_at;
  std::string toolkit_version;
  std::string platform;
};

struct CollectOptions {
  std::string dataset_id = "graph";
  std::vector<std::string> protected_attributes = {"gender", "ethnicity"};
  std::string created_at;  // caller-supplied so records are reproducible
  std::size_t path_samples = 100;
  std::uint64_t seed = 0;
};

std::string dataset_hash(const graph::PropertyGraph& g);
GraphFacts graph_facts(const graph::PropertyGraph& g, std::size_t path_samples, std::uint64_t seed);

RunRecord collect_facts(const graph::PropertyGraph& g, linkpred::ModelKind kind, const linkpred::TrainConfig& config,
                        const linkpred::MetricsReport& metrics, bool anonymized, const CollectOptions& options);

// Section titles in render order.
const std::vector<std::string>& section_titles();

enum class Format { kMarkdown, kJson };
Format parse_format(std::string_view name);

// Throws IncompleteRecord when identifying fields are empty.
std::string render_graphsheet(const RunRecord& record, Format format);

Json record_to_json(const RunRecord& record);
// Throws IncompleteRecord when a field is missing.
RunRecord record_from_json(const Json& j);

}  // namespace mdm::graphsheet
