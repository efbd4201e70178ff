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
#include <filesystem>
#include <map>
#include <string>

#include "mdm/graphsheet/graphsheet.h"
#include "mdm/linkpred/train.h"
#include "mdm/match/resolve.h"

// Directory-level steps shared by the command line tool and the tests.
namespace mdm::pipeline {

// Written by anonymize into its output directory.
inline constexpr const char* kAnonymizedMarker = "anonymized.json";
// Written by resolve next to the resolved graph.
inline constexpr const char* kResolutionMetaFile = "resolution.json";
inline constexpr const char* kWeightsFile = "weights.json";

struct ResolveSummary {
  std::size_t records = 0;
  std::size_t candidate_pairs = 0;
  std::size_t links = 0;
  std::size_t clerical_review = 0;
  std::size_t entities = 0;
  std::size_t edges = 0;
  bool anonymized = false;
};

Json summary_to_json(const ResolveSummary& s);

// Resolves the three feeds of `sources` and writes match_scores.jsonl,
// clerical_review.jsonl, entities.jsonl, weights.json, the entity graph
// (nodes.jsonl, edges.jsonl) and resolution.json into `out`.
ResolveSummary resolve_sources(const std::filesystem::path& sources, const std::filesystem::path& out,
                               const match::MatchConfig& config);

// Record id -> resolved entity label, resolving in memory.
std::map<std::string, std::string> record_entities(const std::filesystem::path& sources,
                                                   const match::MatchConfig& config);

struct TrainOutcome {
  linkpred::TrainResult result;
  graphsheet::RunRecord record;
  std::size_t dropped_nodes = 0;
};

// Keeps components of at least config.min_component_size nodes, trains, and
// writes the model, the filtered graph (graph/) and run.json into run_dir.
TrainOutcome train_run(const std::filesystem::path& graph_dir, linkpred::ModelKind kind,
                       const linkpred::TrainConfig& config, const std::filesystem::path& run_dir,
                       const std::string& created_at);

}  // namespace mdm::pipeline
