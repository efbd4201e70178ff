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
#include <string>
#include <vector>

#include "mdm/common/jsonl.h"
#include "mdm/datagen/records.h"
#include "mdm/graph/property_graph.h"
#include "mdm/match/bucket.h"
#include "mdm/match/compare.h"
#include "mdm/match/weights.h"

namespace mdm::match {

struct MatchConfig {
  std::vector<std::string> bucket_recipes = default_bucket_recipes();
  CompareOptions compare;
  Thresholds thresholds;
  double w_max = 15.0;
  double disagreement = -4.0;
  std::size_t max_bucket_size = 0;
  unsigned threads = 1;

  static std::vector<std::string> default_bucket_recipes();
  static std::vector<std::string> default_compare_attributes();
  static MatchConfig defaults();
};

MatchConfig match_config_from_json(const Json& j);
Json match_config_to_json(const MatchConfig& c);

struct ScoredPair {
  std::size_t a = 0;  // record indices, a < b
  std::size_t b = 0;
  MatchScore score;
  Decision decision = Decision::kNoLink;
};

struct Resolution {
  std::vector<StandardizedRecord> standardized;
  std::vector<ScoredPair> pairs;                // every candidate pair
  std::vector<std::vector<std::size_t>> clusters;  // record indices, ordered by first member
  std::vector<std::size_t> cluster_of;          // record index -> cluster
};

// Transitive closure of Link decisions over bucketed candidate pairs.
Resolution resolve(const std::vector<datagen::SourceRecord>& records, const WeightTable& weights,
                   const MatchConfig& config);

// Re-derives clusters from already scored pairs under different thresholds.
std::vector<std::vector<std::size_t>> clusters_from_links(std::size_t n_records,
                                                          const std::vector<ScoredPair>& pairs,
                                                          const Thresholds& t);

struct PairwiseMetrics {
  std::size_t true_pairs = 0;
  std::size_t predicted_pairs = 0;
  std::size_t correct_pairs = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Pairwise precision/recall over record pairs placed in the same cluster.
PairwiseMetrics pairwise_metrics(const std::vector<std::size_t>& predicted_label,
                                 const std::vector<std::size_t>& true_label);

// Fraction of true same-entity pairs present among the candidates.
double candidate_recall(const std::vector<RecordPair>& candidates, const std::vector<std::size_t>& true_label);

// Resolved entities as graph nodes (attribute union with precedence
// structured > semi-structured > unstructured) plus the stated relationships
// lifted from source entities to resolved entities.
graph::PropertyGraph build_entity_graph(const std::vector<datagen::SourceRecord>& records,
                                        const Resolution& resolution,
                                        const datagen::GroundTruth& truth);

inline constexpr const char* kMatchScoresFile = "match_scores.jsonl";
inline constexpr const char* kClericalReviewFile = "clerical_review.jsonl";
inline constexpr const char* kEntitiesFile = "entities.jsonl";

Json score_to_json(const MatchScore& s);

// Writes match_scores.jsonl, clerical_review.jsonl and entities.jsonl.
void write_resolution(const std::vector<datagen::SourceRecord>& records, const Resolution& resolution,
                      const std::filesystem::path& dir);

// Reads entities.jsonl: one list of record ids per resolved entity.
std::vector<std::vector<std::string>> load_entity_members(const std::filesystem::path& dir);

}  // namespace mdm::match
