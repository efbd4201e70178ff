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
#include <filesystem>
#include <set>
#include <vector>

#include "mdm/common/jsonl.h"
#include "mdm/graph/property_graph.h"
#include "mdm/linkpred/features.h"
#include "mdm/linkpred/models.h"
#include "mdm/linkpred/split.h"

namespace mdm::linkpred {

struct TrainConfig {
  double positive_fraction = 0.10;
  double negative_ratio = 1.0;
  std::size_t batch_subgraphs = 8;
  std::size_t anchors = 64;
  std::size_t epochs = 200;
  double learning_rate = 0.01;
  std::uint64_t seed = 42;
  std::size_t runs = 3;  // run r uses seed + r
  std::uint32_t distance_cutoff = 6;
  std::size_t hidden_dim = 32;
  std::size_t layers = 2;
  std::size_t min_component_size = 10;
  std::vector<FeatureSpec> features = FeatureEncoder::default_specs();

  // ConfigError on out-of-range values.
  void validate() const;
  Json to_json() const;
  // Missing keys keep their defaults; unknown keys raise ConfigError.
  static TrainConfig from_json(const Json& j);
};

// Threshold-based fields count scores >= threshold as predicted links.
struct Metrics {
  double roc_auc = 0.0;
  double accuracy = 0.0;
  double positive_sample_accuracy = 0.0;
  double positive_predictions_on_negatives = 0.0;
};

struct MetricsReport {
  Metrics mean;
  Metrics std_dev;  // sample standard deviation over runs; 0 for one run
  std::vector<Metrics> runs;
};

Json metrics_to_json(const Metrics& m);
Metrics metrics_from_json(const Json& j);
Json report_to_json(const MetricsReport& r);
MetricsReport report_from_json(const Json& j);
MetricsReport summarize(const std::vector<Metrics>& runs);

// Probability that a random positive outranks a random negative, ties
// counting half. Throws SingleClass when either class is empty.
double roc_auc(const std::vector<double>& scores, const std::vector<int>& labels);

// accuracy, positive_sample_accuracy and positive_predictions_on_negatives;
// roc_auc is left at 0. Throws InvalidArgument when both lists are empty.
Metrics mdm_metrics(const std::vector<double>& positive_scores, const std::vector<double>& negative_scores,
                    double threshold = 0.5);

// All four fields.
Metrics evaluate(const std::vector<double>& positive_scores, const std::vector<double>& negative_scores,
                 double threshold = 0.5);

struct LinkModel {
  ModelKind kind = ModelKind::kGcn;
  TrainConfig config;
  FeatureEncoder encoder;
  AnchorSets anchors;
  ModelParams params;
};

struct TrainResult {
  LinkModel model;  // from the first run
  MetricsReport report;
  std::vector<double> final_loss;  // per run
};

// Throws InvalidArgument when some component of g is smaller than
// config.min_component_size, Divergence when the loss becomes NaN.
TrainResult train(const graph::PropertyGraph& g, const TrainConfig& config, ModelKind kind);

// Full-batch Adam on a fixed labelled pair set; returns the last loss.
double fit_pairs(ModelParams& params, const Propagation& prop, const DenseMatrix& x,
                 const std::vector<NodePair>& pairs, const std::vector<double>& labels, std::size_t epochs,
                 double learning_rate);

// Embeddings of every node of g (features, distances and adjacency from g).
DenseMatrix embed(const LinkModel& model, const graph::PropertyGraph& g);

struct PredictedLink {
  graph::NodeId watch = 0;
  graph::NodeId other = 0;
  double probability = 0.0;
  bool operator==(const PredictedLink&) const = default;
};

// Scores (w, v) for w in the watchlist and v neither w, a neighbour of w nor
// on the watchlist; max_hops > 0 restricts v to that many hops from w.
// Sorted by probability descending, then (watch, other). Throws
// EmptyWatchlist and UnknownNode.
std::vector<PredictedLink> watchlist_predict(const LinkModel& model, const graph::PropertyGraph& g,
                                             const std::set<graph::NodeId>& watchlist, std::size_t top_k,
                                             std::uint32_t max_hops = 0);

// <dir>/model.json (header: kind, config, encoder, anchors, tensor shapes)
// and <dir>/params.bin (little-endian float64 tensors in header order).
void save_model(const LinkModel& model, const std::filesystem::path& dir);
LinkModel load_model(const std::filesystem::path& dir);

}  // namespace mdm::linkpred
