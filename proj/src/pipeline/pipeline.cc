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

#include "mdm/pipeline/pipeline.h"

#include "mdm/common/error.h"
#include "mdm/datagen/sources_io.h"
#include "mdm/graph/components.h"
#include "mdm/graph/graph_io.h"
#include "mdm/match/standardize.h"
#include "mdm/service/service.h"

namespace mdm::pipeline {

namespace fs = std::filesystem;

namespace {

match::Resolution resolve_feeds(const std::vector<datagen::SourceRecord>& records, const match::MatchConfig& config,
                                match::WeightTable* weights_out = nullptr) {
  std::vector<match::StandardizedRecord> standardized;
  standardized.reserve(records.size());
  for (const auto& r : records) standardized.push_back(match::standardize(r));
  auto weights = match::compute_weights(standardized, config.w_max, config.disagreement);
  auto res = match::resolve(records, weights, config);
  if (weights_out) *weights_out = std::move(weights);
  return res;
}

}  // namespace

Json summary_to_json(const ResolveSummary& s) {
  return {{"records", s.records},   {"candidate_pairs", s.candidate_pairs}, {"links", s.links},
          {"clerical_review", s.clerical_review}, {"entities", s.entities}, {"edges", s.edges},
          {"anonymized", s.anonymized}};
}

ResolveSummary resolve_sources(const fs::path& sources, const fs::path& out, const match::MatchConfig& config) {
  const auto records = datagen::load_sources(sources);
  const auto truth = datagen::load_ground_truth(sources);
  match::WeightTable weights;
  const auto res = resolve_feeds(records, config, &weights);
  const auto g = match::build_entity_graph(records, res, truth.truth);

  match::write_resolution(records, res, out);
  match::save_weights(weights, out / kWeightsFile);
  graph::save_graph(g, out);

  ResolveSummary s;
  s.records = records.size();
  s.candidate_pairs = res.pairs.size();
  for (const auto& p : res.pairs) {
    s.links += p.decision == match::Decision::kLink;
    s.clerical_review += p.decision == match::Decision::kClericalReview;
  }
  s.entities = g.num_nodes();
  s.edges = g.num_edges();
  s.anonymized = fs::exists(sources / kAnonymizedMarker);
  Json meta = summary_to_json(s);
  meta["thresholds"] = {{"autolink", config.thresholds.autolink}, {"review", config.thresholds.review}};
  write_file(out / kResolutionMetaFile, meta.dump(2) + "\n");
  return s;
}

std::map<std::string, std::string> record_entities(const fs::path& sources, const match::MatchConfig& config) {
  const auto records = datagen::load_sources(sources);
  const auto res = resolve_feeds(records, config);
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < records.size(); ++i) out[records[i].record_id] = "E" + std::to_string(res.cluster_of[i]);
  return out;
}

TrainOutcome train_run(const fs::path& graph_dir, linkpred::ModelKind kind, const linkpred::TrainConfig& config,
                       const fs::path& run_dir, const std::string& created_at) {
  config.validate();
  const auto full = graph::load_graph(graph_dir);
  auto filtered = graph::filter_components(full, config.min_component_size);
  const auto& g = filtered.graph;

  bool anonymized = false;
  if (fs::exists(graph_dir / kResolutionMetaFile))
    anonymized = Json::parse(read_file(graph_dir / kResolutionMetaFile)).value("anonymized", false);

  TrainOutcome out{linkpred::train(g, config, kind), {}, full.num_nodes() - g.num_nodes()};
  graphsheet::CollectOptions opts;
  opts.dataset_id = fs::absolute(graph_dir).lexically_normal().filename().string();
  if (opts.dataset_id.empty()) opts.dataset_id = fs::absolute(graph_dir).lexically_normal().parent_path().filename();
  opts.created_at = created_at;
  opts.seed = config.seed;
  out.record = graphsheet::collect_facts(g, kind, config, out.result.report, anonymized, opts);

  fs::create_directories(run_dir);
  linkpred::save_model(out.result.model, run_dir);
  graph::save_graph(g, run_dir / service::kRunGraphDir);
  write_file(run_dir / service::kRunRecordFile, graphsheet::record_to_json(out.record).dump(2) + "\n");
  return out;
}

}  // namespace mdm::pipeline
