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
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mdm/common/error.h"
#include "mdm/explain/explain.h"
#include "mdm/graphsheet/graphsheet.h"
#include "mdm/linkpred/train.h"
#include "mdm/service/review_store.h"

namespace mdm::service {

// Layout of a training run directory written by `mdm train`.
inline constexpr const char* kRunRecordFile = "run.json";
inline constexpr const char* kRunGraphDir = "graph";

struct ServeConfig {
  std::filesystem::path run_dir;
  std::filesystem::path corpus;        // unstructured text feed
  std::filesystem::path match_scores;  // match_scores.jsonl; empty path means none
  std::filesystem::path log;           // review log, created when absent
  std::string host = "127.0.0.1";
  int port = 8080;
  std::size_t default_top_k = 10;
  std::uint32_t max_hops = 0;
  match::Thresholds thresholds;  // used until the log records a change
  explain::ExplainOptions explain;
};

struct ScoredRecordPair {
  std::string a;
  std::string b;
  double total = 0.0;
};

std::vector<ScoredRecordPair> load_match_scores(const std::filesystem::path& path);

struct Artifacts {
  graph::PropertyGraph graph;
  linkpred::LinkModel model;
  explain::TextIndex index;
  std::vector<ScoredRecordPair> scores;
  std::optional<graphsheet::RunRecord> run;
};

// ArtifactMissing when the model, graph or corpus is absent.
Artifacts load_artifacts(const ServeConfig& config);

struct ThresholdCounts {
  std::size_t link = 0;
  std::size_t clerical_review = 0;
  std::size_t no_link = 0;
};
ThresholdCounts count_decisions(const std::vector<ScoredRecordPair>& scores, const match::Thresholds& t);

// Endpoint logic without transport. Failures are mdm::Error.
class Service {
 public:
  Service(Artifacts artifacts, const ServeConfig& config, Clock clock = utc_now);

  Json health() const;
  Json list_predictions(std::optional<Status> status, std::size_t limit, std::size_t offset) const;
  Json prediction(std::uint64_t id) const;
  Json explanation(std::uint64_t id) const;
  Json feedback(std::uint64_t id, const std::string& decision, const std::string& note, const std::string& steward);
  // EmptyWatchlist, UnknownNodeIds.
  Json post_watchlist(const std::vector<std::int64_t>& node_ids, std::optional<std::size_t> top_k,
                      const std::string& steward);
  Json thresholds() const;
  Json put_thresholds(const match::Thresholds& t, const std::string& actor);
  // NotFound when the run directory has no run record.
  std::string graphsheet(graphsheet::Format format) const;
  Json node(std::int64_t id) const;

  const ReviewStore& store() const { return *store_; }
  const Artifacts& artifacts() const { return artifacts_; }

 private:
  Artifacts artifacts_;
  ServeConfig config_;
  std::unique_ptr<ReviewStore> store_;
};

// HTTP status for an error code.
int http_status(ErrorCode code);

}  // namespace mdm::service
