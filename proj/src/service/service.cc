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

#include "mdm/service/service.h"

#include <algorithm>
#include <set>

#include "mdm/common/error.h"
#include "mdm/graph/graph_io.h"

namespace mdm::service {

namespace fs = std::filesystem;

std::vector<ScoredRecordPair> load_match_scores(const fs::path& path) {
  std::vector<ScoredRecordPair> out;
  for_each_jsonl(path, [&](std::size_t line, const Json& row) {
    try {
      out.push_back({row.at("a").get<std::string>(), row.at("b").get<std::string>(), row.at("total").get<double>()});
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kSchemaMismatch, path.string() + ":" + std::to_string(line) + ": " + e.what());
    }
  });
  return out;
}

Artifacts load_artifacts(const ServeConfig& config) {
  auto require = [](const fs::path& p, const char* what) {
    if (p.empty() || !fs::exists(p))
      throw Error(ErrorCode::kArtifactMissing, std::string(what) + " not found: " + p.string());
  };
  require(config.run_dir / "model.json", "model");
  require(config.run_dir / "params.bin", "model parameters");
  require(config.run_dir / kRunGraphDir / "nodes.jsonl", "graph");
  require(config.run_dir / kRunGraphDir / "edges.jsonl", "graph");
  require(config.corpus, "corpus");
  if (!config.match_scores.empty()) require(config.match_scores, "match scores");

  Artifacts a{graph::load_graph(config.run_dir / kRunGraphDir), linkpred::load_model(config.run_dir),
              explain::TextIndex::build(explain::load_documents(config.corpus)), {}, std::nullopt};
  if (!config.match_scores.empty()) a.scores = load_match_scores(config.match_scores);
  if (fs::exists(config.run_dir / kRunRecordFile))
    a.run = graphsheet::record_from_json(Json::parse(read_file(config.run_dir / kRunRecordFile)));
  return a;
}

ThresholdCounts count_decisions(const std::vector<ScoredRecordPair>& scores, const match::Thresholds& t) {
  ThresholdCounts c;
  for (const auto& s : scores) {
    switch (match::decide(s.total, t)) {
      case match::Decision::kLink:
        ++c.link;
        break;
      case match::Decision::kClericalReview:
        ++c.clerical_review;
        break;
      case match::Decision::kNoLink:
        ++c.no_link;
        break;
    }
  }
  return c;
}

Service::Service(Artifacts artifacts, const ServeConfig& config, Clock clock)
    : artifacts_(std::move(artifacts)),
      config_(config),
      store_(std::make_unique<ReviewStore>(config.log, config.thresholds, std::move(clock))) {}

Json Service::health() const { return {{"status", "ok"}, {"version", MDM_VERSION}}; }

Json Service::list_predictions(std::optional<Status> status, std::size_t limit, std::size_t offset) const {
  const auto all = store_->list(status);
  Json items = Json::array();
  for (std::size_t i = offset; i < all.size() && items.size() < limit; ++i) items.push_back(record_to_json(all[i]));
  return {{"total", all.size()}, {"offset", offset}, {"limit", limit}, {"predictions", items}};
}

Json Service::prediction(std::uint64_t id) const {
  auto r = store_->get(id);
  if (!r) throw Error(ErrorCode::kNotFound, "no prediction " + std::to_string(id));
  return record_to_json(*r);
}

Json Service::explanation(std::uint64_t id) const {
  auto r = store_->get(id);
  if (!r) throw Error(ErrorCode::kNotFound, "no prediction " + std::to_string(id));
  const std::map<linkpred::NodePair, double> predictions = {{linkpred::make_pair_key(r->u, r->v), r->probability}};
  const auto bundle =
      explain::explain_link(artifacts_.graph, artifacts_.index, predictions, r->u, r->v, config_.explain);
  Json j = explain::bundle_to_json(artifacts_.graph, bundle);
  j["prediction_id"] = id;
  return j;
}

Json Service::feedback(std::uint64_t id, const std::string& decision, const std::string& note,
                       const std::string& steward) {
  Status status;
  if (decision == "accept")
    status = Status::kAccepted;
  else if (decision == "reject")
    status = Status::kRejected;
  else
    throw Error(ErrorCode::kInvalidArgument, "decision must be \"accept\" or \"reject\"");
  return record_to_json(store_->decide(id, status, note, steward));
}

Json Service::post_watchlist(const std::vector<std::int64_t>& node_ids, std::optional<std::size_t> top_k,
                             const std::string& steward) {
  if (node_ids.empty()) throw Error(ErrorCode::kEmptyWatchlist, "watchlist is empty");
  std::set<graph::NodeId> watch;
  Json unknown = Json::array();
  for (auto id : node_ids) {
    if (id < 0 || !artifacts_.graph.contains(static_cast<graph::NodeId>(id)))
      unknown.push_back(id);
    else
      watch.insert(static_cast<graph::NodeId>(id));
  }
  if (!unknown.empty()) throw Error(ErrorCode::kUnknownNodeIds, "unknown node ids: " + unknown.dump());
  const std::size_t k = top_k.value_or(config_.default_top_k);
  const auto links = linkpred::watchlist_predict(artifacts_.model, artifacts_.graph, watch, k, config_.max_hops);
  std::vector<Candidate> candidates;
  for (const auto& l : links) candidates.push_back({l.watch, l.other, l.probability});
  const auto result = store_->enqueue(candidates, steward);
  return {{"candidates", links.size()}, {"enqueued", result.added}, {"already_queued", result.existing}};
}

Json Service::thresholds() const {
  const auto t = store_->thresholds();
  const auto c = count_decisions(artifacts_.scores, t);
  Json history = Json::array();
  for (const auto& h : store_->threshold_history())
    history.push_back(
        {{"autolink", h.thresholds.autolink}, {"review", h.thresholds.review}, {"actor", h.actor}, {"at", h.at}});
  return {{"autolink", t.autolink},
          {"review", t.review},
          {"scored_pairs", artifacts_.scores.size()},
          {"counts", {{"link", c.link}, {"clerical_review", c.clerical_review}, {"no_link", c.no_link}}},
          {"history", history}};
}

Json Service::put_thresholds(const match::Thresholds& t, const std::string& actor) {
  store_->set_thresholds(t, actor);
  return thresholds();
}

std::string Service::graphsheet(graphsheet::Format format) const {
  if (!artifacts_.run) throw Error(ErrorCode::kNotFound, "run directory has no run record");
  return graphsheet::render_graphsheet(*artifacts_.run, format);
}

Json Service::node(std::int64_t id) const {
  if (id < 0 || !artifacts_.graph.contains(static_cast<graph::NodeId>(id)))
    throw Error(ErrorCode::kNotFound, "no node " + std::to_string(id));
  const auto nid = static_cast<graph::NodeId>(id);
  Json j = graph::node_to_json(artifacts_.graph.node(nid));
  Json neighbours = Json::array();
  for (const auto& n : artifacts_.graph.neighbors(nid))
    neighbours.push_back({{"node", n.node}, {"relation", artifacts_.graph.edges()[n.edge].relation}});
  j["neighbors"] = neighbours;
  return j;
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound:
    case ErrorCode::kUnknownPrediction:
    case ErrorCode::kUnknownNode:
      return 404;
    case ErrorCode::kAlreadyDecided:
      return 409;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kInvalidThresholds:
    case ErrorCode::kEmptyWatchlist:
    case ErrorCode::kUnknownNodeIds:
    case ErrorCode::kConfigError:
    case ErrorCode::kSchemaMismatch:
      return 400;
    default:
      return 500;
  }
}

}  // namespace mdm::service
