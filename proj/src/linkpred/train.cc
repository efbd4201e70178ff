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

#include "mdm/linkpred/train.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>

#include "mdm/common/error.h"
#include "mdm/common/rng.h"
#include "mdm/graph/components.h"
#include "mdm/graph/distances.h"

namespace mdm::linkpred {

using graph::NodeId;
using graph::PropertyGraph;

namespace {

constexpr const char* kModelFormat = "mdm-model-1";

Json features_to_json(const std::vector<FeatureSpec>& specs) {
  Json out = Json::array();
  for (const auto& s : specs)
    out.push_back({{"attribute", s.attribute}, {"encoding", encoding_name(s.encoding)}, {"size", s.size}});
  return out;
}

std::vector<FeatureSpec> features_from_json(const Json& j) {
  std::vector<FeatureSpec> out;
  for (const auto& s : j)
    out.push_back({s.at("attribute").get<std::string>(), parse_encoding(s.at("encoding").get<std::string>()),
                   s.at("size").get<std::size_t>()});
  return out;
}

struct Adam {
  std::vector<DenseMatrix> m;
  std::vector<DenseMatrix> v;
  std::size_t t = 0;

  void step(ModelParams& params, const std::vector<DenseMatrix>& grads, double lr) {
    constexpr double b1 = 0.9, b2 = 0.999, eps = 1e-8;
    if (m.empty())
      for (const auto& p : params.tensors) {
        m.emplace_back(p.value.rows(), p.value.cols());
        v.emplace_back(p.value.rows(), p.value.cols());
      }
    ++t;
    const double c1 = 1.0 - std::pow(b1, static_cast<double>(t));
    const double c2 = 1.0 - std::pow(b2, static_cast<double>(t));
    for (std::size_t i = 0; i < params.tensors.size(); ++i) {
      auto& w = params.tensors[i].value.data();
      auto& mi = m[i].data();
      auto& vi = v[i].data();
      const auto& g = grads[i].data();
      for (std::size_t j = 0; j < w.size(); ++j) {
        mi[j] = b1 * mi[j] + (1.0 - b1) * g[j];
        vi[j] = b2 * vi[j] + (1.0 - b2) * g[j] * g[j];
        w[j] -= lr * (mi[j] / c1) / (std::sqrt(vi[j] / c2) + eps);
      }
    }
  }
};

std::vector<double> scores_for(const DenseMatrix& emb, const std::vector<NodePair>& pairs) {
  std::vector<double> out;
  out.reserve(pairs.size());
  for (const auto& [u, v] : pairs) out.push_back(score_link(emb, u, v));
  return out;
}

struct RunOutcome {
  LinkModel model;
  Metrics metrics;
  double final_loss = 0.0;
};

RunOutcome train_run(const PropertyGraph& g, const TrainConfig& config, ModelKind kind, std::uint64_t seed) {
  Rng base(seed);
  const LinkSplit split = split_links(g, config.positive_fraction, seed);
  const PropertyGraph& tg = split.train_graph;

  RunOutcome run;
  run.model.kind = kind;
  run.model.config = config;
  run.model.encoder = FeatureEncoder::fit(tg, config.features);
  if (kind == ModelKind::kPgnn)
    run.model.anchors = make_anchor_sets(tg.num_nodes(), config.anchors, base.fork(2).next());
  const DenseMatrix x = run.model.encoder.encode(tg);
  const Propagation prop = make_propagation(kind, tg, run.model.anchors, config.distance_cutoff);
  run.model.params = ModelParams::init(kind, x.cols(), config.hidden_dim, config.layers, base.fork(3).next());

  // Subgraphs are the components of the training graph; a batch groups
  // batch_subgraphs of them.
  const auto components = graph::connected_components(tg);
  std::vector<std::size_t> component_of(tg.num_nodes());
  for (std::size_t c = 0; c < components.size(); ++c)
    for (NodeId v : components[c]) component_of[v] = c;
  std::vector<std::vector<NodePair>> edges_of(components.size());
  for (const auto& e : split.train_edges) edges_of[component_of[e.first]].push_back(e);

  Rng rng = base.fork(4);
  Adam adam;
  std::vector<std::size_t> order(components.size());
  for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(order);
    double epoch_loss = 0.0;
    std::size_t batches = 0;
    for (std::size_t start = 0; start < order.size(); start += config.batch_subgraphs) {
      std::vector<NodePair> pairs;
      std::vector<NodeId> nodes;
      const std::size_t end = std::min(order.size(), start + config.batch_subgraphs);
      for (std::size_t b = start; b < end; ++b) {
        const auto c = order[b];
        pairs.insert(pairs.end(), edges_of[c].begin(), edges_of[c].end());
        nodes.insert(nodes.end(), components[c].begin(), components[c].end());
      }
      if (pairs.empty()) continue;
      std::vector<double> labels(pairs.size(), 1.0);
      const auto positives = pairs.size();
      const auto wanted = static_cast<std::size_t>(std::llround(config.negative_ratio * positives));
      for (std::size_t i = 0; i < wanted; ++i) {
        const auto& [u, v] = pairs[rng.below(positives)];
        const NodeId a = rng.bernoulli(0.5) ? u : v;
        for (int attempt = 0; attempt < 16; ++attempt) {
          const NodeId b = nodes[rng.below(nodes.size())];
          if (b == a || tg.has_edge(a, b)) continue;
          pairs.push_back(make_pair_key(a, b));
          labels.push_back(0.0);
          break;
        }
      }

      ForwardCache cache;
      const DenseMatrix emb = forward(run.model.params, prop, x, &cache);
      DenseMatrix grad;
      const double loss = bce_loss(emb, pairs, labels, &grad);
      if (!std::isfinite(loss))
        throw Error(ErrorCode::kDivergence, "loss diverged at epoch " + std::to_string(epoch));
      adam.step(run.model.params, backward(run.model.params, prop, cache, grad), config.learning_rate);
      epoch_loss += loss;
      ++batches;
    }
    run.final_loss = batches ? epoch_loss / static_cast<double>(batches) : 0.0;
  }

  const DenseMatrix emb = forward(run.model.params, prop, x);
  run.metrics = evaluate(scores_for(emb, split.positives), scores_for(emb, split.negatives));
  return run;
}

void write_le(std::ostream& out, double value) {
  std::uint64_t bits;
  std::memcpy(&bits, &value, sizeof bits);
  unsigned char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(bits >> (8 * i));
  out.write(reinterpret_cast<const char*>(bytes), 8);
}

double read_le(std::istream& in) {
  unsigned char bytes[8];
  if (!in.read(reinterpret_cast<char*>(bytes), 8)) throw Error(ErrorCode::kSchemaMismatch, "params.bin truncated");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  double value;
  std::memcpy(&value, &bits, sizeof value);
  return value;
}

}  // namespace

void TrainConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::kConfigError, what); };
  if (!(positive_fraction > 0.0 && positive_fraction < 1.0)) fail("positive_fraction must be in (0, 1)");
  if (!(negative_ratio > 0.0)) fail("negative_ratio must be positive");
  if (batch_subgraphs == 0) fail("batch_subgraphs must be at least 1");
  if (anchors == 0) fail("anchors must be at least 1");
  if (!(learning_rate > 0.0)) fail("learning_rate must be positive");
  if (runs == 0) fail("runs must be at least 1");
  if (hidden_dim == 0 || layers == 0) fail("hidden_dim and layers must be positive");
}

Json TrainConfig::to_json() const {
  return {{"positive_fraction", positive_fraction},
          {"negative_ratio", negative_ratio},
          {"batch_subgraphs", batch_subgraphs},
          {"anchors", anchors},
          {"epochs", epochs},
          {"learning_rate", learning_rate},
          {"seed", seed},
          {"runs", runs},
          {"distance_cutoff", distance_cutoff},
          {"hidden_dim", hidden_dim},
          {"layers", layers},
          {"min_component_size", min_component_size},
          {"features", features_to_json(features)}};
}

TrainConfig TrainConfig::from_json(const Json& j) {
  TrainConfig c;
  if (!j.is_object()) throw Error(ErrorCode::kConfigError, "train config must be an object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "positive_fraction") c.positive_fraction = value.get<double>();
      else if (key == "negative_ratio") c.negative_ratio = value.get<double>();
      else if (key == "batch_subgraphs") c.batch_subgraphs = value.get<std::size_t>();
      else if (key == "anchors") c.anchors = value.get<std::size_t>();
      else if (key == "epochs") c.epochs = value.get<std::size_t>();
      else if (key == "learning_rate") c.learning_rate = value.get<double>();
      else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "runs") c.runs = value.get<std::size_t>();
      else if (key == "distance_cutoff") c.distance_cutoff = value.get<std::uint32_t>();
      else if (key == "hidden_dim") c.hidden_dim = value.get<std::size_t>();
      else if (key == "layers") c.layers = value.get<std::size_t>();
      else if (key == "min_component_size") c.min_component_size = value.get<std::size_t>();
      else if (key == "features") c.features = features_from_json(value);
      else throw Error(ErrorCode::kConfigError, "unknown train config key: " + key);
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kConfigError, std::string("train config: ") + e.what());
  }
  c.validate();
  return c;
}

Json metrics_to_json(const Metrics& m) {
  return {{"roc_auc", m.roc_auc},
          {"accuracy", m.accuracy},
          {"positive_sample_accuracy", m.positive_sample_accuracy},
          {"positive_predictions_on_negatives", m.positive_predictions_on_negatives}};
}

Metrics metrics_from_json(const Json& j) {
  return {j.at("roc_auc").get<double>(), j.at("accuracy").get<double>(),
          j.at("positive_sample_accuracy").get<double>(), j.at("positive_predictions_on_negatives").get<double>()};
}

Json report_to_json(const MetricsReport& r) {
  Json runs = Json::array();
  for (const auto& m : r.runs) runs.push_back(metrics_to_json(m));
  return {{"mean", metrics_to_json(r.mean)}, {"std_dev", metrics_to_json(r.std_dev)}, {"runs", runs}};
}

MetricsReport report_from_json(const Json& j) {
  MetricsReport r;
  r.mean = metrics_from_json(j.at("mean"));
  r.std_dev = metrics_from_json(j.at("std_dev"));
  for (const auto& m : j.at("runs")) r.runs.push_back(metrics_from_json(m));
  return r;
}

MetricsReport summarize(const std::vector<Metrics>& runs) {
  MetricsReport r;
  r.runs = runs;
  if (runs.empty()) return r;
  const double n = static_cast<double>(runs.size());
  auto field = [&](double Metrics::*f, double Metrics::*out_mean, double Metrics::*out_std) {
    double sum = 0.0;
    for (const auto& m : runs) sum += m.*f;
    const double mean = sum / n;
    double ss = 0.0;
    for (const auto& m : runs) ss += (m.*f - mean) * (m.*f - mean);
    r.mean.*out_mean = mean;
    r.std_dev.*out_std = runs.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  };
  for (auto f : {&Metrics::roc_auc, &Metrics::accuracy, &Metrics::positive_sample_accuracy,
                 &Metrics::positive_predictions_on_negatives})
    field(f, f, f);
  return r;
}

double roc_auc(const std::vector<double>& scores, const std::vector<int>& labels) {
  if (scores.size() != labels.size()) throw Error(ErrorCode::kInvalidArgument, "scores and labels differ in length");
  std::vector<std::size_t> idx(scores.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  // Walk tie groups in ascending order: each positive beats every negative
  // below its group and half-beats the negatives inside it.
  double wins = 0.0;
  std::size_t negatives_below = 0;
  std::size_t positives = 0;
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i, pos = 0, neg = 0;
    while (j < idx.size() && scores[idx[j]] == scores[idx[i]]) {
      (labels[idx[j]] ? pos : neg) += 1;
      ++j;
    }
    wins += static_cast<double>(pos) * (static_cast<double>(negatives_below) + 0.5 * static_cast<double>(neg));
    negatives_below += neg;
    positives += pos;
    i = j;
  }
  if (positives == 0 || negatives_below == 0)
    throw Error(ErrorCode::kSingleClass, "roc_auc needs both positive and negative labels");
  return wins / (static_cast<double>(positives) * static_cast<double>(negatives_below));
}

Metrics mdm_metrics(const std::vector<double>& positive_scores, const std::vector<double>& negative_scores,
                    double threshold) {
  if (positive_scores.empty() && negative_scores.empty())
    throw Error(ErrorCode::kInvalidArgument, "no scores to evaluate");
  auto at_or_above = [&](const std::vector<double>& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](double x) { return x >= threshold; }));
  };
  const auto tp = at_or_above(positive_scores);
  const auto fp = at_or_above(negative_scores);
  Metrics m;
  m.positive_sample_accuracy =
      positive_scores.empty() ? 0.0 : static_cast<double>(tp) / static_cast<double>(positive_scores.size());
  m.positive_predictions_on_negatives =
      negative_scores.empty() ? 0.0 : static_cast<double>(fp) / static_cast<double>(negative_scores.size());
  m.accuracy = static_cast<double>(tp + negative_scores.size() - fp) /
               static_cast<double>(positive_scores.size() + negative_scores.size());
  return m;
}

Metrics evaluate(const std::vector<double>& positive_scores, const std::vector<double>& negative_scores,
                 double threshold) {
  Metrics m = mdm_metrics(positive_scores, negative_scores, threshold);
  std::vector<double> scores = positive_scores;
  scores.insert(scores.end(), negative_scores.begin(), negative_scores.end());
  std::vector<int> labels(positive_scores.size(), 1);
  labels.resize(scores.size(), 0);
  m.roc_auc = roc_auc(scores, labels);
  return m;
}

double fit_pairs(ModelParams& params, const Propagation& prop, const DenseMatrix& x,
                 const std::vector<NodePair>& pairs, const std::vector<double>& labels, std::size_t epochs,
                 double learning_rate) {
  Adam adam;
  double loss = 0.0;
  for (std::size_t epoch = 0; epoch < epochs; ++epoch) {
    ForwardCache cache;
    const DenseMatrix emb = forward(params, prop, x, &cache);
    DenseMatrix grad;
    loss = bce_loss(emb, pairs, labels, &grad);
    if (!std::isfinite(loss)) throw Error(ErrorCode::kDivergence, "loss diverged at epoch " + std::to_string(epoch));
    adam.step(params, backward(params, prop, cache, grad), learning_rate);
  }
  return loss;
}

TrainResult train(const PropertyGraph& g, const TrainConfig& config, ModelKind kind) {
  config.validate();
  for (const auto& c : graph::connected_components(g))
    if (c.size() < config.min_component_size)
      throw Error(ErrorCode::kInvalidArgument, "graph has a component of " + std::to_string(c.size()) +
                                                   " nodes; filter components first");
  TrainResult result;
  std::vector<Metrics> runs;
  for (std::size_t r = 0; r < config.runs; ++r) {
    auto run = train_run(g, config, kind, config.seed + r);
    runs.push_back(run.metrics);
    result.final_loss.push_back(run.final_loss);
    if (r == 0) result.model = std::move(run.model);
  }
  result.report = summarize(runs);
  return result;
}

DenseMatrix embed(const LinkModel& model, const PropertyGraph& g) {
  const DenseMatrix x = model.encoder.encode(g);
  const Propagation prop = make_propagation(model.kind, g, model.anchors, model.config.distance_cutoff);
  return forward(model.params, prop, x);
}

std::vector<PredictedLink> watchlist_predict(const LinkModel& model, const PropertyGraph& g,
                                             const std::set<NodeId>& watchlist, std::size_t top_k,
                                             std::uint32_t max_hops) {
  if (watchlist.empty()) throw Error(ErrorCode::kEmptyWatchlist, "watchlist is empty");
  for (NodeId w : watchlist)
    if (!g.contains(w)) throw Error(ErrorCode::kUnknownNode, "watchlist node " + std::to_string(w));
  const DenseMatrix emb = embed(model, g);
  std::vector<PredictedLink> out;
  for (NodeId w : watchlist) {
    std::vector<NodeId> candidates;
    if (max_hops > 0) {
      for (const auto& [v, d] : graph::bfs_distances(g, w, max_hops).sorted()) candidates.push_back(v);
    } else {
      for (NodeId v = 0; v < g.num_nodes(); ++v) candidates.push_back(v);
    }
    for (NodeId v : candidates) {
      if (v == w || watchlist.count(v) || g.has_edge(w, v)) continue;
      out.push_back({w, v, score_link(emb, w, v)});
    }
  }
  auto better = [](const PredictedLink& a, const PredictedLink& b) {
    if (a.probability != b.probability) return a.probability > b.probability;
    return std::pair(a.watch, a.other) < std::pair(b.watch, b.other);
  };
  const std::size_t keep = std::min(top_k, out.size());
  std::partial_sort(out.begin(), out.begin() + keep, out.end(), better);
  out.resize(keep);
  return out;
}

void save_model(const LinkModel& model, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  Json tensors = Json::array();
  for (const auto& t : model.params.tensors)
    tensors.push_back({{"name", t.name}, {"rows", t.value.rows()}, {"cols", t.value.cols()}});
  const Json header = {{"format", kModelFormat},
                       {"kind", model_name(model.kind)},
                       {"config", model.config.to_json()},
                       {"encoder", model.encoder.to_json()},
                       {"anchors", {{"seed", model.anchors.seed}, {"sets", model.anchors.sets}}},
                       {"input_dim", model.params.input_dim},
                       {"hidden_dim", model.params.hidden_dim},
                       {"layers", model.params.layers},
                       {"tensors", tensors}};
  write_file(dir / "model.json", header.dump(2) + "\n");
  std::ofstream out(dir / "params.bin", std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + (dir / "params.bin").string());
  for (const auto& t : model.params.tensors)
    for (double v : t.value.data()) write_le(out, v);
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + (dir / "params.bin").string());
}

LinkModel load_model(const std::filesystem::path& dir) {
  Json header;
  try {
    header = Json::parse(read_file(dir / "model.json"));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kSchemaMismatch, std::string("model.json: ") + e.what());
  }
  LinkModel model;
  try {
    if (header.at("format") != kModelFormat) throw Error(ErrorCode::kSchemaMismatch, "unknown model format");
    model.kind = parse_model(header.at("kind").get<std::string>());
    model.config = TrainConfig::from_json(header.at("config"));
    model.encoder = FeatureEncoder::from_json(header.at("encoder"));
    model.anchors.seed = header.at("anchors").at("seed").get<std::uint64_t>();
    model.anchors.sets = header.at("anchors").at("sets").get<std::vector<std::vector<NodeId>>>();
    model.params = ModelParams::init(model.kind, header.at("input_dim").get<std::size_t>(),
                                     header.at("hidden_dim").get<std::size_t>(),
                                     header.at("layers").get<std::size_t>(), 0);
    const auto& shapes = header.at("tensors");
    if (shapes.size() != model.params.tensors.size())
      throw Error(ErrorCode::kSchemaMismatch, "tensor count differs from model shape");
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      const auto& t = model.params.tensors[i];
      if (shapes[i].at("name") != t.name || shapes[i].at("rows") != t.value.rows() ||
          shapes[i].at("cols") != t.value.cols())
        throw Error(ErrorCode::kSchemaMismatch, "tensor " + t.name + " has an unexpected shape");
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kSchemaMismatch, std::string("model.json: ") + e.what());
  }
  if (model.encoder.dim() != model.params.input_dim)
    throw Error(ErrorCode::kSchemaMismatch, "encoder width differs from model input");
  std::ifstream in(dir / "params.bin", std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + (dir / "params.bin").string());
  for (auto& t : model.params.tensors)
    for (auto& v : t.value.data()) v = read_le(in);
  if (in.peek() != std::char_traits<char>::eof()) throw Error(ErrorCode::kSchemaMismatch, "params.bin too long");
  return model;
}

}  // namespace mdm::linkpred
