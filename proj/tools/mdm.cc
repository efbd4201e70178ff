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

// mdm: command line front end for the pipeline and the review service.

#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "mdm/anon/anonymizer.h"
#include "mdm/common/error.h"
#include "mdm/datagen/config.h"
#include "mdm/datagen/generator.h"
#include "mdm/datagen/sources_io.h"
#include "mdm/explain/explain.h"
#include "mdm/graph/graph_io.h"
#include "mdm/graphsheet/graphsheet.h"
#include "mdm/linkpred/models.h"
#include "mdm/pipeline/pipeline.h"
#include "mdm/service/http_server.h"
#include "mdm/service/service.h"

namespace fs = std::filesystem;
using mdm::Error;
using mdm::ErrorCode;
using mdm::Json;

namespace {

struct Globals {
  std::optional<std::uint64_t> seed;
  std::string config_path;
  Json config = Json::object();

  // Section of the --config file, or an empty object.
  Json section(const char* name) const { return config.contains(name) ? config.at(name) : Json::object(); }
};

void load_config(Globals& g) {
  if (g.config_path.empty()) return;
  try {
    g.config = Json::parse(mdm::read_file(g.config_path));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kConfigError, g.config_path + ": " + e.what());
  }
  if (!g.config.is_object()) throw Error(ErrorCode::kConfigError, g.config_path + ": expected a JSON object");
  for (const auto& [key, _] : g.config.items())
    if (key != "datagen" && key != "match" && key != "train" && key != "serve")
      throw Error(ErrorCode::kConfigError, g.config_path + ": unknown section " + key);
}

mdm::match::MatchConfig match_config(const Globals& g, const std::string& thresholds) {
  auto c = g.section("match").empty() ? mdm::match::MatchConfig::defaults()
                                      : mdm::match::match_config_from_json(g.section("match"));
  if (!thresholds.empty()) c.thresholds = mdm::match::parse_thresholds(thresholds);
  c.thresholds.validate();
  return c;
}

std::string read_passphrase(const std::string& file, const std::string& env) {
  if (!file.empty()) {
    auto text = mdm::read_file(file);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
  }
  const char* value = std::getenv(env.c_str());
  if (!value || !*value) throw Error(ErrorCode::kConfigError, "passphrase missing: set " + env + " or --passphrase-file");
  return value;
}

std::vector<std::int64_t> parse_ids(const std::string& list, const std::string& file) {
  std::string text = list;
  if (!file.empty()) text += "," + mdm::read_file(file);
  for (auto& ch : text)
    if (ch == '\n' || ch == ' ' || ch == '\t' || ch == '\r') ch = ',';
  std::vector<std::int64_t> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      ids.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "not a node id: " + item);
    }
  }
  return ids;
}

mdm::service::HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->interrupt();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Master data link prediction toolkit"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for every random step (overrides config)");
  app.add_option("--config", globals.config_path, "JSON config with optional datagen/match/train/serve sections")
      ->check(CLI::ExistingFile);

  // datagen
  auto* datagen = app.add_subcommand("datagen", "Generate a synthetic master-data corpus with ground truth");
  std::string datagen_out;
  std::optional<std::size_t> entities;
  std::optional<double> typo_rate;
  datagen->add_option("--out", datagen_out, "Output directory")->required();
  datagen->add_option("--entities", entities, "Number of canonical entities");
  datagen->add_option("--typo-rate", typo_rate, "Per-attribute perturbation rate");

  // resolve
  auto* resolve = app.add_subcommand("resolve", "Resolve source feeds into an entity graph");
  std::string resolve_in, resolve_out, resolve_thresholds;
  resolve->add_option("--in", resolve_in, "Directory with the source feeds")->required()->check(CLI::ExistingDirectory);
  resolve->add_option("--out", resolve_out, "Output directory")->required();
  resolve->add_option("--thresholds", resolve_thresholds, "autolink:review, e.g. 20:11");

  // anonymize
  auto* anonymize = app.add_subcommand("anonymize", "Pseudonymize source feeds consistently");
  std::string anon_in, anon_out, anon_shiftmap, passphrase_file, passphrase_env = "MDM_PASSPHRASE";
  anonymize->add_option("--in", anon_in, "Directory with the source feeds")->required()->check(CLI::ExistingDirectory);
  anonymize->add_option("--out", anon_out, "Output directory")->required();
  anonymize->add_option("--shiftmap", anon_shiftmap, "Where to write the encrypted shift map")->required();
  anonymize->add_option("--passphrase-file", passphrase_file, "File holding the shift map passphrase");
  anonymize->add_option("--passphrase-env", passphrase_env, "Environment variable holding the passphrase");

  // train
  auto* train = app.add_subcommand("train", "Train a link prediction model and write a run directory");
  std::string train_graph, train_out, model_name = "pgnn", created_at;
  std::optional<std::size_t> epochs, runs;
  train->add_option("--graph", train_graph, "Graph directory (nodes.jsonl, edges.jsonl)")
      ->required()
      ->check(CLI::ExistingDirectory);
  train->add_option("--out", train_out, "Run directory")->required();
  train->add_option("--model", model_name, "gcn or pgnn")->check(CLI::IsMember({"gcn", "pgnn"}));
  train->add_option("--epochs", epochs, "Training epochs");
  train->add_option("--runs", runs, "Training runs (seeds seed, seed+1, ...)");
  train->add_option("--created-at", created_at, "Timestamp recorded in the run record (default: now)");

  // predict
  auto* predict = app.add_subcommand("predict", "Score watchlist nodes against the graph");
  std::string predict_run, watchlist, watchlist_file;
  std::size_t top_k = 10;
  std::uint32_t max_hops = 0;
  predict->add_option("--run", predict_run, "Run directory")->required()->check(CLI::ExistingDirectory);
  predict->add_option("--watchlist", watchlist, "Comma-separated node ids");
  predict->add_option("--watchlist-file", watchlist_file, "File of node ids")->check(CLI::ExistingFile);
  predict->add_option("--top-k", top_k, "Predictions to keep");
  predict->add_option("--max-hops", max_hops, "Restrict candidates to this many hops (0: no limit)");

  // explain
  auto* explain = app.add_subcommand("explain", "Explain a predicted link");
  std::string explain_run, explain_corpus;
  mdm::graph::NodeId explain_u = 0, explain_v = 0;
  explain->add_option("--run", explain_run, "Run directory")->required()->check(CLI::ExistingDirectory);
  explain->add_option("--corpus", explain_corpus, "Unstructured text feed")->required()->check(CLI::ExistingFile);
  explain->add_option("--u", explain_u, "First node")->required();
  explain->add_option("--v", explain_v, "Second node")->required();

  // graphsheet
  auto* sheet = app.add_subcommand("graphsheet", "Render the GraphSheet of a run");
  std::string sheet_run, sheet_format = "md", sheet_out;
  sheet->add_option("--run", sheet_run, "Run directory")->required()->check(CLI::ExistingDirectory);
  sheet->add_option("--format", sheet_format, "md or json")->check(CLI::IsMember({"md", "json"}));
  sheet->add_option("--out", sheet_out, "Write to a file instead of stdout");

  // serve
  auto* serve = app.add_subcommand("serve", "Serve the review API");
  mdm::service::ServeConfig serve_config;
  std::string serve_run, serve_corpus, serve_scores, serve_log;
  serve->add_option("--run", serve_run, "Run directory")->required();
  serve->add_option("--corpus", serve_corpus, "Unstructured text feed")->required();
  serve->add_option("--scores", serve_scores, "match_scores.jsonl for threshold recounts");
  serve->add_option("--log", serve_log, "Review log (default: <run>/review_log.jsonl)");
  serve->add_option("--host", serve_config.host, "Bind address");
  serve->add_option("--port", serve_config.port, "Port");
  serve->add_option("--top-k", serve_config.default_top_k, "Default watchlist top_k");

  CLI11_PARSE(app, argc, argv);

  try {
    load_config(globals);

    if (*datagen) {
      auto c = globals.section("datagen").empty() ? mdm::datagen::GeneratorConfig{}
                                                  : mdm::datagen::config_from_json(globals.section("datagen"));
      if (globals.seed) c.seed = *globals.seed;
      if (entities) c.n_entities = *entities;
      if (typo_rate) c.typo_rate = *typo_rate;
      c.validate();
      const auto ds = mdm::datagen::generate(c);
      mdm::datagen::emit_sources(ds, datagen_out);
      const auto g = mdm::datagen::build_truth_graph(ds.entities, ds.relationships);
      mdm::graph::save_graph(g, fs::path(datagen_out) / "truth_graph");
      mdm::write_file(fs::path(datagen_out) / "datagen_config.json", mdm::datagen::config_to_json(c).dump(2) + "\n");
      std::cout << Json{{"entities", ds.entities.size()},
                        {"records", ds.records.size()},
                        {"relationships", ds.relationships.size()},
                        {"truth_graph", {{"nodes", g.num_nodes()}, {"edges", g.num_edges()}}}}
                       .dump()
                << "\n";
    } else if (*resolve) {
      const auto s = mdm::pipeline::resolve_sources(resolve_in, resolve_out, match_config(globals, resolve_thresholds));
      std::cout << mdm::pipeline::summary_to_json(s).dump() << "\n";
    } else if (*anonymize) {
      const auto passphrase = read_passphrase(passphrase_file, passphrase_env);
      const auto record_entity = mdm::pipeline::record_entities(anon_in, match_config(globals, ""));
      const std::uint64_t seed = globals.seed.value_or(42);
      const auto map = mdm::anon::anonymize_sources(anon_in, anon_out, record_entity, seed);
      mdm::anon::save_shiftmap(map, anon_shiftmap, passphrase);
      mdm::write_file(fs::path(anon_out) / mdm::pipeline::kAnonymizedMarker,
                      Json{{"seed", seed}, {"source", fs::absolute(anon_in).string()}}.dump(2) + "\n");
      std::cout << Json{{"records", record_entity.size()}, {"shiftmap", anon_shiftmap}}.dump() << "\n";
    } else if (*train) {
      auto c = globals.section("train").empty() ? mdm::linkpred::TrainConfig{}
                                                : mdm::linkpred::TrainConfig::from_json(globals.section("train"));
      if (globals.seed) c.seed = *globals.seed;
      if (epochs) c.epochs = *epochs;
      if (runs) c.runs = *runs;
      const auto out = mdm::pipeline::train_run(train_graph, mdm::linkpred::parse_model(model_name), c, train_out,
                                                created_at.empty() ? mdm::service::utc_now() : created_at);
      std::cout << Json{{"model", model_name},
                        {"dropped_nodes", out.dropped_nodes},
                        {"metrics", mdm::linkpred::report_to_json(out.result.report)}}
                       .dump()
                << "\n";
    } else if (*predict) {
      const auto ids = parse_ids(watchlist, watchlist_file);
      if (ids.empty()) throw Error(ErrorCode::kEmptyWatchlist, "watchlist is empty");
      const auto g = mdm::graph::load_graph(fs::path(predict_run) / mdm::service::kRunGraphDir);
      std::set<mdm::graph::NodeId> watch;
      for (auto id : ids) {
        if (id < 0 || !g.contains(static_cast<mdm::graph::NodeId>(id)))
          throw Error(ErrorCode::kUnknownNodeIds, "unknown node id " + std::to_string(id));
        watch.insert(static_cast<mdm::graph::NodeId>(id));
      }
      const auto model = mdm::linkpred::load_model(predict_run);
      for (const auto& p : mdm::linkpred::watchlist_predict(model, g, watch, top_k, max_hops))
        std::cout << Json{{"u", p.watch}, {"v", p.other}, {"probability", p.probability}}.dump() << "\n";
    } else if (*explain) {
      const auto g = mdm::graph::load_graph(fs::path(explain_run) / mdm::service::kRunGraphDir);
      if (!g.contains(explain_u) || !g.contains(explain_v))
        throw Error(ErrorCode::kUnknownNode, "node outside the run graph");
      const auto model = mdm::linkpred::load_model(explain_run);
      const auto emb = mdm::linkpred::embed(model, g);
      const std::map<mdm::linkpred::NodePair, double> predictions = {
          {mdm::linkpred::make_pair_key(explain_u, explain_v), mdm::linkpred::score_link(emb, explain_u, explain_v)}};
      const auto index = mdm::explain::TextIndex::build(mdm::explain::load_documents(explain_corpus));
      const auto bundle = mdm::explain::explain_link(g, index, predictions, explain_u, explain_v);
      std::cout << mdm::explain::bundle_to_json(g, bundle).dump(2) << "\n";
    } else if (*sheet) {
      const auto path = fs::path(sheet_run) / mdm::service::kRunRecordFile;
      if (!fs::exists(path)) throw Error(ErrorCode::kArtifactMissing, "no run record in " + sheet_run);
      const auto record = mdm::graphsheet::record_from_json(Json::parse(mdm::read_file(path)));
      const auto text = mdm::graphsheet::render_graphsheet(record, mdm::graphsheet::parse_format(sheet_format));
      if (sheet_out.empty())
        std::cout << text;
      else
        mdm::write_file(sheet_out, text);
    } else if (*serve) {
      const auto section = globals.section("serve");
      serve_config.run_dir = serve_run;
      serve_config.corpus = serve_corpus;
      serve_config.match_scores = serve_scores;
      serve_config.log = serve_log.empty() ? fs::path(serve_run) / "review_log.jsonl" : fs::path(serve_log);
      if (section.contains("thresholds"))
        serve_config.thresholds = {section.at("thresholds").at("autolink").get<double>(),
                                   section.at("thresholds").at("review").get<double>()};
      else
        serve_config.thresholds = match_config(globals, "").thresholds;
      mdm::service::Service service(mdm::service::load_artifacts(serve_config), serve_config);
      mdm::service::HttpServer server(service);
      g_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      const int port = server.start(serve_config.host, serve_config.port);
      std::cerr << "serving on " << serve_config.host << ":" << port << "\n";
      server.wait();
      g_server = nullptr;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
