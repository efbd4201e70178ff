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

#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "doctest.h"
#include "mdm/common/error.h"
#include "mdm/datagen/generator.h"
#include "mdm/graphsheet/graphsheet.h"
#include "support/demo.h"

using namespace mdm::graphsheet;
using mdm::ErrorCode;
using mdm::Json;
using mdm::graph::PropertyGraph;
namespace lp = mdm::linkpred;

namespace {

const PropertyGraph& demo_graph() {
  static const PropertyGraph g = [] {
    const auto& ds = demo::dataset();
    return mdm::datagen::build_truth_graph(ds.entities, ds.relationships);
  }();
  return g;
}

lp::MetricsReport fake_report() {
  std::vector<lp::Metrics> runs = {{0.91, 0.83, 0.88, 0.22}, {0.93, 0.85, 0.87, 0.19}, {0.9, 0.81, 0.9, 0.25}};
  return lp::summarize(runs);
}

CollectOptions options() {
  CollectOptions o;
  o.dataset_id = "demo";
  o.created_at = "2026-01-01T00:00:00Z";
  o.seed = 7;
  return o;
}

// Component sizes by union-find over the edge list.
std::map<std::size_t, std::size_t> oracle_components(const PropertyGraph& g) {
  std::vector<std::size_t> parent(g.num_nodes());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) parent[find(e.src)] = find(e.dst);
  std::map<std::size_t, std::size_t> size_of_root, hist;
  for (std::size_t i = 0; i < g.num_nodes(); ++i) ++size_of_root[find(i)];
  for (const auto& [_, s] : size_of_root) ++hist[s];
  return hist;
}

// Rows "| key | mean | sd |" of the markdown metrics section.
std::map<std::string, std::pair<double, double>> metrics_rows(const std::string& md) {
  std::map<std::string, std::pair<double, double>> rows;
  auto start = md.find("## Metrics");
  auto end = md.find("## Caveats/FAQ");
  std::istringstream in(md.substr(start, end - start));
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("| ", 0) != 0 || line.find("Metric") != std::string::npos) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '|')) {
      auto a = cell.find_first_not_of(' ');
      if (a == std::string::npos) continue;
      cells.push_back(cell.substr(a, cell.find_last_not_of(' ') - a + 1));
    }
    if (cells.size() == 3) rows[cells[0]] = {std::stod(cells[1]), std::stod(cells[2])};
  }
  return rows;
}

}  // namespace

TEST_CASE("graph facts match an independent recount of the demo graph") {
  const auto& g = demo_graph();
  const auto r = collect_facts(g, lp::ModelKind::kPgnn, lp::TrainConfig{}, fake_report(), false, options());
  std::size_t persons = 0;
  std::set<std::string> attrs, rels;
  std::map<std::string, std::size_t> gender;
  for (const auto& n : g.nodes()) {
    persons += n.kind == mdm::graph::NodeKind::kPerson;
    for (const auto& [k, v] : n.attributes) attrs.insert(k);
    if (n.attributes.count("gender")) ++gender[n.attributes.at("gender")];
  }
  for (const auto& e : g.edges()) rels.insert(e.relation);
  CHECK(r.graph.persons == persons);
  CHECK(r.graph.persons == demo::dataset().entities.size());
  CHECK(r.graph.orgs == g.num_nodes() - persons);
  CHECK(r.graph.links == g.num_edges());
  CHECK(r.graph.attributes == attrs.size());
  CHECK(r.graph.relations == rels.size());
  CHECK(r.graph.component_sizes == oracle_components(g));
  CHECK(r.graph.path_samples >= 100);
  CHECK(r.graph.average_path_length > 1.0);
  CHECK(r.protected_histograms.at("gender") == gender);
  CHECK(r.model_kind == "pgnn");
  CHECK(r.toolkit_version == MDM_VERSION);

  const auto md = render_graphsheet(r, Format::kMarkdown);
  std::ostringstream row;
  row << "| " << r.graph.persons << " | " << r.graph.orgs << " | " << r.graph.links << " | " << r.graph.attributes
      << " | " << r.graph.relations << " |";
  CHECK(md.find("| Persons | Orgs | Links | Attributes | Relations |") != std::string::npos);
  CHECK(md.find(row.str()) != std::string::npos);
}

TEST_CASE("collecting twice gives an identical record") {
  const auto& g = demo_graph();
  const auto a = collect_facts(g, lp::ModelKind::kGcn, lp::TrainConfig{}, fake_report(), true, options());
  const auto b = collect_facts(g, lp::ModelKind::kGcn, lp::TrainConfig{}, fake_report(), true, options());
  CHECK(record_to_json(a).dump() == record_to_json(b).dump());
  CHECK(render_graphsheet(a, Format::kMarkdown) == render_graphsheet(b, Format::kMarkdown));
  CHECK(a.dataset_hash == dataset_hash(g));
  CHECK(a.dataset_hash.size() == 16);
}

TEST_CASE("sections appear in order in markdown") {
  const auto r = collect_facts(demo_graph(), lp::ModelKind::kGcn, lp::TrainConfig{}, fake_report(), false, options());
  const auto md = render_graphsheet(r, Format::kMarkdown);
  std::size_t at = 0;
  for (const auto& title : section_titles()) {
    auto pos = md.find("## " + title + "\n", at);
    REQUIRE_MESSAGE(pos != std::string::npos, title);
    at = pos + 1;
  }
  CHECK(section_titles().size() == 6);
  for (const char* q : {"Where does the data come from?", "Is the data anonymized?",
                        "How are negative samples chosen?", "What do the thresholds mean?"})
    CHECK(md.find(q) != std::string::npos);
}

TEST_CASE("empty protected attribute list keeps the section") {
  auto o = options();
  o.protected_attributes.clear();
  const auto r = collect_facts(demo_graph(), lp::ModelKind::kGcn, lp::TrainConfig{}, fake_report(), false, o);
  CHECK(r.protected_histograms.empty());
  const auto md = render_graphsheet(r, Format::kMarkdown);
  CHECK(md.find("## Diversity & Protected Attributes\n\nNo protected attributes declared.") != std::string::npos);
  const auto j = Json::parse(render_graphsheet(r, Format::kJson));
  CHECK(j.at("protected_histograms").is_object());
  CHECK(j.at("protected_histograms").empty());
}

TEST_CASE("json round trip is lossless") {
  lp::TrainConfig c;
  c.seed = 1234567;
  c.learning_rate = 0.1 + 0.2;
  c.features.pop_back();
  auto r = collect_facts(demo_graph(), lp::ModelKind::kPgnn, c, fake_report(), true, options());
  r.graph.average_path_length = 1.0 / 3.0;
  const auto j = record_to_json(r);
  const auto back = record_from_json(Json::parse(j.dump()));
  CHECK(record_to_json(back) == j);
  CHECK(back.graph == r.graph);
  CHECK(back.config.learning_rate == c.learning_rate);
  CHECK(back.config.features == c.features);
  CHECK(back.metrics.mean.roc_auc == r.metrics.mean.roc_auc);
  CHECK(back.metrics.runs.size() == 3);
  CHECK(render_graphsheet(back, Format::kMarkdown) == render_graphsheet(r, Format::kMarkdown));
  CHECK(render_graphsheet(back, Format::kJson) == render_graphsheet(r, Format::kJson));
}

TEST_CASE("every config field appears in the sheet") {
  const auto r = collect_facts(demo_graph(), lp::ModelKind::kGcn, lp::TrainConfig{}, fake_report(), false, options());
  const auto md = render_graphsheet(r, Format::kMarkdown);
  const Json config_json = lp::TrainConfig{}.to_json();
  for (const auto& [key, value] : config_json.items()) {
    if (key == "features") continue;
    CHECK_MESSAGE(md.find("| " + key + " | " + value.dump() + " |") != std::string::npos, key);
  }
  for (const auto& f : lp::TrainConfig{}.features) CHECK(md.find("| " + f.attribute + " | ") != std::string::npos);
}

TEST_CASE("incomplete records are rejected") {
  auto r = collect_facts(demo_graph(), lp::ModelKind::kGcn, lp::TrainConfig{}, fake_report(), false, options());
  auto missing = r;
  missing.created_at.clear();
  CHECK_THROWS_AS(render_graphsheet(missing, Format::kMarkdown), mdm::Error);
  try {
    render_graphsheet(missing, Format::kJson);
  } catch (const mdm::Error& e) {
    CHECK(e.code() == ErrorCode::kIncompleteRecord);
  }
  auto j = record_to_json(r);
  j.at("model").at("config").erase("epochs");
  try {
    record_from_json(j);
    FAIL("expected IncompleteRecord");
  } catch (const mdm::Error& e) {
    CHECK(e.code() == ErrorCode::kIncompleteRecord);
  }
  auto j2 = record_to_json(r);
  j2.erase("metrics");
  CHECK_THROWS_AS(record_from_json(j2), mdm::Error);
}

TEST_CASE("metrics section mirrors the report of a demo run") {
  lp::TrainConfig c;
  c.epochs = 5;
  c.runs = 2;
  const auto result = lp::train(demo_graph(), c, lp::ModelKind::kGcn);
  const auto r = collect_facts(demo_graph(), lp::ModelKind::kGcn, c, result.report, false, options());
  const auto rows = metrics_rows(render_graphsheet(r, Format::kMarkdown));
  const auto mean = lp::metrics_to_json(result.report.mean);
  const auto sd = lp::metrics_to_json(result.report.std_dev);
  REQUIRE(rows.size() == mean.size());
  for (const auto& [key, value] : mean.items()) {
    CHECK(rows.at(key).first == value.get<double>());
    CHECK(rows.at(key).second == sd.at(key).get<double>());
  }
  CHECK(record_from_json(record_to_json(r)).metrics.runs.size() == 2);
}
