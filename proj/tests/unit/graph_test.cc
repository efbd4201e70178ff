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

#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "mdm/graph/components.h"
#include "mdm/graph/distances.h"
#include "mdm/graph/graph_io.h"
#include "mdm/graph/property_graph.h"
#include "support/oracles.h"

using namespace mdm::graph;
using mdm::ErrorCode;

namespace {

PropertyGraph make_graph(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& pairs,
                         const std::string& relation = "knows") {
  std::vector<Node> nodes(n);
  for (std::size_t i = 0; i < n; ++i) nodes[i].id = static_cast<NodeId>(i);
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({a, b, relation, {}});
  return PropertyGraph::build(std::move(nodes), std::move(edges));
}

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("mdm_graph_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("build_graph on a path has degree sequence 1,2,1") {
  auto g = make_graph(3, {{0, 1}, {1, 2}});
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(2) == 1);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("build_graph rejects structural violations") {
  std::vector<Node> six(6);
  for (NodeId i = 0; i < 6; ++i) six[i].id = i;
  CHECK_MDM_ERROR(PropertyGraph::build(six, {{5, 5, "knows", {}}}), ErrorCode::kSelfLoop);
  CHECK_MDM_ERROR(PropertyGraph::build(six, {{1, 9, "knows", {}}}), ErrorCode::kDanglingEdge);
  CHECK_MDM_ERROR(PropertyGraph::build(six, {{1, 2, "knows", {}}, {2, 1, "knows", {}}}),
                  ErrorCode::kDuplicateEdge);
  auto dup = six;
  dup[3].id = 2;
  CHECK_MDM_ERROR(PropertyGraph::build(dup, {}), ErrorCode::kDuplicateNode);

  // Same pair, different relation: two distinct edges.
  auto g = PropertyGraph::build(six, {{1, 2, "knows", {}}, {2, 1, "spouse", {}}});
  CHECK(g.num_edges() == 2);
  CHECK(g.neighbor_nodes(1) == std::vector<NodeId>{2});
}

TEST_CASE("connected_components") {
  CHECK(connected_components(PropertyGraph{}).empty());
  auto g = make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<NodeId>{0, 1, 2});
  CHECK(comps[1] == std::vector<NodeId>{3, 4, 5});
}

TEST_CASE("components form a partition on random graphs") {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 5 + trial * 3;
    auto raw = oracle::random_edges(n, 0.05, gen);
    std::vector<std::pair<NodeId, NodeId>> pairs(raw.begin(), raw.end());
    auto g = make_graph(n, pairs);
    auto comps = connected_components(g);
    std::vector<int> owner(n, -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (NodeId v : comps[c]) {
        CHECK(owner[v] == -1);
        owner[v] = static_cast<int>(c);
      }
    }
    auto sizes = oracle::component_size_of(n, raw);
    for (std::size_t v = 0; v < n; ++v) {
      REQUIRE(owner[v] >= 0);
      CHECK(comps[owner[v]].size() == sizes[v]);
    }
  }
}

TEST_CASE("filter_components") {
  std::vector<std::pair<NodeId, NodeId>> pairs{{0, 1}, {1, 2}};
  for (NodeId i = 3; i < 14; ++i) pairs.emplace_back(i, i + 1);  // 12-node path 3..14
  auto g = make_graph(15, pairs);
  auto filtered = filter_components(g, 10);
  CHECK(filtered.graph.num_nodes() == 12);
  CHECK(filtered.graph.num_edges() == 11);
  CHECK(filtered.new_to_old.front() == 3);
  CHECK(filtered.old_to_new[0] == kInvalidNode);
  CHECK(filtered.old_to_new[3] == 0);

  auto identity = filter_components(g, 1);
  CHECK(identity.graph == g);

  CHECK_MDM_ERROR(filter_components(g, 100), ErrorCode::kEmptyResult);

  auto twice = filter_components(filtered.graph, 10);
  CHECK(twice.graph == filtered.graph);
}

TEST_CASE("filter_components agrees with a union-find scan") {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 120;
    auto raw = oracle::random_edges(n, 0.012, gen);
    std::vector<std::pair<NodeId, NodeId>> pairs(raw.begin(), raw.end());
    auto g = make_graph(n, pairs);
    auto sizes = oracle::component_size_of(n, raw);
    std::size_t expected = 0;
    for (auto s : sizes) expected += s >= 10 ? 1 : 0;
    if (expected == 0) continue;
    auto filtered = filter_components(g, 10);
    CHECK(filtered.graph.num_nodes() == expected);
    CHECK(filter_components(filtered.graph, 10).graph == filtered.graph);
  }
}

TEST_CASE("bfs_distances truncates at the cutoff") {
  auto g = make_graph(3, {{0, 1}, {1, 2}});
  auto full = bfs_distances(g, 0, 5).sorted();
  CHECK(full == std::vector<std::pair<NodeId, std::uint32_t>>{{0, 0}, {1, 1}, {2, 2}});
  auto cut = bfs_distances(g, 0, 1).sorted();
  CHECK(cut == std::vector<std::pair<NodeId, std::uint32_t>>{{0, 0}, {1, 1}});
  CHECK_MDM_ERROR(bfs_distances(g, 7, 1), ErrorCode::kUnknownNode);
}

TEST_CASE("bfs_distances matches Floyd-Warshall within the cutoff") {
  std::mt19937 gen(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 50;
    auto raw = oracle::random_edges(n, 0.06, gen);
    std::vector<std::pair<NodeId, NodeId>> pairs(raw.begin(), raw.end());
    auto g = make_graph(n, pairs);
    auto fw = oracle::floyd_warshall(n, raw);
    const std::uint32_t cutoff = static_cast<std::uint32_t>(trial % 7);
    std::vector<NodeId> sources(n);
    for (NodeId i = 0; i < n; ++i) sources[i] = i;
    auto cache = DistanceCache::compute(g, sources, cutoff, 3);
    for (NodeId s = 0; s < n; ++s) {
      const auto& row = cache.row(s);
      for (NodeId t = 0; t < n; ++t) {
        if (fw[s][t] <= cutoff) {
          REQUIRE(row.at(t).has_value());
          CHECK(*row.at(t) == fw[s][t]);
          CHECK(cache.distance(t, s) == row.at(t));
        } else {
          CHECK_FALSE(row.at(t).has_value());
        }
      }
    }
  }
}

TEST_CASE("save then load is the identity") {
  std::vector<Node> nodes(3);
  for (NodeId i = 0; i < 3; ++i) nodes[i].id = i;
  nodes[0].attributes = {{"surname", "O'BRIEN"}, {"city", "ST. LOUIS"}};
  nodes[1].kind = NodeKind::kOrg;
  nodes[1].key = "R1|R7";
  nodes[2].attributes = {{"note", "unicode \xC3\xA9 and \"quotes\""}};
  auto g = PropertyGraph::build(nodes, {{2, 0, "spouse", {{"since", "2001"}}}, {0, 1, "colleague", {}}});
  auto dir = temp_dir("roundtrip");
  save_graph(g, dir);
  CHECK(load_graph(dir) == g);
}

TEST_CASE("load_graph reports errors") {
  auto dir = temp_dir("dangling");
  {
    std::ofstream(dir / "nodes.jsonl") << R"({"id":0,"kind":"Person","attributes":{}})" << "\n";
    std::ofstream(dir / "edges.jsonl") << R"({"src":0,"dst":3,"relation":"knows","properties":{}})"
                                       << "\n";
  }
  CHECK_MDM_ERROR(load_graph(dir), ErrorCode::kSchemaMismatch);
  CHECK_MDM_ERROR(load_graph(dir / "missing"), ErrorCode::kIoError);
}

TEST_CASE("the shipped demo fixture has the counts recorded at generation") {
  const std::filesystem::path dir = MDM_TEST_DATA_DIR "/demo_graph";
  const auto log = mdm::Json::parse(mdm::read_file(dir / "generation_log.json"));
  const auto g = load_graph(dir);
  CHECK(g.num_nodes() == log.at("nodes").get<std::size_t>());
  CHECK(g.num_edges() == log.at("edges").get<std::size_t>());
  CHECK(g.num_nodes() == log.at("n_entities").get<std::size_t>());
}
