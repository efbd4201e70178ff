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

#include "mdm/match/resolve.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

#include "mdm/common/error.h"

namespace mdm::match {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

int source_rank(datagen::SourceKind k) {
  switch (k) {
    case datagen::SourceKind::kStructured:
      return 0;
    case datagen::SourceKind::kSemiStructured:
      return 1;
    case datagen::SourceKind::kUnstructured:
      return 2;
  }
  return 3;
}

std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace

std::vector<std::string> MatchConfig::default_bucket_recipes() {
  return {"soundex(surname)+year(dob)", "value(phone)", "value(ssn)", "value(dob)",
          "canonical(given_name)+soundex(surname)", "value(email)"};
}

std::vector<std::string> MatchConfig::default_compare_attributes() {
  return {"given_name", "surname", "gender", "dob", "street", "city", "state", "zip",
          "phone", "email", "ssn", "employer", "employment_start"};
}

MatchConfig MatchConfig::defaults() {
  MatchConfig c;
  c.compare.attributes = default_compare_attributes();
  return c;
}

MatchConfig match_config_from_json(const Json& j) {
  MatchConfig c = MatchConfig::defaults();
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "bucket_recipes") c.bucket_recipes = v.get<std::vector<std::string>>();
      else if (key == "compare_attributes") c.compare.attributes = v.get<std::vector<std::string>>();
      else if (key == "near_match_factor") c.compare.near_match_factor = v.get<double>();
      else if (key == "near_match_min_length") c.compare.near_match_min_length = v.get<std::size_t>();
      else if (key == "autolink") c.thresholds.autolink = v.get<double>();
      else if (key == "review") c.thresholds.review = v.get<double>();
      else if (key == "w_max") c.w_max = v.get<double>();
      else if (key == "disagreement") c.disagreement = v.get<double>();
      else if (key == "max_bucket_size") c.max_bucket_size = v.get<std::size_t>();
      else if (key == "threads") c.threads = v.get<unsigned>();
      else throw Error(ErrorCode::kConfigError, "unknown match config key '" + key + "'");
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kConfigError, std::string("match config: ") + e.what());
  }
  for (const auto& r : c.bucket_recipes) parse_recipe(r);
  c.thresholds.validate();
  return c;
}

Json match_config_to_json(const MatchConfig& c) {
  return {{"bucket_recipes", c.bucket_recipes},
          {"compare_attributes", c.compare.attributes},
          {"near_match_factor", c.compare.near_match_factor},
          {"near_match_min_length", c.compare.near_match_min_length},
          {"autolink", c.thresholds.autolink},
          {"review", c.thresholds.review},
          {"w_max", c.w_max},
          {"disagreement", c.disagreement},
          {"max_bucket_size", c.max_bucket_size},
          {"threads", c.threads}};
}

std::vector<std::vector<std::size_t>> clusters_from_links(std::size_t n, const std::vector<ScoredPair>& pairs,
                                                          const Thresholds& t) {
  t.validate();
  DisjointSets sets(n);
  for (const auto& p : pairs) {
    if (decide(p.score.total, t) == Decision::kLink) sets.unite(p.a, p.b);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[sets.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

Resolution resolve(const std::vector<datagen::SourceRecord>& records, const WeightTable& weights,
                   const MatchConfig& config) {
  config.thresholds.validate();
  Resolution r;
  r.standardized.reserve(records.size());
  for (const auto& rec : records) r.standardized.push_back(standardize(rec));

  std::vector<BucketRecipe> recipes;
  for (const auto& text : config.bucket_recipes) recipes.push_back(parse_recipe(text));
  const auto candidates = candidate_pairs(r.standardized, recipes, config.max_bucket_size);

  r.pairs.resize(candidates.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto& p = r.pairs[i];
      p.a = candidates[i].first;
      p.b = candidates[i].second;
      p.score = compare(r.standardized[p.a], r.standardized[p.b], weights, config.compare);
      p.decision = decide(p.score.total, config.thresholds);
    }
  };
  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1 || candidates.size() < 1024) {
    work(0, candidates.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (candidates.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(candidates.size(), t * chunk);
      const std::size_t end = std::min(candidates.size(), begin + chunk);
      pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  r.clusters = clusters_from_links(records.size(), r.pairs, config.thresholds);
  r.cluster_of.assign(records.size(), 0);
  for (std::size_t c = 0; c < r.clusters.size(); ++c)
    for (auto i : r.clusters[c]) r.cluster_of[i] = c;
  return r;
}

PairwiseMetrics pairwise_metrics(const std::vector<std::size_t>& predicted, const std::vector<std::size_t>& truth) {
  if (predicted.size() != truth.size())
    throw Error(ErrorCode::kShapeMismatch, "label vectors differ in length");
  std::map<std::size_t, std::size_t> pred_sizes, true_sizes;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> joint;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    ++pred_sizes[predicted[i]];
    ++true_sizes[truth[i]];
    ++joint[{predicted[i], truth[i]}];
  }
  PairwiseMetrics m;
  for (const auto& [k, n] : pred_sizes) m.predicted_pairs += choose2(n);
  for (const auto& [k, n] : true_sizes) m.true_pairs += choose2(n);
  for (const auto& [k, n] : joint) m.correct_pairs += choose2(n);
  m.precision = m.predicted_pairs == 0 ? 1.0 : static_cast<double>(m.correct_pairs) / m.predicted_pairs;
  m.recall = m.true_pairs == 0 ? 1.0 : static_cast<double>(m.correct_pairs) / m.true_pairs;
  m.f1 = m.precision + m.recall == 0.0 ? 0.0 : 2.0 * m.precision * m.recall / (m.precision + m.recall);
  return m;
}

double candidate_recall(const std::vector<RecordPair>& candidates, const std::vector<std::size_t>& truth) {
  std::map<std::size_t, std::size_t> sizes;
  for (auto t : truth) ++sizes[t];
  std::size_t total = 0;
  for (const auto& [k, n] : sizes) total += choose2(n);
  if (total == 0) return 1.0;
  std::size_t hit = 0;
  for (const auto& [a, b] : candidates) hit += truth.at(a) == truth.at(b);
  return static_cast<double>(hit) / static_cast<double>(total);
}

graph::PropertyGraph build_entity_graph(const std::vector<datagen::SourceRecord>& records,
                                        const Resolution& resolution, const datagen::GroundTruth& truth) {
  std::vector<graph::Node> nodes(resolution.clusters.size());
  for (std::size_t c = 0; c < resolution.clusters.size(); ++c) {
    auto members = resolution.clusters[c];
    std::sort(members.begin(), members.end(), [&](std::size_t x, std::size_t y) {
      const int rx = source_rank(records[x].source), ry = source_rank(records[y].source);
      if (rx != ry) return rx < ry;
      return records[x].record_id < records[y].record_id;
    });
    auto& node = nodes[c];
    node.id = static_cast<graph::NodeId>(c);
    node.kind = graph::NodeKind::kPerson;
    std::string first_id = records[resolution.clusters[c].front()].record_id;
    for (auto i : resolution.clusters[c]) first_id = std::min(first_id, records[i].record_id);
    node.key = first_id;
    for (auto i : members) {
      for (const auto& [name, value] : records[i].attributes) node.attributes.emplace(name, value);
    }
  }

  // Each source entity lifts to the resolved entity holding most of its records.
  std::unordered_map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < records.size(); ++i) index_of.emplace(records[i].record_id, i);
  std::map<datagen::EntityId, std::map<std::size_t, std::size_t>> votes;
  for (const auto& [rid, eid] : truth.record_entity) {
    auto it = index_of.find(rid);
    if (it == index_of.end()) continue;
    ++votes[eid][resolution.cluster_of[it->second]];
  }
  std::map<datagen::EntityId, std::size_t> lifted;
  for (const auto& [eid, counts] : votes) {
    std::size_t best = counts.begin()->first, best_n = 0;
    for (const auto& [c, n] : counts) {
      if (n > best_n) {
        best = c;
        best_n = n;
      }
    }
    lifted[eid] = best;
  }

  std::set<std::tuple<std::size_t, std::size_t, std::string>> seen;
  std::vector<graph::Edge> edges;
  for (const auto& rel : truth.relationships) {
    auto a = lifted.find(rel.a);
    auto b = lifted.find(rel.b);
    if (a == lifted.end() || b == lifted.end() || a->second == b->second) continue;
    const auto lo = std::min(a->second, b->second), hi = std::max(a->second, b->second);
    if (!seen.insert({lo, hi, rel.relation}).second) continue;
    edges.push_back({static_cast<graph::NodeId>(lo), static_cast<graph::NodeId>(hi), rel.relation, {}});
  }
  return graph::PropertyGraph::build(std::move(nodes), std::move(edges));
}

Json score_to_json(const MatchScore& s) {
  return {{"a", s.a}, {"b", s.b}, {"total", s.total}, {"contributions", s.contributions}};
}

void write_resolution(const std::vector<datagen::SourceRecord>& records, const Resolution& resolution,
                      const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::vector<Json> scores, review, entities;
  for (const auto& p : resolution.pairs) {
    Json row = score_to_json(p.score);
    row["decision"] = decision_name(p.decision);
    scores.push_back(row);
    if (p.decision == Decision::kClericalReview) review.push_back(score_to_json(p.score));
  }
  for (std::size_t c = 0; c < resolution.clusters.size(); ++c) {
    std::vector<std::string> ids;
    for (auto i : resolution.clusters[c]) ids.push_back(records[i].record_id);
    entities.push_back({{"node", c}, {"records", ids}});
  }
  write_jsonl(dir / kMatchScoresFile, scores);
  write_jsonl(dir / kClericalReviewFile, review);
  write_jsonl(dir / kEntitiesFile, entities);
}

std::vector<std::vector<std::string>> load_entity_members(const std::filesystem::path& dir) {
  std::vector<std::vector<std::string>> out;
  for_each_jsonl(dir / kEntitiesFile, [&](std::size_t, const Json& row) {
    try {
      const auto node = row.at("node").get<std::size_t>();
      if (node != out.size()) throw Error(ErrorCode::kSchemaMismatch, "entities.jsonl is not in node order");
      out.push_back(row.at("records").get<std::vector<std::string>>());
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kSchemaMismatch, std::string("entities.jsonl: ") + e.what());
    }
  });
  return out;
}

}  // namespace mdm::match
