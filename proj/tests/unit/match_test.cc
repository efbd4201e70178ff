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

#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "mdm/match/bucket.h"
#include "mdm/match/compare.h"
#include "mdm/match/resolve.h"
#include "mdm/match/standardize.h"
#include "mdm/match/weights.h"
#include "support/demo.h"
#include "support/oracles.h"

using namespace mdm::match;
using mdm::ErrorCode;
using mdm::datagen::SourceKind;
using mdm::datagen::SourceRecord;

namespace {

StandardizedRecord std_record(const std::string& id, mdm::graph::AttributeMap attrs) {
  return standardize(SourceRecord{id, SourceKind::kStructured, std::move(attrs)});
}

std::vector<std::size_t> labels_of(const std::vector<std::vector<std::size_t>>& clusters, std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t c = 0; c < clusters.size(); ++c)
    for (auto i : clusters[c]) out[i] = c;
  return out;
}

Resolution resolve_demo(const mdm::datagen::Dataset& ds, const MatchConfig& cfg) {
  std::vector<StandardizedRecord> st;
  for (const auto& r : ds.records) st.push_back(standardize(r));
  return resolve(ds.records, compute_weights(st), cfg);
}

}  // namespace

TEST_CASE("soundex reference codes") {
  CHECK(soundex("ROBERT") == "R163");
  CHECK(soundex("RUPERT") == "R163");
  CHECK(soundex("ASHCRAFT") == "A261");
  CHECK(soundex("TYMCZAK") == "T522");
  CHECK(soundex("PFISTER") == "P236");
  CHECK(soundex("HONEYMAN") == "H555");
  CHECK(soundex("LEE") == "L000");
  CHECK(soundex("123") == "");
}

TEST_CASE("standardize normalizes by attribute") {
  auto r = std_record("R1", {{"surname", "  o'Brien "}, {"phone", "(555) 123-4567"}, {"given_name", "Kate"},
                             {"street", "12 Oak Street"}, {"dob", "1980-05-12"}});
  CHECK(r.find("surname")->value == "OBRIEN");
  CHECK(r.find("surname")->phonetic == soundex("OBRIEN"));
  CHECK(r.find("phone")->value == "5551234567");
  const auto& canon = r.find("given_name")->canonical;
  CHECK(std::find(canon.begin(), canon.end(), "CATHERINE") != canon.end());
  CHECK(r.find("street")->value == "12 OAK ST");
  CHECK(r.find("dob")->value == "19800512");
  CHECK(r.find("email") == nullptr);

  SourceRecord raw{"R2", SourceKind::kStructured, {{"surname", "smith"}}};
  const auto copy = raw;
  CHECK(standardize(raw).find("surname")->value == "SMITH");
  CHECK(raw == copy);
}

TEST_CASE("weights follow log inverse frequency") {
  std::vector<StandardizedRecord> uniform;
  for (int i = 0; i < 10; ++i) uniform.push_back(std_record("R" + std::to_string(i), {{"state", "CA"}}));
  CHECK(compute_weights(uniform).agreement("state", "CA") == 0.0);

  std::vector<StandardizedRecord> corpus;
  for (int i = 0; i < 1024; ++i)
    corpus.push_back(std_record("R" + std::to_string(i), {{"surname", i == 0 ? "RARE" : "COMMON"}}));
  const auto w = compute_weights(corpus);
  CHECK(w.agreement("surname", "RARE") == doctest::Approx(10.0));
  CHECK(w.agreement("surname", "RARE") >= w.agreement("surname", "COMMON"));
  CHECK(w.agreement("surname", "UNSEEN") == doctest::Approx(10.0));
  CHECK_MDM_ERROR(compute_weights({}), ErrorCode::kInvalidArgument);

  const auto back = weights_from_json(weights_to_json(w));
  CHECK(back.agreement("surname", "COMMON") == w.agreement("surname", "COMMON"));
}

TEST_CASE("weight monotonicity over the demo corpus") {
  const auto& ds = demo::dataset();
  std::vector<StandardizedRecord> st;
  for (const auto& r : ds.records) st.push_back(standardize(r));
  const auto w = compute_weights(st);
  std::map<std::string, std::size_t> freq;
  for (const auto& r : st)
    if (auto v = r.find("surname")) ++freq[v->value];
  for (const auto& [a, fa] : freq) {
    for (const auto& [b, fb] : freq) {
      if (fa <= fb) CHECK(w.agreement("surname", a) >= w.agreement("surname", b));
    }
    if (a > "C") break;  // a slice is enough to keep this quadratic check quick
  }
}

TEST_CASE("bucketing examples") {
  auto a = std_record("R1", {{"surname", "SMITH"}, {"dob", "1980-01-02"}, {"phone", "5550001111"}});
  auto b = a;
  b.record_id = "R2";
  std::vector<BucketRecipe> recipes;
  for (const auto& t : MatchConfig::default_bucket_recipes()) recipes.push_back(parse_recipe(t));
  for (const auto& rc : recipes) CHECK(bucket_keys(a, rc) == bucket_keys(b, rc));

  auto c = std_record("R3", {{"surname", "SMITH"}, {"dob", "1980-01-02"}, {"phone", "5559999999"}});
  auto pairs = candidate_pairs({a, c}, {parse_recipe("soundex(surname)+year(dob)"), parse_recipe("value(phone)")});
  CHECK(pairs == std::vector<RecordPair>{{0, 1}});
  CHECK(bucket_keys(std_record("R4", {{"dob", "1980-01-02"}}), parse_recipe("soundex(surname)+year(dob)")).empty());
  CHECK_MDM_ERROR(parse_recipe("bogus(surname)"), ErrorCode::kConfigError);
  CHECK_MDM_ERROR(parse_recipe("value"), ErrorCode::kConfigError);
}

TEST_CASE("compare scores") {
  std::vector<StandardizedRecord> corpus = {
      std_record("R1", {{"surname", "SMITH"}, {"given_name", "JOHN"}, {"city", "BOSTON"}}),
      std_record("R2", {{"surname", "SMYTH"}, {"given_name", "JOHN"}, {"city", "DENVER"}}),
      std_record("R3", {{"surname", "JONES"}, {"given_name", "KATE"}}),
      std_record("R4", {{"surname", "SMITH"}, {"given_name", "CATHERINE"}, {"city", "BOSTON"}}),
  };
  const auto w = compute_weights(corpus);
  const auto self = compare(corpus[0], corpus[0], w);
  double sum = 0.0;
  for (const auto& [k, v] : corpus[0].values) sum += w.agreement(k, v.value);
  CHECK(self.total == doctest::Approx(sum));

  REQUIRE(oracle::levenshtein("SMITH", "SMYTH") == 1);
  REQUIRE(soundex("SMITH") == soundex("SMYTH"));
  const auto s12 = compare(corpus[0], corpus[1], w);
  CHECK(s12.contributions.at("surname") ==
        doctest::Approx(0.7 * std::min(w.agreement("surname", "SMITH"), w.agreement("surname", "SMYTH"))));
  CHECK(s12.contributions.at("city") == w.disagreement);

  const auto s34 = compare(corpus[2], corpus[3], w);
  CHECK(s34.contributions.at("given_name") > 0.0);  // nickname match
  CHECK(s34.contributions.count("city") == 0);      // missing on one side

  const auto gender = compare(std_record("R5", {{"gender", "F"}}), std_record("R6", {{"gender", "M"}}),
                              compute_weights({std_record("R5", {{"gender", "F"}}), std_record("R6", {{"gender", "M"}})}));
  CHECK(gender.contributions.at("gender") == -4.0);
}

TEST_CASE("compare is symmetric and totals its contributions") {
  const auto& ds = demo::dataset();
  std::vector<StandardizedRecord> st;
  for (std::size_t i = 0; i < 400; ++i) st.push_back(standardize(ds.records[i]));
  const auto w = compute_weights(st);
  const auto opts = MatchConfig::defaults().compare;
  std::mt19937 gen(5);
  std::uniform_int_distribution<std::size_t> pick(0, st.size() - 1);
  for (int t = 0; t < 500; ++t) {
    const auto& a = st[pick(gen)];
    const auto& b = st[pick(gen)];
    const auto ab = compare(a, b, w, opts);
    const auto ba = compare(b, a, w, opts);
    CHECK(ab.total == ba.total);
    CHECK(ab.contributions == ba.contributions);
    double sum = 0.0;
    for (const auto& [k, c] : ab.contributions) sum += c;
    CHECK(ab.total == sum);
  }
}

TEST_CASE("decide thresholds") {
  Thresholds t{20.0, 11.0};
  CHECK(decide(20.0, t) == Decision::kLink);
  CHECK(decide(19.999, t) == Decision::kClericalReview);
  CHECK(decide(11.0, t) == Decision::kClericalReview);
  CHECK(decide(10.999, t) == Decision::kNoLink);
  CHECK_MDM_ERROR(decide(5.0, Thresholds{10.0, 12.0}), ErrorCode::kInvalidThresholds);
  CHECK_MDM_ERROR(parse_thresholds("11:20"), ErrorCode::kInvalidThresholds);
  CHECK_MDM_ERROR(parse_thresholds("abc"), ErrorCode::kInvalidThresholds);
  CHECK(parse_thresholds("20:11").autolink == 20.0);

  // Raising the total never moves a decision away from Link.
  auto rank = [](Decision d) { return d == Decision::kLink ? 2 : d == Decision::kClericalReview ? 1 : 0; };
  for (double x = -10.0; x < 40.0; x += 0.25) CHECK(rank(decide(x + 0.25, t)) >= rank(decide(x, t)));
}

TEST_CASE("pairwise metrics match the brute-force oracle") {
  std::mt19937 gen(9);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<std::size_t> label(0, 1 + trial % 7);
    std::vector<std::size_t> p(60), t(60);
    for (auto& x : p) x = label(gen);
    for (auto& x : t) x = label(gen);
    const auto m = pairwise_metrics(p, t);
    const auto o = oracle::brute_force_pairwise(p, t);
    CHECK(m.precision == doctest::Approx(o.precision).epsilon(1e-12));
    CHECK(m.recall == doctest::Approx(o.recall).epsilon(1e-12));
    CHECK(m.f1 == doctest::Approx(o.f1).epsilon(1e-12));
  }
}

TEST_CASE("resolve with no links leaves one entity per record") {
  const auto& ds = demo::dataset();
  std::vector<SourceRecord> few(ds.records.begin(), ds.records.begin() + 50);
  std::vector<StandardizedRecord> st;
  for (const auto& r : few) st.push_back(standardize(r));
  auto cfg = MatchConfig::defaults();
  cfg.thresholds = {1e9, 1e9};
  const auto res = resolve(few, compute_weights(st), cfg);
  CHECK(res.clusters.size() == few.size());
}

TEST_CASE("resolve on the clean demo fixture recovers the truth exactly") {
  const auto& ds = demo::dataset(0.0);
  const auto res = resolve_demo(ds, MatchConfig::defaults());
  const auto m = pairwise_metrics(res.cluster_of, demo::truth_labels(ds));
  CHECK(m.f1 == 1.0);
}

TEST_CASE("resolve on the noisy demo fixture") {
  const auto& ds = demo::dataset();
  auto cfg = MatchConfig::defaults();
  cfg.threads = 4;
  const auto res = resolve_demo(ds, cfg);
  const auto truth = demo::truth_labels(ds);
  const auto m = pairwise_metrics(res.cluster_of, truth);
  CHECK(m.f1 >= 0.9);

  std::vector<RecordPair> cands;
  for (const auto& p : res.pairs) cands.push_back({p.a, p.b});
  CHECK(candidate_recall(cands, truth) >= 0.98);

  // Single-threaded scoring gives identical pairs.
  const auto serial = resolve_demo(ds, MatchConfig::defaults());
  REQUIRE(serial.pairs.size() == res.pairs.size());
  for (std::size_t i = 0; i < res.pairs.size(); ++i) CHECK(serial.pairs[i].score.total == res.pairs[i].score.total);

  // Partition is a transitive closure: every Link pair sits in one cluster.
  for (const auto& p : res.pairs)
    if (p.decision == Decision::kLink) CHECK(res.cluster_of[p.a] == res.cluster_of[p.b]);

  // Sweeping autolink: clusters refine, so recall never rises.
  double last_recall = 2.0;
  std::vector<std::size_t> last;
  for (double a = 5.0; a <= 45.0; a += 2.5) {
    const auto labels = labels_of(clusters_from_links(ds.records.size(), res.pairs, {a, std::min(a, 11.0)}), ds.records.size());
    const auto mm = pairwise_metrics(labels, truth);
    CHECK(mm.recall <= last_recall);
    if (!last.empty()) {
      for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j : {i + 1, i + 7}) {
          if (j < labels.size() && labels[i] == labels[j]) CHECK(last[i] == last[j]);
        }
    }
    last_recall = mm.recall;
    last = labels;
  }
}

TEST_CASE("bucketing never changes a pair's score") {
  const auto& ds = demo::dataset();
  std::vector<SourceRecord> few(ds.records.begin(), ds.records.begin() + 600);
  std::vector<StandardizedRecord> st;
  for (const auto& r : few) st.push_back(standardize(r));
  const auto w = compute_weights(st);
  auto narrow = MatchConfig::defaults();
  narrow.bucket_recipes = {"value(dob)"};
  const auto a = resolve(few, w, MatchConfig::defaults());
  const auto b = resolve(few, w, narrow);
  std::map<RecordPair, double> wide;
  for (const auto& p : a.pairs) wide[{p.a, p.b}] = p.score.total;
  std::size_t common = 0;
  for (const auto& p : b.pairs) {
    auto it = wide.find({p.a, p.b});
    if (it == wide.end()) continue;
    CHECK(it->second == p.score.total);
    ++common;
  }
  CHECK(common > 0);
}

TEST_CASE("entity graph lifts relationships and unions attributes") {
  std::vector<SourceRecord> records = {
      {"R1", SourceKind::kUnstructured, {{"surname", "DOE"}, {"city", "TEXTVILLE"}}},
      {"R2", SourceKind::kStructured, {{"surname", "DOE"}, {"zip", "12345"}, {"city", "TABTOWN"}}},
      {"R3", SourceKind::kSemiStructured, {{"surname", "ROE"}}},
  };
  Resolution res;
  res.clusters = {{0, 1}, {2}};
  res.cluster_of = {0, 0, 1};
  mdm::datagen::GroundTruth truth;
  truth.record_entity = {{"R1", 0}, {"R2", 0}, {"R3", 1}};
  truth.relationships = {{0, 1, "friend"}, {1, 0, "friend"}, {0, 0, "knows"}};
  const auto g = build_entity_graph(records, res, truth);
  CHECK(g.num_nodes() == 2);
  CHECK(g.num_edges() == 1);
  CHECK(g.node(0).attributes.at("city") == "TABTOWN");
  CHECK(g.node(0).attributes.at("zip") == "12345");
  CHECK(g.node(0).key == "R1");
}
