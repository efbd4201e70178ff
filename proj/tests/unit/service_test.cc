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

#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "mdm/common/error.h"
#include "mdm/common/rng.h"
#include "mdm/service/http_server.h"
#include "mdm/service/service.h"
#include "support/run_fixture.h"

using namespace mdm::service;
using mdm::ErrorCode;
using mdm::Json;
namespace fs = std::filesystem;

namespace {

// Deterministic timestamps so replays can be compared byte for byte.
mdm::service::Clock counter_clock() {
  auto n = std::make_shared<int>(0);
  return [n] { return "t" + std::to_string((*n)++); };
}

ServeConfig serve_config(const fs::path& log) {
  const auto& f = demo::run_fixture();
  ServeConfig c;
  c.run_dir = f.run;
  c.corpus = f.sources / mdm::datagen::kTextSourceFile;
  c.match_scores = f.resolved / mdm::match::kMatchScoresFile;
  c.log = log;
  c.default_top_k = 5;
  return c;
}

std::unique_ptr<Service> make_service(const fs::path& log) {
  auto c = serve_config(log);
  return std::make_unique<Service>(load_artifacts(c), c, counter_clock());
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const mdm::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kIoError;
}

// Decision counts straight from the scores file.
std::array<std::size_t, 3> oracle_counts(const fs::path& scores, double autolink, double review) {
  std::array<std::size_t, 3> c{};
  mdm::for_each_jsonl(scores, [&](std::size_t, const Json& row) {
    const double t = row.at("total").get<double>();
    ++c[t >= autolink ? 0 : t >= review ? 1 : 2];
  });
  return c;
}

std::string hash_tree(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::uint64_t h = mdm::fnv1a64(std::string_view{});
  for (const auto& p : files) h = mdm::fnv1a64(p.string() + mdm::read_file(p), h);
  return std::to_string(h);
}

}  // namespace

TEST_CASE("review store transitions and replay") {
  const auto dir = demo::temp_dir("store");
  const auto log = dir / "log.jsonl";
  {
    ReviewStore s(log, {20, 11}, counter_clock());
    auto r = s.enqueue({{1, 2, 0.9}, {1, 3, 0.7}, {2, 1, 0.5}}, "alice");
    CHECK(r.added == std::vector<std::uint64_t>{1, 2});
    CHECK(r.existing == std::vector<std::uint64_t>{1});
    CHECK(s.decide(2, Status::kRejected, "no", "bob").status == Status::kRejected);
    CHECK(code_of([&] { s.decide(2, Status::kAccepted, "", "bob"); }) == ErrorCode::kAlreadyDecided);
    CHECK(code_of([&] { s.decide(9, Status::kAccepted, "", "bob"); }) == ErrorCode::kNotFound);
    CHECK(code_of([&] { s.decide(1, Status::kPending, "", "bob"); }) == ErrorCode::kInvalidArgument);
    CHECK(code_of([&] { s.set_thresholds({5, 6}, "bob"); }) == ErrorCode::kInvalidThresholds);
    s.set_thresholds({30, 2}, "carol");
    CHECK(s.get(2)->steward == "bob");
    CHECK(s.get(2)->decided_at == "t2");

    ReviewStore replayed(log, {20, 11}, counter_clock());
    CHECK(replayed.view_text() == s.view_text());
    CHECK(replayed.thresholds().autolink == 30);
  }
  ReviewStore reopened(log, {20, 11}, counter_clock());
  CHECK(reopened.list(Status::kPending).size() == 1);
  CHECK(reopened.enqueue({{5, 6, 0.1}}, "x").added == std::vector<std::uint64_t>{3});
  std::ofstream(dir / "bad.jsonl") << "{\"op\":\"decide\",\"id\":4}\n";
  CHECK(code_of([&] { ReviewStore bad(dir / "bad.jsonl", {20, 11}); }) == ErrorCode::kSchemaMismatch);
}

TEST_CASE("queue order is probability descending then id") {
  const auto dir = demo::temp_dir("order");
  ReviewStore s(dir / "log.jsonl", {20, 11}, counter_clock());
  s.enqueue({{0, 1, 0.5}, {0, 2, 0.9}, {0, 3, 0.5}, {0, 4, 0.7}}, "a");
  std::vector<std::uint64_t> ids;
  for (const auto& r : s.list(std::nullopt)) ids.push_back(r.id);
  CHECK(ids == std::vector<std::uint64_t>{2, 4, 1, 3});
}

TEST_CASE("concurrent writers leave a replayable log") {
  const auto dir = demo::temp_dir("concurrent");
  const auto log = dir / "log.jsonl";
  ReviewStore s(log, {20, 11}, counter_clock());
  std::vector<std::thread> threads;
  std::atomic<int> conflicts{0};
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (unsigned i = 0; i < 25; ++i) s.enqueue({{static_cast<unsigned>(t), 100 + i, 0.01 * i}}, "w");
      for (std::uint64_t id = 1; id <= 25; ++id) {
        try {
          s.decide(id, t % 2 ? Status::kAccepted : Status::kRejected, "", "w");
        } catch (const mdm::Error&) {
          ++conflicts;
        }
      }
      (void)s.list(Status::kPending);
    });
  for (auto& th : threads) th.join();
  CHECK(s.list(std::nullopt).size() == 100);
  CHECK(conflicts == 75);
  ReviewStore replayed(log, {20, 11}, counter_clock());
  CHECK(replayed.view_text() == s.view_text());
}

TEST_CASE("watchlist, explanation and feedback round trip") {
  const auto dir = demo::temp_dir("roundtrip");
  auto svc = make_service(dir / "log.jsonl");
  const auto& a = svc->artifacts();

  CHECK(svc->health() == Json{{"status", "ok"}, {"version", MDM_VERSION}});
  CHECK(code_of([&] { svc->post_watchlist({}, 5, "s"); }) == ErrorCode::kEmptyWatchlist);
  CHECK(code_of([&] { svc->post_watchlist({0, -1, 1 << 30}, 5, "s"); }) == ErrorCode::kUnknownNodeIds);

  const auto expected = mdm::linkpred::watchlist_predict(a.model, a.graph, {0, 7}, 5);
  const auto posted = svc->post_watchlist({0, 7}, std::nullopt, "steward-1");
  CHECK(posted.at("enqueued").size() == expected.size());
  CHECK(expected.size() == 5);
  CHECK(svc->post_watchlist({7, 0}, 5, "steward-1").at("enqueued").empty());

  const auto queue = svc->list_predictions(Status::kPending, 100, 0);
  REQUIRE(queue.at("predictions").size() == 5);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& p = queue.at("predictions")[i];
    CHECK(p.at("u").get<unsigned>() == expected[i].watch);
    CHECK(p.at("v").get<unsigned>() == expected[i].other);
    CHECK(p.at("probability").get<double>() == expected[i].probability);
  }
  CHECK(svc->list_predictions(std::nullopt, 2, 1).at("predictions").size() == 2);
  CHECK(svc->list_predictions(std::nullopt, 2, 1).at("predictions")[0] == queue.at("predictions")[1]);

  const auto id = queue.at("predictions")[0].at("id").get<std::uint64_t>();
  const auto ex = svc->explanation(id);
  for (const char* key : {"u", "v", "score", "paths", "verification", "comparison"}) CHECK(ex.contains(key));
  CHECK(ex.at("score").get<double>() == expected[0].probability);

  const auto decided = svc->feedback(id, "accept", "confirmed", "steward-2");
  CHECK(decided.at("status") == "accepted");
  CHECK(decided.at("steward") == "steward-2");
  CHECK(code_of([&] { svc->feedback(id, "reject", "", "s"); }) == ErrorCode::kAlreadyDecided);
  CHECK(code_of([&] { svc->feedback(id, "maybe", "", "s"); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { svc->feedback(999, "accept", "", "s"); }) == ErrorCode::kNotFound);
  CHECK(code_of([&] { (void)svc->explanation(999); }) == ErrorCode::kNotFound);

  const auto view = svc->store().view_text();
  svc.reset();
  auto restarted = make_service(dir / "log.jsonl");
  CHECK(restarted->prediction(id).at("status") == "accepted");
  CHECK(restarted->store().view_text() == view);
}

TEST_CASE("threshold sweep matches a recount of the stored scores") {
  const auto dir = demo::temp_dir("thresholds");
  auto svc = make_service(dir / "log.jsonl");
  const auto scores = demo::run_fixture().resolved / mdm::match::kMatchScoresFile;

  std::size_t frozen_review = 0, frozen_link = 0;
  mdm::for_each_jsonl(scores, [&](std::size_t, const Json& row) {
    frozen_link += row.at("decision") == "link";
    frozen_review += row.at("decision") == "clerical_review";
  });
  auto t = svc->thresholds();
  CHECK(t.at("counts").at("link").get<std::size_t>() == frozen_link);
  CHECK(t.at("counts").at("clerical_review").get<std::size_t>() == frozen_review);

  double max_total = -std::numeric_limits<double>::infinity();
  for (const auto& s : svc->artifacts().scores) max_total = std::max(max_total, s.total);

  std::size_t previous_link = std::numeric_limits<std::size_t>::max();
  for (double autolink = 0; autolink <= 60; autolink += 2.5) {
    const double review = autolink / 2;
    const auto got = svc->put_thresholds({autolink, review}, "sweeper").at("counts");
    const auto want = oracle_counts(scores, autolink, review);
    CHECK(got.at("link").get<std::size_t>() == want[0]);
    CHECK(got.at("clerical_review").get<std::size_t>() == want[1]);
    CHECK(got.at("no_link").get<std::size_t>() == want[2]);
    CHECK(got.at("link").get<std::size_t>() <= previous_link);
    previous_link = got.at("link").get<std::size_t>();
  }
  auto high = svc->put_thresholds({max_total + 1, 11}, "s").at("counts");
  CHECK(high.at("link") == 0);
  auto low = svc->put_thresholds({20, -1e300}, "s").at("counts");
  CHECK(low.at("no_link") == 0);
  CHECK(code_of([&] { svc->put_thresholds({5, 10}, "s"); }) == ErrorCode::kInvalidThresholds);
  CHECK(svc->thresholds().at("history").size() == 27);
  CHECK(svc->thresholds().at("history").back().at("actor") == "s");
}

TEST_CASE("graphsheet and node endpoints") {
  const auto dir = demo::temp_dir("sheet");
  auto svc = make_service(dir / "log.jsonl");
  const auto md = svc->graphsheet(mdm::graphsheet::Format::kMarkdown);
  for (const auto& title : mdm::graphsheet::section_titles()) CHECK(md.find("## " + title) != std::string::npos);
  const auto j = Json::parse(svc->graphsheet(mdm::graphsheet::Format::kJson));
  CHECK(j == mdm::graphsheet::record_to_json(demo::run_fixture().train.record));
  CHECK(j.at("graph").at("persons").get<std::size_t>() == svc->artifacts().graph.num_nodes());

  const auto n = svc->node(3);
  CHECK(n.at("id") == 3);
  CHECK(n.at("neighbors").size() == svc->artifacts().graph.degree(3));
  CHECK(code_of([&] { (void)svc->node(-1); }) == ErrorCode::kNotFound);
}

TEST_CASE("missing artifacts are reported") {
  const auto dir = demo::temp_dir("missing");
  auto c = serve_config(dir / "log.jsonl");
  c.corpus = dir / "nope.txt";
  CHECK(code_of([&] { (void)load_artifacts(c); }) == ErrorCode::kArtifactMissing);
  c = serve_config(dir / "log.jsonl");
  c.run_dir = dir;
  CHECK(code_of([&] { (void)load_artifacts(c); }) == ErrorCode::kArtifactMissing);
}

TEST_CASE("http endpoints") {
  const auto dir = demo::temp_dir("http");
  const auto before = hash_tree(demo::run_fixture().run);
  auto svc = make_service(dir / "log.jsonl");
  HttpServer server(*svc);
  const int port = server.start("127.0.0.1", 0);
  REQUIRE(port > 0);
  httplib::Client cli("127.0.0.1", port);
  httplib::Headers steward = {{kStewardHeader, "dana"}};

  auto health = cli.Get("/health");
  REQUIRE(health);
  CHECK(health->status == 200);
  CHECK(Json::parse(health->body).at("status") == "ok");

  auto empty = cli.Post("/watchlist", R"({"node_ids":[]})", "application/json");
  CHECK(empty->status == 400);
  CHECK(Json::parse(empty->body).at("error") == mdm::error_code_name(ErrorCode::kEmptyWatchlist));
  CHECK(cli.Post("/watchlist", R"({"node_ids":[123456789]})", "application/json")->status == 400);
  CHECK(cli.Post("/watchlist", "not json", "application/json")->status == 400);

  auto posted = cli.Post("/watchlist", steward, R"({"node_ids":[4],"top_k":3})", "application/json");
  REQUIRE(posted->status == 200);
  CHECK(Json::parse(posted->body).at("enqueued").size() == 3);

  auto list = Json::parse(cli.Get("/predictions?status=pending&limit=10")->body);
  REQUIRE(list.at("predictions").size() == 3);
  const auto id = std::to_string(list.at("predictions")[0].at("id").get<std::uint64_t>());
  CHECK(cli.Get("/predictions/" + id)->status == 200);
  CHECK(cli.Get("/predictions/4242")->status == 404);
  CHECK(cli.Get("/predictions?status=bogus")->status == 400);

  auto ex = cli.Get("/predictions/" + id + "/explanation");
  REQUIRE(ex->status == 200);
  CHECK(Json::parse(ex->body).contains("verification"));

  auto fb = cli.Post("/predictions/" + id + "/feedback", steward, R"({"decision":"reject","note":"different person"})",
                     "application/json");
  REQUIRE(fb->status == 200);
  CHECK(Json::parse(fb->body).at("status") == "rejected");
  CHECK(Json::parse(fb->body).at("steward") == "dana");
  auto again = cli.Post("/predictions/" + id + "/feedback", R"({"decision":"accept"})", "application/json");
  CHECK(again->status == 409);

  CHECK(cli.Get("/thresholds")->status == 200);
  CHECK(cli.Put("/thresholds", R"({"autolink":5,"review":9})", "application/json")->status == 400);
  auto put = cli.Put("/thresholds", steward, R"({"autolink":25,"review":12})", "application/json");
  REQUIRE(put->status == 200);
  CHECK(Json::parse(put->body).at("history").back().at("actor") == "dana");

  auto sheet = cli.Get("/graphsheet?format=md");
  REQUIRE(sheet->status == 200);
  CHECK(sheet->body.find("## Caveats/FAQ") != std::string::npos);
  CHECK(cli.Get("/graphsheet?format=pdf")->status == 400);
  CHECK(Json::parse(cli.Get("/graphsheet")->body).contains("metrics"));
  CHECK(cli.Get("/nodes/0")->status == 200);
  CHECK(cli.Get("/nodes/99999999")->status == 404);

  HttpServer second(*svc);
  CHECK(code_of([&] { second.start("127.0.0.1", port); }) == ErrorCode::kPortInUse);
  server.stop();

  CHECK(hash_tree(demo::run_fixture().run) == before);
  ReviewStore replayed(dir / "log.jsonl", {20, 11}, counter_clock());
  CHECK(replayed.view_text() == svc->store().view_text());
}
