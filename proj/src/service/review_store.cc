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

#include "mdm/service/review_store.h"

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <mutex>

#include "mdm/common/error.h"

namespace mdm::service {

namespace {

std::uint64_t pair_key(graph::NodeId u, graph::NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::kPending:
      return "pending";
    case Status::kAccepted:
      return "accepted";
    case Status::kRejected:
      return "rejected";
  }
  return "pending";
}

Status parse_status(std::string_view name) {
  if (name == "pending") return Status::kPending;
  if (name == "accepted") return Status::kAccepted;
  if (name == "rejected") return Status::kRejected;
  throw Error(ErrorCode::kInvalidArgument, "unknown status: " + std::string(name));
}

Json record_to_json(const PredictionRecord& r) {
  return {{"id", r.id},
          {"u", r.u},
          {"v", r.v},
          {"probability", r.probability},
          {"status", status_name(r.status)},
          {"note", r.note},
          {"steward", r.steward},
          {"created_at", r.created_at},
          {"decided_at", r.decided_at}};
}

std::string utc_now() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ReviewStore::ReviewStore(std::filesystem::path log, match::Thresholds initial, Clock clock)
    : log_(std::move(log)), clock_(std::move(clock)), thresholds_(initial) {
  initial.validate();
  if (std::filesystem::exists(log_)) for_each_jsonl(log_, [&](std::size_t, const Json& entry) { apply(entry); });
  if (log_.has_parent_path()) std::filesystem::create_directories(log_.parent_path());
  out_ = std::fopen(log_.c_str(), "a");
  if (!out_) throw Error(ErrorCode::kIoError, "cannot open review log " + log_.string());
}

ReviewStore::~ReviewStore() {
  if (out_) std::fclose(out_);
}

void ReviewStore::append(const Json& entry) {
  const std::string line = entry.dump() + "\n";
  if (std::fwrite(line.data(), 1, line.size(), out_) != line.size() || std::fflush(out_) != 0 ||
      ::fsync(fileno(out_)) != 0)
    throw Error(ErrorCode::kIoError, "cannot append to review log " + log_.string());
}

void ReviewStore::apply(const Json& e) {
  try {
    const auto op = e.at("op").get<std::string>();
    if (op == "enqueue") {
      PredictionRecord r;
      r.id = e.at("id").get<std::uint64_t>();
      r.u = e.at("u").get<graph::NodeId>();
      r.v = e.at("v").get<graph::NodeId>();
      r.probability = e.at("probability").get<double>();
      r.steward = e.at("actor").get<std::string>();
      r.created_at = e.at("at").get<std::string>();
      by_pair_[pair_key(r.u, r.v)] = r.id;
      next_id_ = std::max(next_id_, r.id + 1);
      records_[r.id] = std::move(r);
    } else if (op == "decide") {
      auto& r = records_.at(e.at("id").get<std::uint64_t>());
      r.status = parse_status(e.at("status").get<std::string>());
      r.note = e.at("note").get<std::string>();
      r.steward = e.at("actor").get<std::string>();
      r.decided_at = e.at("at").get<std::string>();
    } else if (op == "thresholds") {
      thresholds_ = {e.at("autolink").get<double>(), e.at("review").get<double>()};
      history_.push_back({thresholds_, e.at("actor").get<std::string>(), e.at("at").get<std::string>()});
    } else {
      throw Error(ErrorCode::kSchemaMismatch, "unknown review log op: " + op);
    }
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::kSchemaMismatch, std::string("review log entry: ") + ex.what());
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::kSchemaMismatch, "review log decides an unknown record");
  }
}

EnqueueResult ReviewStore::enqueue(const std::vector<Candidate>& candidates, const std::string& actor) {
  std::unique_lock lock(mu_);
  EnqueueResult result;
  for (const auto& c : candidates) {
    if (auto it = by_pair_.find(pair_key(c.u, c.v)); it != by_pair_.end()) {
      result.existing.push_back(it->second);
      continue;
    }
    Json entry = {{"op", "enqueue"}, {"id", next_id_}, {"u", c.u},         {"v", c.v},
                  {"probability", c.probability},     {"actor", actor},   {"at", clock_()}};
    append(entry);
    apply(entry);
    result.added.push_back(entry.at("id").get<std::uint64_t>());
  }
  return result;
}

PredictionRecord ReviewStore::decide(std::uint64_t id, Status decision, const std::string& note,
                                     const std::string& steward) {
  if (decision == Status::kPending) throw Error(ErrorCode::kInvalidArgument, "decision must be accept or reject");
  std::unique_lock lock(mu_);
  auto it = records_.find(id);
  if (it == records_.end()) throw Error(ErrorCode::kNotFound, "no prediction " + std::to_string(id));
  if (it->second.status != Status::kPending)
    throw Error(ErrorCode::kAlreadyDecided,
                "prediction " + std::to_string(id) + " is already " + status_name(it->second.status));
  Json entry = {{"op", "decide"}, {"id", id},        {"status", status_name(decision)},
                {"note", note},   {"actor", steward}, {"at", clock_()}};
  append(entry);
  apply(entry);
  return it->second;
}

match::Thresholds ReviewStore::set_thresholds(const match::Thresholds& t, const std::string& actor) {
  t.validate();
  std::unique_lock lock(mu_);
  Json entry = {{"op", "thresholds"}, {"autolink", t.autolink}, {"review", t.review},
                {"actor", actor},     {"at", clock_()}};
  append(entry);
  apply(entry);
  return thresholds_;
}

std::optional<PredictionRecord> ReviewStore::get(std::uint64_t id) const {
  std::shared_lock lock(mu_);
  auto it = records_.find(id);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

std::vector<PredictionRecord> ReviewStore::list(std::optional<Status> status) const {
  std::shared_lock lock(mu_);
  std::vector<PredictionRecord> out;
  for (const auto& [_, r] : records_)
    if (!status || r.status == *status) out.push_back(r);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.probability != b.probability) return a.probability > b.probability;
    return a.id < b.id;
  });
  return out;
}

match::Thresholds ReviewStore::thresholds() const {
  std::shared_lock lock(mu_);
  return thresholds_;
}

std::vector<ThresholdChange> ReviewStore::threshold_history() const {
  std::shared_lock lock(mu_);
  return history_;
}

Json ReviewStore::view_json() const {
  std::shared_lock lock(mu_);
  Json records = Json::array();
  for (const auto& [_, r] : records_) records.push_back(record_to_json(r));
  Json history = Json::array();
  for (const auto& h : history_)
    history.push_back(
        {{"autolink", h.thresholds.autolink}, {"review", h.thresholds.review}, {"actor", h.actor}, {"at", h.at}});
  return {{"records", records},
          {"thresholds", {{"autolink", thresholds_.autolink}, {"review", thresholds_.review}}},
          {"threshold_history", history},
          {"next_id", next_id_}};
}

}  // namespace mdm::service
