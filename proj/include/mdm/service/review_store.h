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
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "mdm/common/jsonl.h"
#include "mdm/graph/property_graph.h"
#include "mdm/match/compare.h"

namespace mdm::service {

enum class Status { kPending, kAccepted, kRejected };
const char* status_name(Status s);
Status parse_status(std::string_view name);  // InvalidArgument otherwise

struct PredictionRecord {
  std::uint64_t id = 0;
  graph::NodeId u = 0;  // watchlist node
  graph::NodeId v = 0;
  double probability = 0.0;
  Status status = Status::kPending;
  std::string note;
  std::string steward;
  std::string created_at;
  std::string decided_at;
};

Json record_to_json(const PredictionRecord& r);

struct ThresholdChange {
  match::Thresholds thresholds;
  std::string actor;
  std::string at;
};

struct Candidate {
  graph::NodeId u = 0;
  graph::NodeId v = 0;
  double probability = 0.0;
};

struct EnqueueResult {
  std::vector<std::uint64_t> added;
  std::vector<std::uint64_t> existing;  // pairs already in the store
};

using Clock = std::function<std::string()>;
std::string utc_now();

// Append-only JSON-lines log plus the in-memory view it derives. Readers share
// a lock; every mutation holds it exclusively and returns after the log line
// is flushed and synced.
class ReviewStore {
 public:
  // Replays `log` when it exists; later mutations append to it.
  ReviewStore(std::filesystem::path log, match::Thresholds initial, Clock clock = utc_now);
  ~ReviewStore();
  ReviewStore(const ReviewStore&) = delete;
  ReviewStore& operator=(const ReviewStore&) = delete;

  EnqueueResult enqueue(const std::vector<Candidate>& candidates, const std::string& actor);
  // NotFound, AlreadyDecided; `decision` must not be kPending.
  PredictionRecord decide(std::uint64_t id, Status decision, const std::string& note, const std::string& steward);
  // InvalidThresholds unless review <= autolink.
  match::Thresholds set_thresholds(const match::Thresholds& t, const std::string& actor);

  std::optional<PredictionRecord> get(std::uint64_t id) const;
  // Probability descending, then id.
  std::vector<PredictionRecord> list(std::optional<Status> status) const;
  match::Thresholds thresholds() const;
  std::vector<ThresholdChange> threshold_history() const;

  // Canonical serialization of the current state.
  Json view_json() const;
  std::string view_text() const { return view_json().dump(); }

  const std::filesystem::path& log_path() const { return log_; }

 private:
  void apply(const Json& entry);
  void append(const Json& entry);

  std::filesystem::path log_;
  Clock clock_;
  std::FILE* out_ = nullptr;
  mutable std::shared_mutex mu_;
  std::map<std::uint64_t, PredictionRecord> records_;
  std::map<std::uint64_t, std::uint64_t> by_pair_;  // pair key -> record id
  match::Thresholds thresholds_;
  std::vector<ThresholdChange> history_;
  std::uint64_t next_id_ = 1;
};

}  // namespace mdm::service
