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

#include <map>
#include <string>

#include "mdm/match/standardize.h"
#include "mdm/match/weights.h"

namespace mdm::match {

struct CompareOptions {
  std::vector<std::string> attributes;  // compared attributes; empty means all
  double near_match_factor = 0.7;
  // Edit-distance near matches need both values at least this long, so that
  // one-letter codes such as gender never count as near misses of each other.
  std::size_t near_match_min_length = 3;
};

struct MatchScore {
  std::string a;  // smaller record id
  std::string b;
  std::map<std::string, double> contributions;
  double total = 0.0;
};

enum class Agreement { kMissing, kExact, kNear, kDisagree };

Agreement classify(const std::string& attribute, const StandardValue& x, const StandardValue& y,
                   const CompareOptions& options);

MatchScore compare(const StandardizedRecord& a, const StandardizedRecord& b, const WeightTable& w,
                   const CompareOptions& options = {});

struct Thresholds {
  double autolink = 20.0;
  double review = 11.0;

  void validate() const;  // InvalidThresholds unless review <= autolink, both finite
};

// Parses "autolink:review", e.g. "20:11".
Thresholds parse_thresholds(const std::string& text);

enum class Decision { kLink, kClericalReview, kNoLink };
const char* decision_name(Decision d);

Decision decide(double total, const Thresholds& t);

}  // namespace mdm::match
