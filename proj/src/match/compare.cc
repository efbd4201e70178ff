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

#include "mdm/match/compare.h"

#include <algorithm>
#include <cmath>

#include "mdm/common/error.h"
#include "mdm/common/text.h"

namespace mdm::match {

namespace {

bool intersects(const std::vector<std::string>& x, const std::vector<std::string>& y) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i;
    else ++j;
  }
  return false;
}

}  // namespace

Agreement classify(const std::string&, const StandardValue& x, const StandardValue& y,
                   const CompareOptions& options) {
  if (x.value == y.value) return Agreement::kExact;
  if (!x.phonetic.empty() && x.phonetic == y.phonetic) return Agreement::kNear;
  if (intersects(x.canonical, y.canonical)) return Agreement::kNear;
  if (std::min(x.value.size(), y.value.size()) >= options.near_match_min_length &&
      text::edit_distance(x.value, y.value) <= 1)
    return Agreement::kNear;
  return Agreement::kDisagree;
}

MatchScore compare(const StandardizedRecord& a, const StandardizedRecord& b, const WeightTable& w,
                   const CompareOptions& options) {
  const bool swap = b.record_id < a.record_id;
  const StandardizedRecord& first = swap ? b : a;
  const StandardizedRecord& second = swap ? a : b;
  MatchScore score;
  score.a = first.record_id;
  score.b = second.record_id;
  auto visit = [&](const std::string& name, const StandardValue& x) {
    const StandardValue* y = second.find(name);
    if (y == nullptr) return;
    double c = 0.0;
    switch (classify(name, x, *y, options)) {
      case Agreement::kExact:
        c = w.agreement(name, x.value);
        break;
      case Agreement::kNear:
        c = options.near_match_factor * std::min(w.agreement(name, x.value), w.agreement(name, y->value));
        break;
      case Agreement::kDisagree:
        c = w.disagreement;
        break;
      case Agreement::kMissing:
        return;
    }
    score.contributions[name] = c;
  };
  if (options.attributes.empty()) {
    for (const auto& [name, x] : first.values) visit(name, x);
  } else {
    for (const auto& name : options.attributes) {
      if (const StandardValue* x = first.find(name)) visit(name, *x);
    }
  }
  for (const auto& [name, c] : score.contributions) score.total += c;
  return score;
}

void Thresholds::validate() const {
  if (!std::isfinite(autolink) || !std::isfinite(review) || review > autolink)
    throw Error(ErrorCode::kInvalidThresholds, "thresholds need review <= autolink, got autolink " +
                                                   std::to_string(autolink) + " review " + std::to_string(review));
}

Thresholds parse_thresholds(const std::string& text) {
  const auto parts = text::split(text, ':');
  if (parts.size() != 2) throw Error(ErrorCode::kInvalidThresholds, "expected AUTOLINK:REVIEW, got '" + text + "'");
  Thresholds t;
  try {
    t.autolink = std::stod(parts[0]);
    t.review = std::stod(parts[1]);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidThresholds, "non-numeric thresholds '" + text + "'");
  }
  t.validate();
  return t;
}

const char* decision_name(Decision d) {
  switch (d) {
    case Decision::kLink:
      return "link";
    case Decision::kClericalReview:
      return "clerical_review";
    case Decision::kNoLink:
      return "no_link";
  }
  return "?";
}

Decision decide(double total, const Thresholds& t) {
  t.validate();
  if (total >= t.autolink) return Decision::kLink;
  if (total >= t.review) return Decision::kClericalReview;
  return Decision::kNoLink;
}

}  // namespace mdm::match
