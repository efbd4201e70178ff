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

#include "mdm/match/bucket.h"

#include <algorithm>
#include <unordered_map>

#include "mdm/common/error.h"
#include "mdm/common/text.h"

namespace mdm::match {

BucketRecipe parse_recipe(const std::string& text) {
  BucketRecipe recipe;
  recipe.text = text;
  for (const auto& raw : text::split(text, '+')) {
    const std::string part = text::trim(raw);
    const auto open = part.find('(');
    if (open == std::string::npos || part.back() != ')' || open == 0)
      throw Error(ErrorCode::kConfigError, "bad bucket recipe part '" + part + "'");
    BucketPart p{part.substr(0, open), part.substr(open + 1, part.size() - open - 2)};
    if (p.fn != "value" && p.fn != "soundex" && p.fn != "year" && p.fn != "canonical" && p.fn != "initial")
      throw Error(ErrorCode::kConfigError, "unknown bucket function '" + p.fn + "'");
    if (p.attribute.empty()) throw Error(ErrorCode::kConfigError, "bucket recipe part without attribute");
    recipe.parts.push_back(std::move(p));
  }
  if (recipe.parts.empty()) throw Error(ErrorCode::kConfigError, "empty bucket recipe");
  return recipe;
}

std::vector<std::string> bucket_keys(const StandardizedRecord& record, const BucketRecipe& recipe) {
  std::vector<std::string> keys = {recipe.text};
  for (const auto& part : recipe.parts) {
    const StandardValue* v = record.find(part.attribute);
    if (v == nullptr) return {};
    std::vector<std::string> pieces;
    if (part.fn == "value") {
      pieces = {v->value};
    } else if (part.fn == "soundex") {
      pieces = {v->phonetic.empty() ? soundex(v->value) : v->phonetic};
    } else if (part.fn == "year") {
      if (v->value.size() < 4) return {};
      pieces = {v->value.substr(0, 4)};
    } else if (part.fn == "canonical") {
      pieces = v->canonical.empty() ? std::vector<std::string>{v->value} : v->canonical;
    } else {
      pieces = {v->value.substr(0, 1)};
    }
    std::vector<std::string> next;
    for (const auto& k : keys) {
      for (const auto& p : pieces) {
        if (p.empty()) continue;
        next.push_back(k + "|" + p);
      }
    }
    keys = std::move(next);
    if (keys.empty()) return {};
  }
  return keys;
}

std::vector<RecordPair> candidate_pairs(const std::vector<StandardizedRecord>& records,
                                        const std::vector<BucketRecipe>& recipes,
                                        std::size_t max_bucket_size) {
  std::unordered_map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (const auto& recipe : recipes) {
      for (auto& key : bucket_keys(records[i], recipe)) {
        auto& members = buckets[std::move(key)];
        if (members.empty() || members.back() != i) members.push_back(i);
      }
    }
  }
  std::vector<RecordPair> pairs;
  for (const auto& [key, members] : buckets) {
    if (max_bucket_size != 0 && members.size() > max_bucket_size) continue;
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y) pairs.emplace_back(members[x], members[y]);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

}  // namespace mdm::match
