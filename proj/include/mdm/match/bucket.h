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

#include <string>
#include <utility>
#include <vector>

#include "mdm/match/standardize.h"

namespace mdm::match {

// A bucketing recipe is a '+'-joined list of derivations "fn(attribute)"
// where fn is one of value, soundex, year, canonical, initial. For example
// "soundex(surname)+year(dob)". A record missing any referenced attribute
// does not enter that recipe's buckets; "canonical" may yield several keys.
struct BucketPart {
  std::string fn;
  std::string attribute;
};

struct BucketRecipe {
  std::string text;
  std::vector<BucketPart> parts;
};

BucketRecipe parse_recipe(const std::string& text);

std::vector<std::string> bucket_keys(const StandardizedRecord& record, const BucketRecipe& recipe);

using RecordPair = std::pair<std::size_t, std::size_t>;

// Pairs of record indices (first < second, ascending) sharing at least one
// bucket. Buckets larger than max_bucket_size are skipped when it is non-zero.
std::vector<RecordPair> candidate_pairs(const std::vector<StandardizedRecord>& records,
                                        const std::vector<BucketRecipe>& recipes,
                                        std::size_t max_bucket_size = 0);

}  // namespace mdm::match
