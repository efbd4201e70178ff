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

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "mdm/common/jsonl.h"
#include "mdm/match/standardize.h"

namespace mdm::match {

struct AttributeWeights {
  std::size_t total = 0;               // records carrying the attribute
  double default_agreement = 0.0;      // weight of a value unseen in the corpus
  std::map<std::string, double> values;
};

struct WeightTable {
  double w_max = 15.0;
  double disagreement = -4.0;
  std::map<std::string, AttributeWeights> attributes;

  // Agreement weight of a standardized value; 0 for unknown attributes.
  double agreement(const std::string& attribute, const std::string& value) const;
};

// log2(N_a / count(v)) clipped to [0, w_max], where N_a counts records that
// carry attribute a.
WeightTable compute_weights(const std::vector<StandardizedRecord>& records, double w_max = 15.0,
                            double disagreement = -4.0);

Json weights_to_json(const WeightTable& w);
WeightTable weights_from_json(const Json& j);
void save_weights(const WeightTable& w, const std::filesystem::path& path);
WeightTable load_weights(const std::filesystem::path& path);

}  // namespace mdm::match
