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
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "mdm/common/jsonl.h"

namespace mdm::datagen {

// Attributes the generator knows how to synthesize, in default schema order.
const std::vector<std::string>& known_attributes();

struct ProtectedAttribute {
  std::string name;
  // Category -> target proportion; proportions sum to 1.
  std::vector<std::pair<std::string, double>> categories;
};

struct GeneratorConfig {
  std::uint64_t seed = 42;
  std::size_t n_entities = 2000;
  double zipf_exponent = 2.0;
  int max_records_per_entity = 10;
  double typo_rate = 0.1;
  double edge_to_node_ratio = 5.0;
  std::vector<std::pair<std::string, double>> relation_type_weights = default_relation_weights();
  std::vector<std::string> attribute_schema = known_attributes();
  std::vector<ProtectedAttribute> protected_attributes = default_protected_attributes();
  // Advisory: the wiring is tuned toward this giant-component mean path length.
  double target_avg_path_length = 6.0;
  // Number of sampled entity pairs in the degree-of-separation table.
  std::size_t separation_samples = 200;

  static std::vector<std::pair<std::string, double>> default_relation_weights();
  static std::vector<ProtectedAttribute> default_protected_attributes();

  // Throws ConfigError describing the first violated constraint.
  void validate() const;

  const ProtectedAttribute* find_protected(const std::string& name) const;
};

// Canonical JSON schema. Unknown keys are rejected; missing keys keep defaults.
GeneratorConfig config_from_json(const Json& j);
Json config_to_json(const GeneratorConfig& config);
GeneratorConfig load_config(const std::filesystem::path& path);

}  // namespace mdm::datagen
