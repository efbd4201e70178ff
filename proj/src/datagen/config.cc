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

#include "mdm/datagen/config.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "mdm/common/error.h"

namespace mdm::datagen {

const std::vector<std::string>& known_attributes() {
  static const std::vector<std::string> kAttributes = {
      "given_name", "surname", "gender",   "ethnicity", "dob",
      "street",     "city",    "state",    "zip",       "phone",
      "email",      "ssn",     "employer", "employment_start", "last_updated"};
  return kAttributes;
}

std::vector<std::pair<std::string, double>> GeneratorConfig::default_relation_weights() {
  return {{"knows", 0.30},     {"colleague", 0.20}, {"friend", 0.15},
          {"neighbor", 0.10},  {"household", 0.08}, {"relative", 0.07},
          {"sibling", 0.05},   {"business_partner", 0.03}, {"spouse", 0.02}};
}

std::vector<ProtectedAttribute> GeneratorConfig::default_protected_attributes() {
  return {{"gender", {{"F", 0.5}, {"M", 0.5}}},
          {"ethnicity",
           {{"WHITE", 0.58}, {"HISPANIC", 0.19}, {"BLACK", 0.12}, {"ASIAN", 0.06}, {"OTHER", 0.05}}}};
}

const ProtectedAttribute* GeneratorConfig::find_protected(const std::string& name) const {
  for (const auto& p : protected_attributes) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw Error(ErrorCode::kConfigError, message);
}

}  // namespace

void GeneratorConfig::validate() const {
  if (n_entities < 1) fail("n_entities must be >= 1");
  if (!(zipf_exponent > 1.0)) fail("zipf_exponent must be > 1");
  if (max_records_per_entity < 1) fail("max_records_per_entity must be >= 1");
  if (!(typo_rate >= 0.0 && typo_rate <= 1.0)) fail("typo_rate must be in [0,1]");
  if (!(edge_to_node_ratio > 0.0)) fail("edge_to_node_ratio must be > 0");
  if (!(target_avg_path_length > 0.0)) fail("target_avg_path_length must be > 0");
  if (attribute_schema.empty()) fail("attribute_schema is empty");

  const auto& known = known_attributes();
  std::set<std::string> seen;
  for (const auto& a : attribute_schema) {
    if (std::find(known.begin(), known.end(), a) == known.end()) fail("unknown attribute '" + a + "'");
    if (!seen.insert(a).second) fail("attribute '" + a + "' listed twice");
  }

  if (relation_type_weights.empty()) fail("relation_type_weights is empty");
  double total = 0.0;
  std::set<std::string> relations;
  for (const auto& [r, w] : relation_type_weights) {
    if (r.empty()) fail("empty relation name");
    if (!(w >= 0.0)) fail("negative weight for relation '" + r + "'");
    if (!relations.insert(r).second) fail("relation '" + r + "' listed twice");
    total += w;
  }
  if (!(total > 0.0)) fail("relation weights sum to zero");

  for (const auto& p : protected_attributes) {
    if (!seen.count(p.name)) fail("protected attribute '" + p.name + "' is not in the schema");
    if (p.categories.empty()) fail("protected attribute '" + p.name + "' has no categories");
    double sum = 0.0;
    for (const auto& [c, share] : p.categories) {
      if (c.empty() || !(share >= 0.0)) fail("bad category for '" + p.name + "'");
      sum += share;
    }
    if (std::abs(sum - 1.0) > 1e-6) fail("proportions of '" + p.name + "' do not sum to 1");
  }
}

GeneratorConfig config_from_json(const Json& j) {
  if (!j.is_object()) fail("config must be a JSON object");
  static const std::set<std::string> kKeys = {
      "seed", "n_entities", "zipf_exponent", "max_records_per_entity", "typo_rate",
      "edge_to_node_ratio", "relation_type_weights", "attribute_schema",
      "protected_attributes", "target_avg_path_length", "separation_samples"};
  for (const auto& [k, _] : j.items()) {
    if (!kKeys.count(k)) fail("unknown config key '" + k + "'");
  }
  GeneratorConfig c;
  try {
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("n_entities")) c.n_entities = j.at("n_entities").get<std::size_t>();
    if (j.contains("zipf_exponent")) c.zipf_exponent = j.at("zipf_exponent").get<double>();
    if (j.contains("max_records_per_entity"))
      c.max_records_per_entity = j.at("max_records_per_entity").get<int>();
    if (j.contains("typo_rate")) c.typo_rate = j.at("typo_rate").get<double>();
    if (j.contains("edge_to_node_ratio")) c.edge_to_node_ratio = j.at("edge_to_node_ratio").get<double>();
    if (j.contains("target_avg_path_length"))
      c.target_avg_path_length = j.at("target_avg_path_length").get<double>();
    if (j.contains("separation_samples"))
      c.separation_samples = j.at("separation_samples").get<std::size_t>();
    if (j.contains("attribute_schema"))
      c.attribute_schema = j.at("attribute_schema").get<std::vector<std::string>>();
    if (j.contains("relation_type_weights")) {
      c.relation_type_weights.clear();
      for (const auto& [r, w] : j.at("relation_type_weights").items())
        c.relation_type_weights.emplace_back(r, w.get<double>());
    }
    if (j.contains("protected_attributes")) {
      c.protected_attributes.clear();
      for (const auto& [name, cats] : j.at("protected_attributes").items()) {
        ProtectedAttribute p{name, {}};
        for (const auto& [cat, share] : cats.items()) p.categories.emplace_back(cat, share.get<double>());
        c.protected_attributes.push_back(std::move(p));
      }
    }
  } catch (const Json::exception& e) {
    fail(std::string("malformed config: ") + e.what());
  }
  c.validate();
  return c;
}

Json config_to_json(const GeneratorConfig& c) {
  Json relations = Json::object();
  for (const auto& [r, w] : c.relation_type_weights) relations[r] = w;
  Json protected_attrs = Json::object();
  for (const auto& p : c.protected_attributes) {
    Json cats = Json::object();
    for (const auto& [cat, share] : p.categories) cats[cat] = share;
    protected_attrs[p.name] = cats;
  }
  return {{"seed", c.seed},
          {"n_entities", c.n_entities},
          {"zipf_exponent", c.zipf_exponent},
          {"max_records_per_entity", c.max_records_per_entity},
          {"typo_rate", c.typo_rate},
          {"edge_to_node_ratio", c.edge_to_node_ratio},
          {"relation_type_weights", relations},
          {"attribute_schema", c.attribute_schema},
          {"protected_attributes", protected_attrs},
          {"target_avg_path_length", c.target_avg_path_length},
          {"separation_samples", c.separation_samples}};
}

GeneratorConfig load_config(const std::filesystem::path& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    fail(path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

}  // namespace mdm::datagen
