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

#include "mdm/match/weights.h"

#include <algorithm>
#include <cmath>

#include "mdm/common/error.h"

namespace mdm::match {

double WeightTable::agreement(const std::string& attribute, const std::string& value) const {
  auto a = attributes.find(attribute);
  if (a == attributes.end()) return 0.0;
  auto v = a->second.values.find(value);
  return v == a->second.values.end() ? a->second.default_agreement : v->second;
}

WeightTable compute_weights(const std::vector<StandardizedRecord>& records, double w_max,
                            double disagreement) {
  if (records.empty()) throw Error(ErrorCode::kInvalidArgument, "cannot compute weights of an empty corpus");
  std::map<std::string, std::map<std::string, std::size_t>> counts;
  std::map<std::string, std::size_t> totals;
  for (const auto& r : records) {
    for (const auto& [name, v] : r.values) {
      ++counts[name][v.value];
      ++totals[name];
    }
  }
  auto clip = [&](double w) { return std::clamp(w, 0.0, w_max); };
  WeightTable table;
  table.w_max = w_max;
  table.disagreement = disagreement;
  for (const auto& [name, values] : counts) {
    auto& aw = table.attributes[name];
    aw.total = totals[name];
    const double n = static_cast<double>(aw.total);
    aw.default_agreement = clip(std::log2(n));
    for (const auto& [value, c] : values) aw.values[value] = clip(std::log2(n / static_cast<double>(c)));
  }
  return table;
}

Json weights_to_json(const WeightTable& w) {
  Json j = {{"w_max", w.w_max}, {"disagreement", w.disagreement}, {"attributes", Json::object()}};
  for (const auto& [name, aw] : w.attributes) {
    j["attributes"][name] = {{"total", aw.total}, {"default", aw.default_agreement}, {"values", aw.values}};
  }
  return j;
}

WeightTable weights_from_json(const Json& j) {
  try {
    WeightTable w;
    w.w_max = j.at("w_max").get<double>();
    w.disagreement = j.at("disagreement").get<double>();
    for (const auto& [name, a] : j.at("attributes").items()) {
      auto& aw = w.attributes[name];
      aw.total = a.at("total").get<std::size_t>();
      aw.default_agreement = a.at("default").get<double>();
      aw.values = a.at("values").get<std::map<std::string, double>>();
    }
    return w;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kSchemaMismatch, std::string("weights: ") + e.what());
  }
}

void save_weights(const WeightTable& w, const std::filesystem::path& path) {
  write_file(path, weights_to_json(w).dump(1) + "\n");
}

WeightTable load_weights(const std::filesystem::path& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kSchemaMismatch, path.string() + ": " + e.what());
  }
  return weights_from_json(j);
}

}  // namespace mdm::match
