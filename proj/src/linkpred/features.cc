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

#include "mdm/linkpred/features.h"

#include <algorithm>
#include <charconv>
#include <optional>

#include "mdm/common/date.h"
#include "mdm/common/error.h"
#include "mdm/common/rng.h"

namespace mdm::linkpred {

namespace {

std::optional<double> scalar_value(const std::string& value) {
  if (auto days = date::parse(value)) return static_cast<double>(*days);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), x);
  if (ec != std::errc() || ptr != value.data() + value.size()) return std::nullopt;
  return x;
}

}  // namespace

const char* encoding_name(Encoding e) {
  switch (e) {
    case Encoding::kCategorical: return "categorical";
    case Encoding::kHashed: return "hashed";
    case Encoding::kScalar: return "scalar";
  }
  return "categorical";
}

Encoding parse_encoding(std::string_view name) {
  if (name == "categorical") return Encoding::kCategorical;
  if (name == "hashed") return Encoding::kHashed;
  if (name == "scalar") return Encoding::kScalar;
  throw Error(ErrorCode::kConfigError, "unknown encoding: " + std::string(name));
}

std::vector<FeatureSpec> FeatureEncoder::default_specs() {
  return {
      {"gender", Encoding::kCategorical, 4},     {"ethnicity", Encoding::kCategorical, 8},
      {"state", Encoding::kCategorical, 16},     {"city", Encoding::kCategorical, 16},
      {"employer", Encoding::kCategorical, 16},  {"given_name", Encoding::kHashed, 8},
      {"surname", Encoding::kHashed, 8},         {"dob", Encoding::kScalar, 1},
      {"employment_start", Encoding::kScalar, 1},
  };
}

FeatureEncoder FeatureEncoder::fit(const graph::PropertyGraph& g, std::vector<FeatureSpec> specs) {
  FeatureEncoder enc;
  for (const auto& s : specs)
    if (s.size == 0 || (s.encoding == Encoding::kScalar && s.size != 1))
      throw Error(ErrorCode::kConfigError, "bad feature size for " + s.attribute);
  enc.specs_ = std::move(specs);
  enc.vocab_.resize(enc.specs_.size());
  enc.range_.assign(enc.specs_.size(), {0.0, 0.0});
  for (std::size_t i = 0; i < enc.specs_.size(); ++i) {
    const auto& spec = enc.specs_[i];
    if (spec.encoding == Encoding::kCategorical) {
      std::map<std::string, std::size_t> counts;
      for (const auto& n : g.nodes())
        if (auto it = n.attributes.find(spec.attribute); it != n.attributes.end()) ++counts[it->second];
      std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
      std::stable_sort(ranked.begin(), ranked.end(),
                       [](const auto& a, const auto& b) { return a.second > b.second; });
      for (std::size_t k = 0; k + 1 < spec.size && k < ranked.size(); ++k) enc.vocab_[i][ranked[k].first] = k;
    } else if (spec.encoding == Encoding::kScalar) {
      bool seen = false;
      for (const auto& n : g.nodes()) {
        auto it = n.attributes.find(spec.attribute);
        if (it == n.attributes.end()) continue;
        auto x = scalar_value(it->second);
        if (!x) continue;
        if (!seen) enc.range_[i] = {*x, *x};
        enc.range_[i].first = std::min(enc.range_[i].first, *x);
        enc.range_[i].second = std::max(enc.range_[i].second, *x);
        seen = true;
      }
    }
  }
  std::size_t max_degree = 1;
  for (const auto& n : g.nodes()) max_degree = std::max(max_degree, g.neighbor_nodes(n.id).size());
  enc.max_degree_ = static_cast<double>(max_degree);
  return enc;
}

std::size_t FeatureEncoder::dim() const {
  std::size_t d = 1;
  for (const auto& s : specs_) d += s.size;
  return d;
}

std::size_t FeatureEncoder::category_column(std::size_t spec, const std::string& value) const {
  auto it = vocab_[spec].find(value);
  return it == vocab_[spec].end() ? specs_[spec].size - 1 : it->second;
}

DenseMatrix FeatureEncoder::encode(const graph::PropertyGraph& g) const {
  DenseMatrix x(g.num_nodes(), dim());
  for (const auto& n : g.nodes()) {
    auto row = x.row(n.id);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < specs_.size(); ++i) {
      const auto& spec = specs_[i];
      auto it = n.attributes.find(spec.attribute);
      if (it != n.attributes.end()) {
        switch (spec.encoding) {
          case Encoding::kCategorical:
            row[offset + category_column(i, it->second)] = 1.0;
            break;
          case Encoding::kHashed:
            row[offset + fnv1a64(it->second) % spec.size] = 1.0;
            break;
          case Encoding::kScalar:
            if (auto v = scalar_value(it->second)) {
              const auto [lo, hi] = range_[i];
              row[offset] = hi > lo ? std::clamp((*v - lo) / (hi - lo), 0.0, 1.0) : 0.0;
            }
            break;
        }
      }
      offset += spec.size;
    }
    row[offset] = std::min(1.0, static_cast<double>(g.neighbor_nodes(n.id).size()) / max_degree_);
  }
  return x;
}

Json FeatureEncoder::to_json() const {
  Json specs = Json::array();
  for (std::size_t i = 0; i < specs_.size(); ++i) {
    Json s = {{"attribute", specs_[i].attribute},
              {"encoding", encoding_name(specs_[i].encoding)},
              {"size", specs_[i].size}};
    if (specs_[i].encoding == Encoding::kCategorical) {
      std::vector<std::string> vocab(vocab_[i].size());
      for (const auto& [v, k] : vocab_[i]) vocab[k] = v;
      s["vocabulary"] = vocab;
    }
    if (specs_[i].encoding == Encoding::kScalar) s["range"] = {range_[i].first, range_[i].second};
    specs.push_back(std::move(s));
  }
  return {{"specs", specs}, {"max_degree", max_degree_}};
}

FeatureEncoder FeatureEncoder::from_json(const Json& j) {
  try {
    FeatureEncoder enc;
    for (const auto& s : j.at("specs")) {
      FeatureSpec spec{s.at("attribute").get<std::string>(),
                       parse_encoding(s.at("encoding").get<std::string>()), s.at("size").get<std::size_t>()};
      std::map<std::string, std::size_t> vocab;
      std::pair<double, double> range{0.0, 0.0};
      if (spec.encoding == Encoding::kCategorical) {
        const auto values = s.at("vocabulary").get<std::vector<std::string>>();
        if (values.size() >= spec.size) throw Error(ErrorCode::kSchemaMismatch, "vocabulary too large");
        for (std::size_t k = 0; k < values.size(); ++k) vocab[values[k]] = k;
      }
      if (spec.encoding == Encoding::kScalar)
        range = {s.at("range").at(0).get<double>(), s.at("range").at(1).get<double>()};
      enc.specs_.push_back(std::move(spec));
      enc.vocab_.push_back(std::move(vocab));
      enc.range_.push_back(range);
    }
    enc.max_degree_ = j.at("max_degree").get<double>();
    return enc;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kSchemaMismatch, std::string("feature encoder: ") + e.what());
  }
}

}  // namespace mdm::linkpred
