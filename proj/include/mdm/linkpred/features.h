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

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mdm/common/jsonl.h"
#include "mdm/graph/property_graph.h"
#include "mdm/linkpred/dense.h"

namespace mdm::linkpred {

enum class Encoding { kCategorical, kHashed, kScalar };

const char* encoding_name(Encoding e);
Encoding parse_encoding(std::string_view name);

// kCategorical: `size` columns, the most frequent size-1 values get their own
// column and everything else (including values unseen at fit time) shares the
// last one. kHashed: `size` hash buckets. kScalar: one min-max scaled column;
// dates scale as day numbers. Missing attributes encode as zeros.
struct FeatureSpec {
  std::string attribute;
  Encoding encoding = Encoding::kCategorical;
  std::size_t size = 1;
  bool operator==(const FeatureSpec&) const = default;
};

class FeatureEncoder {
 public:
  static std::vector<FeatureSpec> default_specs();

  // Vocabularies and scalar ranges come from `g` (the training graph).
  static FeatureEncoder fit(const graph::PropertyGraph& g,
                            std::vector<FeatureSpec> specs = default_specs());

  // Attribute columns in spec order, then one degree column scaled by the
  // largest degree seen at fit time (clamped to 1).
  DenseMatrix encode(const graph::PropertyGraph& g) const;
  std::size_t dim() const;

  const std::vector<FeatureSpec>& specs() const { return specs_; }
  // Column for a categorical value; the overflow column when not in the vocabulary.
  std::size_t category_column(std::size_t spec, const std::string& value) const;

  Json to_json() const;
  static FeatureEncoder from_json(const Json& j);
  bool operator==(const FeatureEncoder&) const = default;

 private:
  std::vector<FeatureSpec> specs_;
  std::vector<std::map<std::string, std::size_t>> vocab_;
  std::vector<std::pair<double, double>> range_;
  double max_degree_ = 1.0;
};

}  // namespace mdm::linkpred
