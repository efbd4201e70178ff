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
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "mdm/common/jsonl.h"
#include "mdm/common/rng.h"
#include "mdm/graph/property_graph.h"

namespace mdm::anon {

enum class AttributeClass { kName, kAddress, kPhone, kId, kDate };
const char* class_name(AttributeClass c);
AttributeClass parse_class(const std::string& name);

struct AnonymizerSchema {
  std::map<std::string, AttributeClass> classes;
  std::set<std::string> sensitive;  // must all be classed

  static AnonymizerSchema defaults();
  void validate() const;  // UnclassedSensitiveAttribute
  const AttributeClass* class_of(const std::string& attribute) const;
};

struct ShiftMap {
  std::map<AttributeClass, std::map<std::string, std::string>> values;
  std::map<std::string, int> date_offsets;  // entity key -> days
  // Per-entity exceptions to the offset: a date one digit away from another
  // date of the entity keeps that one-digit relation after shifting.
  std::map<std::string, std::map<std::string, std::string>> date_overrides;
};

Json shiftmap_to_json(const ShiftMap& m);
ShiftMap shiftmap_from_json(const Json& j);

// Encrypted at rest with a key derived from the passphrase (Argon2id +
// XSalsa20-Poly1305).
void save_shiftmap(const ShiftMap& m, const std::filesystem::path& path, const std::string& passphrase);
ShiftMap load_shiftmap(const std::filesystem::path& path, const std::string& passphrase);

inline constexpr int kMaxDateOffset = 3650;

// Builds a ShiftMap from every value it is shown, then rewrites attribute
// maps. Pseudonyms are injective per class and never contain an original
// classed value as a substring. A value one edit away from a more frequent
// value of the same class gets a pseudonym one edit away from that value's
// pseudonym. Dates move by one offset per entity.
class Anonymizer {
 public:
  Anonymizer(AnonymizerSchema schema, std::uint64_t seed);

  void observe(const std::string& entity, const graph::AttributeMap& attributes);
  void observe_value(AttributeClass c, const std::string& value);
  // Marks a string as an original that pseudonyms must avoid without mapping it.
  void forbid(const std::string& value);

  void assign();

  graph::AttributeMap apply(const std::string& entity, const graph::AttributeMap& attributes) const;
  const std::string& pseudonym(AttributeClass c, const std::string& original) const;
  std::string shift_date(const std::string& entity, const std::string& value) const;

  const ShiftMap& shift_map() const { return map_; }
  const AnonymizerSchema& schema() const { return schema_; }

  // Originals seen in classed attributes (all classes).
  const std::unordered_set<std::string>& originals() const { return originals_; }
  bool contains_original(const std::string& s) const;

 private:
  std::string fresh(AttributeClass c, const std::string& original, bool relaxed, Rng& rng) const;
  bool acceptable(AttributeClass c, const std::string& candidate) const;

  AnonymizerSchema schema_;
  std::uint64_t seed_;
  std::map<AttributeClass, std::map<std::string, std::size_t>> counts_;
  std::map<std::string, std::map<std::string, std::size_t>> entity_dates_;
  std::unordered_set<std::string> originals_;
  std::size_t max_original_length_ = 0;
  std::map<AttributeClass, std::unordered_set<std::string>> used_;
  ShiftMap map_;
  bool assigned_ = false;
};

// Node attributes rewritten; ids, kinds, keys, edges and unclassed
// attributes untouched. Each node is its own date entity.
struct AnonymizedGraph {
  graph::PropertyGraph graph;
  ShiftMap map;
};
AnonymizedGraph anonymize_graph(const graph::PropertyGraph& g, std::uint64_t seed,
                                const AnonymizerSchema& schema = AnonymizerSchema::defaults());

// Every string in a graph: keys, relation names, attribute and property values.
std::vector<std::string> graph_strings(const graph::PropertyGraph& g);

// Rewrites the three source feeds of in_dir into out_dir. record_entity
// names the date entity of each record (normally its resolved entity) so
// duplicates of one entity keep consistent dates. Ground truth is copied
// without the canonical entity rows.
ShiftMap anonymize_sources(const std::filesystem::path& in_dir, const std::filesystem::path& out_dir,
                           const std::map<std::string, std::string>& record_entity, std::uint64_t seed,
                           const AnonymizerSchema& schema = AnonymizerSchema::defaults());

}  // namespace mdm::anon
