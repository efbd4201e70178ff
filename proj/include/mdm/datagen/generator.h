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
#include <string>
#include <vector>

#include "mdm/common/rng.h"
#include "mdm/datagen/config.h"
#include "mdm/datagen/records.h"
#include "mdm/graph/property_graph.h"

namespace mdm::datagen {

// Per-entity record counts from a Zipf law truncated to [1, max_k]:
// P(k) proportional to k^-s.
std::vector<int> sample_duplicate_counts(std::size_t n_entities, double zipf_exponent, int max_k,
                                         std::uint64_t seed);

// Canonical entities; protected attributes follow the configured proportions
// exactly up to rounding (quota assignment, then shuffled).
std::vector<Entity> generate_entities(const GeneratorConfig& config);

enum class Perturbation { kCharEdit, kNickname, kAddressVariant, kFieldDrop };

struct Duplicate {
  EntityId entity_id = 0;
  AttributeMap attributes;
  // Attribute -> perturbation applied to it.
  std::map<std::string, Perturbation> applied;
};

// k copies of the entity; each attribute independently perturbed with
// probability typo_rate by one of four equally likely perturbations. At least
// one attribute of each copy is kept verbatim.
std::vector<Duplicate> derive_duplicates(const Entity& entity, int k, double typo_rate,
                                         std::uint64_t seed);

// One perturbation applied to a single value. Exposed for tests.
std::string char_edit(const std::string& attribute, const std::string& value, Rng& rng);

// ceil(ratio * n) typed undirected edges wired as a ring lattice with
// rewiring; the rewiring probability is searched so the giant component's
// mean shortest path approaches config.target_avg_path_length.
// Throws InfeasibleRatio when ratio > (n-1)/2.
std::vector<Relationship> generate_relationships(std::size_t n_entities,
                                                 const GeneratorConfig& config);

struct Dataset {
  GeneratorConfig config;
  std::vector<Entity> entities;
  std::vector<Duplicate> duplicates;  // in record order
  std::vector<SourceRecord> records;  // routed, ids assigned
  std::vector<Relationship> relationships;
  GroundTruth truth;
};

Dataset generate(const GeneratorConfig& config);

// Entity-level graph: one Person node per canonical entity (node id = entity
// id), one edge per stated relationship.
graph::PropertyGraph build_truth_graph(const std::vector<Entity>& entities,
                                       const std::vector<Relationship>& relationships);

}  // namespace mdm::datagen
