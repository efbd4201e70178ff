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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mdm/graph/property_graph.h"

namespace mdm::datagen {

using graph::AttributeMap;
using EntityId = std::uint32_t;

enum class SourceKind { kUnstructured, kSemiStructured, kStructured };

const char* source_name(SourceKind kind);
SourceKind parse_source(std::string_view name);

struct SourceRecord {
  std::string record_id;
  SourceKind source = SourceKind::kStructured;
  AttributeMap attributes;

  bool operator==(const SourceRecord&) const = default;
};

struct Entity {
  EntityId entity_id = 0;
  AttributeMap attributes;
};

struct Relationship {
  EntityId a = 0;
  EntityId b = 0;
  std::string relation;

  bool operator==(const Relationship&) const = default;
};

struct SeparationSample {
  EntityId a = 0;
  EntityId b = 0;
  // Hop distance in the relationship graph; nullopt when unreachable.
  std::optional<std::uint32_t> distance;
};

struct GroundTruth {
  std::map<std::string, EntityId> record_entity;
  std::vector<Relationship> relationships;
  std::vector<SeparationSample> separations;
};

// Which attributes each source feed carries.
const std::vector<std::string>& source_attributes(SourceKind kind);

}  // namespace mdm::datagen
