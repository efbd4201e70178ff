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
#include "mdm/datagen/generator.h"
#include "mdm/datagen/records.h"

namespace mdm::datagen {

inline constexpr const char* kTextSourceFile = "source_text.txt";
inline constexpr const char* kSemiSourceFile = "source_semi.jsonl";
inline constexpr const char* kTabularSourceFile = "source_tab.csv";
inline constexpr const char* kGroundTruthFile = "ground_truth.jsonl";

struct TextRelation {
  std::string phrase;  // "colleague", "household member", ...
  std::string other;   // name of the related entity
};

// Writes the three source feeds and the ground-truth file into out_dir.
void emit_sources(const Dataset& dataset, const std::filesystem::path& out_dir);

// Writes records (in the given order) to the three feeds. relations adds
// relationship sentences to text records; tab_columns is the CSV header after
// record_id.
void write_sources(const std::vector<SourceRecord>& records,
                   const std::map<std::string, std::vector<TextRelation>>& relations,
                   const std::vector<std::string>& tab_columns, const std::filesystem::path& out_dir);

// CSV header of a directory's tabular feed, without the record_id column.
std::vector<std::string> tabular_columns(const std::filesystem::path& dir);

// Relationship sentences of every text record in a directory.
std::map<std::string, std::vector<TextRelation>> load_text_relations(const std::filesystem::path& dir);

// All records from the three feeds in a directory, ordered by record id.
std::vector<SourceRecord> load_sources(const std::filesystem::path& dir);

struct LoadedTruth {
  Json meta;
  std::vector<Entity> entities;
  GroundTruth truth;
};
LoadedTruth load_ground_truth(const std::filesystem::path& dir);

// The unstructured feed: "<record_id>\t<sentences>". Relationship sentences
// ("X is a colleague of Y.") name the related entity's canonical name and
// are ignored when parsing.
std::string render_text_record(const SourceRecord& record, const std::vector<TextRelation>& relations = {});
SourceRecord parse_text_record(const std::string& line, std::vector<TextRelation>* relations = nullptr);

// Human phrase for a relation type: knows -> acquaintance, business_partner
// -> business partner.
std::string relation_phrase(const std::string& relation);

// Subject phrase used for a record in the text feed.
std::string name_phrase(const AttributeMap& attributes);

Json render_semi_record(const SourceRecord& record);
SourceRecord parse_semi_record(const Json& row);

// Minimal RFC 4180 field handling for the tabular feed.
std::string csv_escape(const std::string& field);
std::vector<std::string> csv_split(const std::string& line);

}  // namespace mdm::datagen
