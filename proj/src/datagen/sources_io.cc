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

#include "mdm/datagen/sources_io.h"

#include <algorithm>
#include <fstream>
#include <map>

#include "mdm/common/error.h"
#include "mdm/common/text.h"

namespace mdm::datagen {

namespace fs = std::filesystem;

namespace {

struct FieldSlot {
  const char* group;
  const char* field;
};

const std::map<std::string, FieldSlot>& semi_layout() {
  static const std::map<std::string, FieldSlot> kLayout = {
      {"given_name", {"name", "given"}},       {"surname", {"name", "family"}},
      {"gender", {"demographics", "gender"}},  {"dob", {"demographics", "dob"}},
      {"ethnicity", {"demographics", "ethnicity"}},
      {"street", {"address", "street"}},       {"city", {"address", "city"}},
      {"state", {"address", "state"}},         {"zip", {"address", "zip"}},
      {"email", {"contact", "email"}},         {"phone", {"contact", "phone"}},
      {"employer", {"employment", "employer"}},
      {"employment_start", {"employment", "start"}},
      {"ssn", {"identifiers", "ssn"}},         {"last_updated", {"meta", "last_updated"}},
  };
  return kLayout;
}

// Sentence templates after the subject phrase. Order matters for parsing:
// "lives in the state of" must be tried before "lives in".
struct Template {
  const char* attribute;
  const char* prefix;
};
constexpr Template kTemplates[] = {
    {"dob", "was born on "},
    {"state", "lives in the state of "},
    {"city", "lives in "},
    {"phone", "can be reached at "},
    {"employer", "works at "},
};

constexpr const char* kIntro = "This record describes ";
constexpr const char* kSurnameOnly = "someone surnamed ";
constexpr const char* kGivenOnly = "someone named ";
constexpr const char* kUnnamed = "an unnamed person";

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kSchemaMismatch, what);
}

}  // namespace

std::string relation_phrase(const std::string& relation) {
  static const std::map<std::string, std::string> kPhrases = {
      {"knows", "acquaintance"}, {"household", "household member"},
      {"business_partner", "business partner"}};
  if (auto it = kPhrases.find(relation); it != kPhrases.end()) return it->second;
  std::string out = relation;
  std::replace(out.begin(), out.end(), '_', ' ');
  return out;
}

std::string name_phrase(const AttributeMap& a) {
  auto given = a.find("given_name");
  auto family = a.find("surname");
  const bool has_given = given != a.end();
  const bool has_family = family != a.end();
  if (has_given && has_family) return given->second + " " + family->second;
  if (has_family) return kSurnameOnly + family->second;
  if (has_given) return kGivenOnly + given->second;
  return kUnnamed;
}

std::string render_text_record(const SourceRecord& record, const std::vector<TextRelation>& relations) {
  const std::string subject = name_phrase(record.attributes);
  std::string out = record.record_id + "\t" + kIntro + subject + ".";
  for (const auto& t : kTemplates) {
    auto it = record.attributes.find(t.attribute);
    if (it == record.attributes.end()) continue;
    out += " " + subject + " " + t.prefix + it->second + ".";
  }
  for (const auto& r : relations) out += " " + subject + " is a " + r.phrase + " of " + r.other + ".";
  return out;
}

SourceRecord parse_text_record(const std::string& line, std::vector<TextRelation>* relations) {
  const auto tab = line.find('\t');
  if (tab == std::string::npos) malformed("text record without a tab separator");
  SourceRecord record;
  record.record_id = line.substr(0, tab);
  record.source = SourceKind::kUnstructured;
  std::string body = line.substr(tab + 1);
  if (!body.empty() && body.back() == '\r') body.pop_back();
  if (body.empty() || body.back() != '.') malformed("text record " + record.record_id + " is truncated");
  body.pop_back();

  std::vector<std::string> sentences;
  std::size_t start = 0;
  while (true) {
    const auto dot = body.find(". ", start);
    sentences.push_back(body.substr(start, dot == std::string::npos ? std::string::npos : dot - start));
    if (dot == std::string::npos) break;
    start = dot + 2;
  }
  if (sentences.front().rfind(kIntro, 0) != 0) malformed("text record " + record.record_id + " has no intro");
  const std::string subject = sentences.front().substr(std::string(kIntro).size());
  if (subject.rfind(kSurnameOnly, 0) == 0) {
    record.attributes["surname"] = subject.substr(std::string(kSurnameOnly).size());
  } else if (subject.rfind(kGivenOnly, 0) == 0) {
    record.attributes["given_name"] = subject.substr(std::string(kGivenOnly).size());
  } else if (subject != kUnnamed) {
    const auto space = subject.find(' ');
    if (space == std::string::npos) malformed("text record " + record.record_id + " has a bad name");
    record.attributes["given_name"] = subject.substr(0, space);
    record.attributes["surname"] = subject.substr(space + 1);
  }

  for (std::size_t i = 1; i < sentences.size(); ++i) {
    const std::string& s = sentences[i];
    if (s.rfind(subject + " ", 0) != 0) malformed("text record " + record.record_id + ": unexpected subject");
    const std::string rest = s.substr(subject.size() + 1);
    if (rest.rfind("is a ", 0) == 0) {
      const auto of = rest.find(" of ", 5);
      if (of == std::string::npos) malformed("text record " + record.record_id + ": bad relationship sentence");
      if (relations != nullptr) relations->push_back({rest.substr(5, of - 5), rest.substr(of + 4)});
      continue;
    }
    bool matched = false;
    for (const auto& t : kTemplates) {
      if (rest.rfind(t.prefix, 0) == 0) {
        record.attributes[t.attribute] = rest.substr(std::string(t.prefix).size());
        matched = true;
        break;
      }
    }
    if (!matched) malformed("text record " + record.record_id + ": unknown sentence '" + s + "'");
  }
  return record;
}

Json render_semi_record(const SourceRecord& record) {
  Json j = {{"record_id", record.record_id}};
  const auto& layout = semi_layout();
  for (const auto& [name, value] : record.attributes) {
    auto it = layout.find(name);
    if (it == layout.end()) {
      j["other"][name] = value;
    } else {
      j[it->second.group][it->second.field] = value;
    }
  }
  return j;
}

SourceRecord parse_semi_record(const Json& row) {
  SourceRecord record;
  record.source = SourceKind::kSemiStructured;
  try {
    record.record_id = row.at("record_id").get<std::string>();
    for (const auto& [group, fields] : row.items()) {
      if (group == "record_id") continue;
      if (!fields.is_object()) malformed("semi record group '" + group + "' is not an object");
      for (const auto& [field, value] : fields.items()) {
        std::string attribute;
        if (group == "other") {
          attribute = field;
        } else {
          for (const auto& [name, slot] : semi_layout()) {
            if (group == slot.group && field == slot.field) attribute = name;
          }
        }
        if (attribute.empty()) malformed("semi record field '" + group + "." + field + "' is unknown");
        record.attributes[attribute] = value.get<std::string>();
      }
    }
  } catch (const Json::exception& e) {
    malformed(std::string("semi record: ") + e.what());
  }
  return record;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  if (quoted) malformed("unterminated quote in CSV row");
  fields.push_back(std::move(current));
  return fields;
}

void write_sources(const std::vector<SourceRecord>& records,
                   const std::map<std::string, std::vector<TextRelation>>& relations,
                   const std::vector<std::string>& tab_columns, const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + out_dir.string());
  std::ofstream text(out_dir / kTextSourceFile, std::ios::binary | std::ios::trunc);
  std::ofstream semi(out_dir / kSemiSourceFile, std::ios::binary | std::ios::trunc);
  std::ofstream tab(out_dir / kTabularSourceFile, std::ios::binary | std::ios::trunc);
  if (!text || !semi || !tab) throw Error(ErrorCode::kIoError, "cannot write sources in " + out_dir.string());

  tab << "record_id";
  for (const auto& c : tab_columns) tab << ',' << c;
  tab << '\n';
  static const std::vector<TextRelation> kNone;
  for (const auto& record : records) {
    switch (record.source) {
      case SourceKind::kUnstructured: {
        auto it = relations.find(record.record_id);
        text << render_text_record(record, it == relations.end() ? kNone : it->second) << '\n';
        break;
      }
      case SourceKind::kSemiStructured:
        semi << render_semi_record(record).dump() << '\n';
        break;
      case SourceKind::kStructured: {
        tab << csv_escape(record.record_id);
        for (const auto& c : tab_columns) {
          auto it = record.attributes.find(c);
          tab << ',' << (it == record.attributes.end() ? "" : csv_escape(it->second));
        }
        tab << '\n';
        break;
      }
    }
  }
  text.flush();
  semi.flush();
  tab.flush();
  if (!text || !semi || !tab) throw Error(ErrorCode::kIoError, "write failed in " + out_dir.string());
}

std::vector<std::string> tabular_columns(const fs::path& dir) {
  std::ifstream in(dir / kTabularSourceFile, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + (dir / kTabularSourceFile).string());
  std::string line;
  if (!std::getline(in, line)) malformed("tabular source has no header");
  auto header = csv_split(line);
  if (header.empty() || header[0] != "record_id") malformed("tabular header must start with record_id");
  header.erase(header.begin());
  return header;
}

std::map<std::string, std::vector<TextRelation>> load_text_relations(const fs::path& dir) {
  std::ifstream in(dir / kTextSourceFile, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + (dir / kTextSourceFile).string());
  std::map<std::string, std::vector<TextRelation>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (text::trim(line).empty()) continue;
    std::vector<TextRelation> rels;
    auto record = parse_text_record(line, &rels);
    if (!rels.empty()) out[record.record_id] = std::move(rels);
  }
  return out;
}

void emit_sources(const Dataset& ds, const fs::path& out_dir) {
  std::map<EntityId, std::vector<std::pair<EntityId, std::string>>> related;
  for (const auto& r : ds.relationships) {
    related[r.a].emplace_back(r.b, r.relation);
    related[r.b].emplace_back(r.a, r.relation);
  }
  auto canonical_name = [&](EntityId id) {
    const auto& a = ds.entities.at(id).attributes;
    auto g = a.find("given_name");
    auto s = a.find("surname");
    std::string name;
    if (g != a.end()) name = g->second;
    if (s != a.end()) name += (name.empty() ? "" : " ") + s->second;
    return name;
  };

  std::vector<std::string> tab_columns;
  for (const auto& name : source_attributes(SourceKind::kStructured)) {
    if (std::find(ds.config.attribute_schema.begin(), ds.config.attribute_schema.end(), name) !=
        ds.config.attribute_schema.end())
      tab_columns.push_back(name);
  }

  std::map<std::string, std::vector<TextRelation>> relations;
  for (const auto& record : ds.records) {
    if (record.source != SourceKind::kUnstructured) continue;
    const EntityId self = ds.truth.record_entity.at(record.record_id);
    auto rel = related.find(self);
    if (rel == related.end()) continue;
    auto links = rel->second;
    std::sort(links.begin(), links.end());
    for (std::size_t i = 0; i < links.size() && i < 3; ++i) {
      const std::string other = canonical_name(links[i].first);
      if (other.empty()) continue;
      relations[record.record_id].push_back({relation_phrase(links[i].second), other});
    }
  }
  write_sources(ds.records, relations, tab_columns, out_dir);

  std::vector<Json> truth_rows;
  truth_rows.push_back({{"type", "meta"},
                        {"seed", ds.config.seed},
                        {"n_entities", ds.entities.size()},
                        {"n_records", ds.records.size()},
                        {"n_relationships", ds.relationships.size()},
                        {"config", config_to_json(ds.config)}});
  for (const auto& e : ds.entities)
    truth_rows.push_back({{"type", "entity"}, {"entity_id", e.entity_id}, {"attributes", e.attributes}});
  for (const auto& r : ds.records)
    truth_rows.push_back({{"type", "record"},
                          {"record_id", r.record_id},
                          {"entity_id", ds.truth.record_entity.at(r.record_id)},
                          {"source", source_name(r.source)}});
  for (const auto& r : ds.relationships)
    truth_rows.push_back({{"type", "relationship"}, {"a", r.a}, {"b", r.b}, {"relation", r.relation}});
  for (const auto& s : ds.truth.separations) {
    Json row = {{"type", "separation"}, {"a", s.a}, {"b", s.b}, {"distance", nullptr}};
    if (s.distance) row["distance"] = *s.distance;
    truth_rows.push_back(std::move(row));
  }
  write_jsonl(out_dir / kGroundTruthFile, truth_rows);
}

std::vector<SourceRecord> load_sources(const fs::path& dir) {
  std::vector<SourceRecord> records;
  {
    std::ifstream in(dir / kTextSourceFile, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIoError, "cannot open " + (dir / kTextSourceFile).string());
    std::string line;
    while (std::getline(in, line)) {
      if (text::trim(line).empty()) continue;
      records.push_back(parse_text_record(line));
    }
  }
  for_each_jsonl(dir / kSemiSourceFile,
                 [&](std::size_t, const Json& row) { records.push_back(parse_semi_record(row)); });
  {
    std::ifstream in(dir / kTabularSourceFile, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIoError, "cannot open " + (dir / kTabularSourceFile).string());
    std::string line;
    if (!std::getline(in, line)) malformed("tabular source has no header");
    const auto header = csv_split(line);
    if (header.empty() || header[0] != "record_id") malformed("tabular header must start with record_id");
    while (std::getline(in, line)) {
      if (text::trim(line).empty()) continue;
      const auto fields = csv_split(line);
      if (fields.size() != header.size()) malformed("tabular row has " + std::to_string(fields.size()) + " fields");
      SourceRecord record;
      record.source = SourceKind::kStructured;
      record.record_id = fields[0];
      for (std::size_t i = 1; i < fields.size(); ++i) {
        if (!fields[i].empty()) record.attributes[header[i]] = fields[i];
      }
      records.push_back(std::move(record));
    }
  }
  std::sort(records.begin(), records.end(),
            [](const SourceRecord& a, const SourceRecord& b) { return a.record_id < b.record_id; });
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].record_id == records[i - 1].record_id)
      malformed("record id " + records[i].record_id + " appears in more than one source");
  }
  return records;
}

LoadedTruth load_ground_truth(const fs::path& dir) {
  LoadedTruth out;
  try {
    for_each_jsonl(dir / kGroundTruthFile, [&](std::size_t, const Json& row) {
      const auto type = row.at("type").get<std::string>();
      if (type == "meta") {
        out.meta = row;
      } else if (type == "entity") {
        Entity e;
        e.entity_id = row.at("entity_id").get<EntityId>();
        e.attributes = row.at("attributes").get<AttributeMap>();
        out.entities.push_back(std::move(e));
      } else if (type == "record") {
        out.truth.record_entity[row.at("record_id").get<std::string>()] = row.at("entity_id").get<EntityId>();
      } else if (type == "relationship") {
        out.truth.relationships.push_back(
            {row.at("a").get<EntityId>(), row.at("b").get<EntityId>(), row.at("relation").get<std::string>()});
      } else if (type == "separation") {
        SeparationSample s{row.at("a").get<EntityId>(), row.at("b").get<EntityId>(), std::nullopt};
        if (!row.at("distance").is_null()) s.distance = row.at("distance").get<std::uint32_t>();
        out.truth.separations.push_back(s);
      } else {
        malformed("ground truth row of unknown type '" + type + "'");
      }
    });
  } catch (const Json::exception& e) {
    malformed(std::string("ground truth: ") + e.what());
  }
  return out;
}

}  // namespace mdm::datagen
