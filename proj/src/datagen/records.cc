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

#include "mdm/datagen/records.h"

#include "mdm/common/error.h"

namespace mdm::datagen {

const char* source_name(SourceKind kind) {
  switch (kind) {
    case SourceKind::kUnstructured: return "unstructured";
    case SourceKind::kSemiStructured: return "semi_structured";
    case SourceKind::kStructured: return "structured";
  }
  return "structured";
}

SourceKind parse_source(std::string_view name) {
  if (name == "unstructured") return SourceKind::kUnstructured;
  if (name == "semi_structured") return SourceKind::kSemiStructured;
  if (name == "structured") return SourceKind::kStructured;
  throw Error(ErrorCode::kSchemaMismatch, "unknown source '" + std::string(name) + "'");
}

const std::vector<std::string>& source_attributes(SourceKind kind) {
  static const std::vector<std::string> kStructured = {
      "given_name", "surname", "gender", "ethnicity", "dob",      "street",          "city",
      "state",      "zip",     "phone",  "ssn",       "employer", "employment_start", "last_updated"};
  static const std::vector<std::string> kSemi = {
      "given_name", "surname", "gender", "dob",   "street",   "city",
      "state",      "zip",     "email",  "phone", "employer", "last_updated"};
  static const std::vector<std::string> kText = {"given_name", "surname", "dob",     "city",
                                                 "state",      "phone",   "employer"};
  switch (kind) {
    case SourceKind::kUnstructured: return kText;
    case SourceKind::kSemiStructured: return kSemi;
    case SourceKind::kStructured: return kStructured;
  }
  return kStructured;
}

}  // namespace mdm::datagen
