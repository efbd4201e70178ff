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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mdm/datagen/records.h"

namespace mdm::match {

// American Soundex: first letter plus three digits, zero padded. Returns an
// empty string when the input has no letters.
std::string soundex(std::string_view word);

struct StandardValue {
  std::string value;                   // normalized comparison form
  std::string phonetic;                // name attributes only
  std::vector<std::string> canonical;  // given names only, sorted
};

struct StandardizedRecord {
  std::string record_id;
  std::map<std::string, StandardValue> values;

  const StandardValue* find(const std::string& attribute) const;
};

bool is_name_attribute(std::string_view attribute);
bool is_digit_attribute(std::string_view attribute);

StandardValue standardize_value(const std::string& attribute, std::string_view raw);
StandardizedRecord standardize(const datagen::SourceRecord& record);

}  // namespace mdm::match
