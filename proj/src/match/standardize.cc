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

#include "mdm/match/standardize.h"

#include <algorithm>
#include <cctype>

#include "mdm/common/text.h"
#include "mdm/datagen/tables.h"

namespace mdm::match {

namespace {

char soundex_digit(char c) {
  switch (c) {
    case 'B': case 'F': case 'P': case 'V':
      return '1';
    case 'C': case 'G': case 'J': case 'K': case 'Q': case 'S': case 'X': case 'Z':
      return '2';
    case 'D': case 'T':
      return '3';
    case 'L':
      return '4';
    case 'M': case 'N':
      return '5';
    case 'R':
      return '6';
    case 'H': case 'W':
      return 'h';
    default:
      return '0';  // vowels and Y
  }
}

std::string abbreviate_street(const std::vector<std::string>& tokens) {
  std::vector<std::string> out = tokens;
  if (!out.empty()) {
    for (const auto& s : datagen::street_suffixes()) {
      if (out.back() == s.full) {
        out.back() = s.abbreviation;
        break;
      }
    }
  }
  return text::join(out, " ");
}

}  // namespace

std::string soundex(std::string_view word) {
  std::string letters;
  for (char c : word) {
    if (std::isalpha(static_cast<unsigned char>(c)))
      letters.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  if (letters.empty()) return {};
  std::string code(1, letters[0]);
  char last = soundex_digit(letters[0]);
  for (std::size_t i = 1; i < letters.size() && code.size() < 4; ++i) {
    const char d = soundex_digit(letters[i]);
    if (d == 'h') continue;  // H and W do not separate equal codes
    if (d != '0' && d != last) code.push_back(d);
    last = d;
  }
  code.resize(4, '0');
  return code;
}

const StandardValue* StandardizedRecord::find(const std::string& attribute) const {
  auto it = values.find(attribute);
  return it == values.end() ? nullptr : &it->second;
}

bool is_name_attribute(std::string_view a) { return a == "given_name" || a == "surname"; }

bool is_digit_attribute(std::string_view a) {
  return a == "phone" || a == "ssn" || a == "zip" || a == "dob" || a == "employment_start" ||
         a == "last_updated";
}

StandardValue standardize_value(const std::string& attribute, std::string_view raw) {
  StandardValue out;
  if (is_digit_attribute(attribute)) {
    out.value = text::digits_only(raw);
  } else if (attribute == "email") {
    for (char c : text::to_upper(raw)) {
      if (!std::isspace(static_cast<unsigned char>(c))) out.value.push_back(c);
    }
  } else if (attribute == "street") {
    out.value = abbreviate_street(text::normalize_tokens(raw));
  } else {
    out.value = text::join(text::normalize_tokens(raw), " ");
  }
  if (is_name_attribute(attribute)) out.phonetic = soundex(out.value);
  if (attribute == "given_name" && !out.value.empty()) {
    for (auto c : datagen::canonical_names_of(out.value)) out.canonical.emplace_back(c);
    std::sort(out.canonical.begin(), out.canonical.end());
    out.canonical.erase(std::unique(out.canonical.begin(), out.canonical.end()), out.canonical.end());
  }
  return out;
}

StandardizedRecord standardize(const datagen::SourceRecord& record) {
  StandardizedRecord out;
  out.record_id = record.record_id;
  for (const auto& [name, raw] : record.attributes) {
    auto v = standardize_value(name, raw);
    if (!v.value.empty()) out.values.emplace(name, std::move(v));
  }
  return out;
}

}  // namespace mdm::match
