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
#include <string>
#include <string_view>
#include <vector>

namespace mdm::text {

std::string to_upper(std::string_view s);
std::string to_lower(std::string_view s);
std::string trim(std::string_view s);

// Uppercases, deletes every character that is neither alphanumeric nor
// whitespace, and splits on whitespace. "  o'Brien " -> {"OBRIEN"}.
std::vector<std::string> normalize_tokens(std::string_view s);

// Lowercased alphanumeric runs with their byte offsets in the source string.
struct TokenSpan {
  std::string token;
  std::size_t begin = 0;
  std::size_t end = 0;
};
std::vector<TokenSpan> tokenize_spans(std::string_view s);

std::string digits_only(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::vector<std::string> split(std::string_view s, char sep);

// Levenshtein distance (unit cost insert/delete/substitute).
std::size_t edit_distance(std::string_view a, std::string_view b);

// 1 - dist / max_len; 1.0 when both strings are empty.
double edit_similarity(std::string_view a, std::string_view b);

}  // namespace mdm::text
