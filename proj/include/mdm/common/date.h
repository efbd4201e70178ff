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
#include <optional>
#include <string>
#include <string_view>

namespace mdm::date {

// Days since 1970-01-01 in the proleptic Gregorian calendar.
std::int64_t days_from_civil(int year, unsigned month, unsigned day);

struct Civil {
  int year;
  unsigned month;
  unsigned day;
};
Civil civil_from_days(std::int64_t days);

bool is_valid(int year, unsigned month, unsigned day);

// Strict "YYYY-MM-DD".
std::optional<std::int64_t> parse(std::string_view iso);
std::string format(std::int64_t days);

}  // namespace mdm::date
