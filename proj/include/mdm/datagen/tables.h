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

#include <span>
#include <string_view>
#include <vector>

namespace mdm::datagen {

// Small bundled frequency tables approximating US name, city and employer
// distributions. Weights are relative counts.
struct WeightedValue {
  const char* value;
  double weight;
};

struct City {
  const char* name;
  const char* state;
  const char* zip_prefix;  // three digits
  const char* area_code;
  double weight;
};

struct Nickname {
  const char* nickname;
  const char* canonical;
};

std::span<const WeightedValue> surnames();
std::span<const WeightedValue> female_given_names();
std::span<const WeightedValue> male_given_names();
std::span<const WeightedValue> street_names();
std::span<const WeightedValue> employers();
std::span<const City> cities();
std::span<const Nickname> nicknames();

// Street suffixes in canonical form with their postal abbreviation.
struct StreetSuffix {
  const char* full;
  const char* abbreviation;
};
std::span<const StreetSuffix> street_suffixes();

std::span<const char* const> email_domains();

// Nicknames of a canonical given name (empty when none are bundled).
std::vector<std::string_view> nicknames_of(std::string_view canonical);

// Canonical names a nickname can stand for, in table order. A name that is
// not a nickname maps to itself.
std::vector<std::string_view> canonical_names_of(std::string_view given_name);

}  // namespace mdm::datagen
