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

#include "mdm/datagen/generator.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_set>

#include "mdm/common/date.h"
#include "mdm/common/error.h"
#include "mdm/common/text.h"
#include "mdm/datagen/tables.h"
#include "mdm/graph/distances.h"

namespace mdm::datagen {

namespace {

// Stream labels for Rng::fork; changing one changes every fixture.
enum Stream : std::uint64_t {
  kEntityStream = 1,
  kWiringStream = 2,
  kRingStream = 3,
  kRewireStream = 4,
  kRelationStream = 5,
  kCountStream = 6,
  kSeparationStream = 7,
  kTuneSampleStream = 8,
  kQuotaStream = 100,
  kDuplicateStream = 1000,
};

template <typename T>
std::size_t pick_weighted(Rng& rng, std::span<const T> table) {
  std::vector<double> weights;
  weights.reserve(table.size());
  for (const auto& row : table) weights.push_back(row.weight);
  return rng.weighted(weights);
}

std::string format_digits(std::int64_t value, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%0*lld", width, static_cast<long long>(value));
  return buf;
}

// Largest-remainder apportionment of n items over the target shares.
std::vector<std::string> quota_values(const ProtectedAttribute& p, std::size_t n, Rng& rng) {
  std::vector<std::size_t> counts(p.categories.size());
  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < p.categories.size(); ++i) {
    const double exact = p.categories[i].second * static_cast<double>(n);
    counts[i] = static_cast<std::size_t>(std::floor(exact));
    assigned += counts[i];
    remainders.emplace_back(exact - std::floor(exact), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t i = 0; assigned < n; ++i, ++assigned) ++counts[remainders[i % remainders.size()].second];
  std::vector<std::string> values;
  values.reserve(n);
  for (std::size_t i = 0; i < counts.size(); ++i)
    values.insert(values.end(), counts[i], p.categories[i].first);
  rng.shuffle(values);
  return values;
}

bool is_date_attribute(const std::string& a) { return a == "dob" || a == "employment_start"; }
bool is_digit_attribute(const std::string& a) {
  return a == "phone" || a == "ssn" || a == "zip" || a == "last_updated";
}

std::size_t lattice_edge_count(std::size_t n, double ratio) {
  return static_cast<std::size_t>(std::ceil(ratio * static_cast<double>(n) - 1e-9));
}

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Ring lattice over a random node order: offsets 1..K for every position and
// offset K+1 for the first (m mod n) positions.
EdgeList ring_lattice(std::size_t n, std::size_t m, const std::vector<std::uint32_t>& order,
                      Rng& fill_rng) {
  EdgeList edges;
  std::unordered_set<std::uint64_t> present;
  auto add = [&](std::uint32_t a, std::uint32_t b) {
    if (a == b || edges.size() >= m) return;
    if (present.insert(pair_key(a, b)).second) edges.emplace_back(a, b);
  };
  const std::size_t k = m / n;
  const std::size_t extra = m % n;
  for (std::size_t d = 1; d <= k; ++d)
    for (std::size_t i = 0; i < n; ++i) add(order[i], order[(i + d) % n]);
  for (std::size_t i = 0; i < extra; ++i) add(order[i], order[(i + k + 1) % n]);
  while (edges.size() < m) {
    add(static_cast<std::uint32_t>(fill_rng.below(n)), static_cast<std::uint32_t>(fill_rng.below(n)));
  }
  return edges;
}

EdgeList rewire(const EdgeList& lattice, std::size_t n, double p, Rng rng) {
  EdgeList edges = lattice;
  std::unordered_set<std::uint64_t> present;
  for (auto [a, b] : edges) present.insert(pair_key(a, b));
  for (auto& e : edges) {
    if (!rng.bernoulli(p)) continue;
    for (int attempt = 0; attempt < 20; ++attempt) {
      const auto w = static_cast<std::uint32_t>(rng.below(n));
      if (w == e.first || present.count(pair_key(e.first, w))) continue;
      present.erase(pair_key(e.first, e.second));
      present.insert(pair_key(e.first, w));
      e.second = w;
      break;
    }
  }
  return edges;
}

graph::PropertyGraph bare_graph(std::size_t n, const EdgeList& edges) {
  std::vector<graph::Node> nodes(n);
  for (std::size_t i = 0; i < n; ++i) nodes[i].id = static_cast<graph::NodeId>(i);
  std::vector<graph::Edge> out;
  out.reserve(edges.size());
  for (auto [a, b] : edges) out.push_back({a, b, "", {}});
  return graph::PropertyGraph::build(std::move(nodes), std::move(out));
}

}  // namespace

std::vector<int> sample_duplicate_counts(std::size_t n_entities, double zipf_exponent, int max_k,
                                         std::uint64_t seed) {
  if (max_k < 1) throw Error(ErrorCode::kInvalidArgument, "max_k must be >= 1");
  std::vector<double> pmf(static_cast<std::size_t>(max_k));
  for (int k = 1; k <= max_k; ++k) pmf[k - 1] = std::pow(static_cast<double>(k), -zipf_exponent);
  Rng rng(seed);
  std::vector<int> counts(n_entities);
  for (auto& c : counts) c = static_cast<int>(rng.weighted(pmf)) + 1;
  return counts;
}

std::vector<Entity> generate_entities(const GeneratorConfig& config) {
  config.validate();
  const std::size_t n = config.n_entities;
  Rng base(config.seed);

  std::map<std::string, std::vector<std::string>> quotas;
  for (std::size_t i = 0; i < config.protected_attributes.size(); ++i) {
    Rng quota_rng = base.fork(kQuotaStream + i);
    const auto& p = config.protected_attributes[i];
    quotas[p.name] = quota_values(p, n, quota_rng);
  }

  const std::int64_t dob_lo = date::days_from_civil(1940, 1, 1);
  const std::int64_t dob_hi = date::days_from_civil(2004, 12, 31);
  const std::int64_t work_hi = date::days_from_civil(2024, 6, 30);
  const std::int64_t update_lo = date::days_from_civil(2015, 1, 1);
  const std::int64_t update_hi = date::days_from_civil(2024, 12, 31);
  const auto suffixes = street_suffixes();
  const auto domains = email_domains();

  Rng rng = base.fork(kEntityStream);
  std::vector<Entity> entities(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Every known attribute is drawn, in a fixed order, whether or not the
    // schema keeps it, so that schema changes do not shift the RNG stream.
    AttributeMap a;
    a["gender"] = rng.bernoulli(0.5) ? "F" : "M";
    a["ethnicity"] = "OTHER";
    for (const auto& [name, values] : quotas) a[name] = values[i];

    const bool female = a["gender"] == "F" || (a["gender"] != "M" && rng.bernoulli(0.5));
    const auto given_table = female ? female_given_names() : male_given_names();
    a["given_name"] = given_table[pick_weighted(rng, given_table)].value;
    a["surname"] = surnames()[pick_weighted(rng, surnames())].value;

    const std::int64_t dob = rng.range(dob_lo, dob_hi);
    a["dob"] = date::format(dob);
    const std::int64_t work_lo = dob + 18 * 365;
    a["employment_start"] = date::format(rng.range(work_lo, std::max(work_lo, work_hi)));
    const std::int64_t updated = rng.range(update_lo, update_hi);
    a["last_updated"] = date::format(updated) + "T" + format_digits(rng.range(0, 23), 2) + ":" +
                        format_digits(rng.range(0, 59), 2) + ":" + format_digits(rng.range(0, 59), 2) + "Z";

    const auto& city = cities()[pick_weighted(rng, cities())];
    a["city"] = city.name;
    a["state"] = city.state;
    a["zip"] = std::string(city.zip_prefix) + format_digits(rng.range(0, 99), 2);
    a["street"] = std::to_string(rng.range(1, 9999)) + " " +
                  street_names()[pick_weighted(rng, street_names())].value + " " +
                  suffixes[rng.below(suffixes.size())].full;
    a["phone"] = std::string("(") + city.area_code + ") " + format_digits(rng.range(200, 999), 3) +
                 "-" + format_digits(rng.range(0, 9999), 4);
    a["email"] = text::to_lower(a["given_name"]) + "." + text::to_lower(a["surname"]) +
                 std::to_string(rng.range(1, 99)) + "@" + domains[rng.below(domains.size())];
    std::int64_t area = rng.range(1, 898);
    if (area >= 666) ++area;
    a["ssn"] = format_digits(area, 3) + "-" + format_digits(rng.range(1, 99), 2) + "-" +
               format_digits(rng.range(1, 9999), 4);
    a["employer"] = employers()[pick_weighted(rng, employers())].value;

    Entity& e = entities[i];
    e.entity_id = static_cast<EntityId>(i);
    for (const auto& name : config.attribute_schema) e.attributes[name] = a[name];
  }
  return entities;
}

std::string char_edit(const std::string& attribute, const std::string& value, Rng& rng) {
  if (value.empty()) return std::string(1, static_cast<char>('A' + rng.below(26)));

  if (is_date_attribute(attribute)) {
    if (auto days = date::parse(value)) {
      static constexpr std::size_t kDigitPos[] = {0, 1, 2, 3, 5, 6, 8, 9};
      for (int attempt = 0; attempt < 64; ++attempt) {
        std::string candidate = value;
        const std::size_t pos = kDigitPos[rng.below(8)];
        const char old = candidate[pos];
        char digit = static_cast<char>('0' + rng.below(9));
        if (digit >= old) ++digit;
        candidate[pos] = digit;
        if (date::parse(candidate)) return candidate;
      }
      return date::format(*days + 1);
    }
  }

  std::vector<std::size_t> digits;
  std::vector<std::size_t> letters;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const auto c = static_cast<unsigned char>(value[i]);
    if (std::isdigit(c)) digits.push_back(i);
    if (std::isalpha(c)) letters.push_back(i);
  }

  if (is_digit_attribute(attribute) && !digits.empty()) {
    std::string out = value;
    const std::size_t pos = digits[rng.below(digits.size())];
    char digit = static_cast<char>('0' + rng.below(9));
    if (digit >= out[pos]) ++digit;
    out[pos] = digit;
    return out;
  }

  if (letters.empty()) {
    std::string out = value;
    const std::size_t pos = digits.empty() ? 0 : digits[rng.below(digits.size())];
    out[pos] = out[pos] == '9' ? '0' : static_cast<char>(out[pos] + 1);
    return out;
  }

  const bool lower = std::islower(static_cast<unsigned char>(value[letters.front()])) != 0;
  const char base = lower ? 'a' : 'A';
  std::string out = value;
  const std::size_t pos = letters[rng.below(letters.size())];
  const auto op = letters.size() > 1 ? rng.below(3) : 0;
  if (op == 0) {
    char c = static_cast<char>(base + rng.below(25));
    if (c >= out[pos]) ++c;
    out[pos] = c;
  } else if (op == 1) {
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<char>(base + rng.below(26)));
  } else {
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  return out;
}

std::vector<Duplicate> derive_duplicates(const Entity& entity, int k, double typo_rate,
                                         std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Duplicate> out;
  out.reserve(static_cast<std::size_t>(std::max(k, 0)));
  for (int copy = 0; copy < k; ++copy) {
    Duplicate d;
    d.entity_id = entity.entity_id;
    d.attributes = entity.attributes;
    for (const auto& [name, value] : entity.attributes) {
      if (!rng.bernoulli(typo_rate)) continue;
      auto kind = static_cast<Perturbation>(rng.below(4));
      if (kind == Perturbation::kFieldDrop) {
        d.attributes.erase(name);
      } else if (kind == Perturbation::kNickname && name == "given_name" &&
                 !nicknames_of(value).empty()) {
        const auto options = nicknames_of(value);
        d.attributes[name] = std::string(options[rng.below(options.size())]);
      } else if (kind == Perturbation::kAddressVariant && name == "street") {
        std::string variant;
        for (const auto& s : street_suffixes()) {
          const std::string full = std::string(" ") + s.full;
          if (value.size() > full.size() && value.ends_with(full)) {
            variant = value.substr(0, value.size() - full.size()) + " " + s.abbreviation;
            break;
          }
        }
        if (variant.empty()) {
          kind = Perturbation::kCharEdit;
          variant = char_edit(name, value, rng);
        }
        d.attributes[name] = variant;
      } else {
        kind = Perturbation::kCharEdit;
        d.attributes[name] = char_edit(name, value, rng);
      }
      d.applied[name] = kind;
    }
    if (!entity.attributes.empty() && d.applied.size() == entity.attributes.size()) {
      auto it = d.applied.begin();
      std::advance(it, static_cast<std::ptrdiff_t>(rng.below(d.applied.size())));
      d.attributes[it->first] = entity.attributes.at(it->first);
      d.applied.erase(it);
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Relationship> generate_relationships(std::size_t n, const GeneratorConfig& config) {
  const double ratio = config.edge_to_node_ratio;
  if (n < 2 || ratio > (static_cast<double>(n) - 1.0) / 2.0) {
    throw Error(ErrorCode::kInfeasibleRatio, "edge ratio " + std::to_string(ratio) +
                                                 " is infeasible for " + std::to_string(n) + " nodes");
  }
  const std::size_t m = lattice_edge_count(n, ratio);
  const Rng base = Rng(config.seed).fork(kWiringStream);

  std::vector<std::uint32_t> order(n);
  for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
  Rng ring_rng = base.fork(kRingStream);
  ring_rng.shuffle(order);
  const EdgeList lattice = ring_lattice(n, m, order, ring_rng);

  const Rng rewire_rng = base.fork(kRewireStream);
  const std::uint64_t sample_seed = base.fork(kTuneSampleStream).next();
  const std::size_t samples = 48;
  auto path_length = [&](double p) {
    return graph::sampled_mean_path_length(bare_graph(n, rewire(lattice, n, p, rewire_rng)), samples,
                                           sample_seed);
  };

  // The mean path length falls (noisily) as p grows; bisect on p and keep
  // the best evaluated point.
  const double target = config.target_avg_path_length;
  double best_p = 0.0;
  double best_gap = std::abs(path_length(0.0) - target);
  double lo = 0.0, hi = 1.0;
  const double at_hi = path_length(hi);
  if (std::abs(at_hi - target) < best_gap) {
    best_gap = std::abs(at_hi - target);
    best_p = hi;
  }
  for (int iter = 0; iter < 16 && best_gap > 0.05; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double length = path_length(mid);
    if (std::abs(length - target) < best_gap) {
      best_gap = std::abs(length - target);
      best_p = mid;
    }
    if (length > target) lo = mid;
    else hi = mid;
  }

  EdgeList edges = rewire(lattice, n, best_p, rewire_rng);
  for (auto& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());

  std::vector<double> weights;
  for (const auto& [_, w] : config.relation_type_weights) weights.push_back(w);
  Rng relation_rng = base.fork(kRelationStream);
  std::vector<Relationship> out;
  out.reserve(edges.size());
  for (auto [a, b] : edges) {
    out.push_back({a, b, config.relation_type_weights[relation_rng.weighted(weights)].first});
  }
  return out;
}

graph::PropertyGraph build_truth_graph(const std::vector<Entity>& entities,
                                       const std::vector<Relationship>& relationships) {
  std::vector<graph::Node> nodes;
  nodes.reserve(entities.size());
  for (const auto& e : entities) {
    graph::Node node;
    node.id = e.entity_id;
    node.key = "E" + std::to_string(e.entity_id);
    node.attributes = e.attributes;
    nodes.push_back(std::move(node));
  }
  std::vector<graph::Edge> edges;
  edges.reserve(relationships.size());
  for (const auto& r : relationships) edges.push_back({r.a, r.b, r.relation, {}});
  return graph::PropertyGraph::build(std::move(nodes), std::move(edges));
}

Dataset generate(const GeneratorConfig& config) {
  config.validate();
  Dataset ds;
  ds.config = config;
  ds.entities = generate_entities(config);
  const Rng base(config.seed);
  const auto counts = sample_duplicate_counts(config.n_entities, config.zipf_exponent,
                                              config.max_records_per_entity,
                                              base.fork(kCountStream).next());

  static constexpr SourceKind kRoundRobin[] = {SourceKind::kStructured, SourceKind::kSemiStructured,
                                               SourceKind::kUnstructured};
  std::size_t counter = 0;
  for (const auto& entity : ds.entities) {
    const auto copies = derive_duplicates(entity, counts[entity.entity_id], config.typo_rate,
                                          base.fork(kDuplicateStream + entity.entity_id).next());
    for (const auto& dup : copies) {
      SourceRecord record;
      char id[16];
      std::snprintf(id, sizeof(id), "R%06zu", counter + 1);
      record.record_id = id;
      record.source = kRoundRobin[counter % 3];
      for (const auto& name : source_attributes(record.source)) {
        if (auto it = dup.attributes.find(name); it != dup.attributes.end()) {
          record.attributes.emplace(name, it->second);
        }
      }
      ds.truth.record_entity[record.record_id] = entity.entity_id;
      ds.records.push_back(std::move(record));
      ds.duplicates.push_back(dup);
      ++counter;
    }
  }

  if (config.n_entities >= 2) {
    ds.relationships = generate_relationships(config.n_entities, config);
  }
  ds.truth.relationships = ds.relationships;

  if (config.n_entities >= 2 && config.separation_samples > 0) {
    const auto truth_graph = build_truth_graph(ds.entities, ds.relationships);
    Rng rng = base.fork(kSeparationStream);
    const auto unbounded = static_cast<std::uint32_t>(config.n_entities);
    for (std::size_t i = 0; i < config.separation_samples; ++i) {
      const auto a = static_cast<EntityId>(rng.below(config.n_entities));
      auto b = static_cast<EntityId>(rng.below(config.n_entities - 1));
      if (b >= a) ++b;
      SeparationSample s{a, b, std::nullopt};
      s.distance = graph::bfs_distances(truth_graph, a, unbounded).at(b);
      ds.truth.separations.push_back(s);
    }
  }
  return ds;
}

}  // namespace mdm::datagen
