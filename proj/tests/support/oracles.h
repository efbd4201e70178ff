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

// Test-only reference implementations. Nothing here may call into the code
// paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <string>
#include <limits>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "mdm/common/error.h"

namespace oracle {

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

// All-pairs hop distances by Floyd-Warshall on an adjacency list.
inline std::vector<std::vector<std::uint32_t>> floyd_warshall(
    std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [a, b] : edges) {
    d[a][b] = 1;
    d[b][a] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Component sizes per node via union-find.
inline std::vector<std::size_t> component_size_of(
    std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  UnionFind uf(n);
  for (auto [a, b] : edges) uf.unite(a, b);
  std::vector<std::size_t> size(n, 0);
  for (std::size_t i = 0; i < n; ++i) ++size[uf.find(i)];
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = size[uf.find(i)];
  return out;
}

// Simple random graph (no self loops or duplicate pairs) from std::mt19937.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> random_edges(std::size_t n,
                                                                        double p,
                                                                        std::mt19937& gen) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (coin(gen) < p) edges.emplace_back(i, j);
  return edges;
}

// P(positive outranks negative), ties counted half, by counting all pairs.
inline double brute_force_auc(const std::vector<double>& scores, const std::vector<int>& labels) {
  double wins = 0.0;
  double pairs = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (labels[i] != 1) continue;
    for (std::size_t j = 0; j < scores.size(); ++j) {
      if (labels[j] != 0) continue;
      pairs += 1.0;
      if (scores[i] > scores[j]) wins += 1.0;
      else if (scores[i] == scores[j]) wins += 0.5;
    }
  }
  return wins / pairs;
}

// Plain dynamic-programming Levenshtein distance with a full table.
inline std::size_t levenshtein(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::size_t>> t(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) t[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) t[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      t[i][j] = std::min({t[i - 1][j] + 1, t[i][j - 1] + 1,
                          t[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
  return t[a.size()][b.size()];
}

// Pairwise precision, recall and F1 by enumerating every record pair.
struct PairCounts {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};
inline PairCounts brute_force_pairwise(const std::vector<std::size_t>& predicted,
                                       const std::vector<std::size_t>& truth) {
  double tp = 0.0, pred = 0.0, real = 0.0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    for (std::size_t j = i + 1; j < predicted.size(); ++j) {
      const bool p = predicted[i] == predicted[j];
      const bool t = truth[i] == truth[j];
      pred += p;
      real += t;
      tp += p && t;
    }
  }
  PairCounts c;
  c.precision = pred == 0.0 ? 1.0 : tp / pred;
  c.recall = real == 0.0 ? 1.0 : tp / real;
  c.f1 = c.precision + c.recall == 0.0 ? 0.0 : 2 * c.precision * c.recall / (c.precision + c.recall);
  return c;
}

}  // namespace oracle

#define CHECK_MDM_ERROR(expr, expected_code)                        \
  do {                                                              \
    bool thrown_ = false;                                           \
    try {                                                           \
      (void)(expr);                                                 \
    } catch (const mdm::Error& e_) {                                \
      thrown_ = true;                                               \
      CHECK_MESSAGE(e_.code() == (expected_code), e_.what());       \
    }                                                               \
    CHECK_MESSAGE(thrown_, "expected mdm::Error from " #expr);      \
  } while (0)
