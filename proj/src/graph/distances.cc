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

#include "mdm/graph/distances.h"

#include <algorithm>
#include <atomic>
#include <thread>

#include "mdm/common/error.h"
#include "mdm/common/rng.h"

namespace mdm::graph {

std::optional<std::uint32_t> DistanceRow::at(NodeId node) const {
  auto it = distance.find(node);
  if (it == distance.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<NodeId, std::uint32_t>> DistanceRow::sorted() const {
  std::vector<std::pair<NodeId, std::uint32_t>> out(distance.begin(), distance.end());
  std::sort(out.begin(), out.end());
  return out;
}

DistanceRow bfs_distances(const PropertyGraph& g, NodeId source, std::uint32_t cutoff) {
  if (!g.contains(source)) {
    throw Error(ErrorCode::kUnknownNode, "bfs source " + std::to_string(source));
  }
  DistanceRow row;
  row.source = source;
  row.cutoff = cutoff;
  row.distance.emplace(source, 0);
  std::vector<NodeId> frontier{source};
  std::vector<NodeId> next;
  for (std::uint32_t depth = 1; depth <= cutoff && !frontier.empty(); ++depth) {
    next.clear();
    for (NodeId u : frontier) {
      for (const auto& nb : g.neighbors(u)) {
        if (row.distance.emplace(nb.node, depth).second) next.push_back(nb.node);
      }
    }
    frontier.swap(next);
  }
  return row;
}

DistanceCache DistanceCache::compute(const PropertyGraph& g, std::span<const NodeId> sources,
                                     std::uint32_t cutoff, unsigned threads) {
  std::vector<NodeId> unique(sources.begin(), sources.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  std::vector<DistanceRow> rows(unique.size());
  if (threads <= 1 || unique.size() < 2) {
    for (std::size_t i = 0; i < unique.size(); ++i) rows[i] = bfs_distances(g, unique[i], cutoff);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < unique.size(); i = next++) {
          try {
            rows[i] = bfs_distances(g, unique[i], cutoff);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);
  }

  DistanceCache cache;
  cache.cutoff_ = cutoff;
  for (auto& row : rows) cache.rows_.emplace(row.source, std::move(row));
  return cache;
}

const DistanceRow& DistanceCache::row(NodeId source) const {
  auto it = rows_.find(source);
  if (it == rows_.end()) {
    throw Error(ErrorCode::kUnknownNode, "no cached distance row for " + std::to_string(source));
  }
  return it->second;
}

std::optional<std::uint32_t> DistanceCache::distance(NodeId a, NodeId b) const {
  if (auto it = rows_.find(a); it != rows_.end()) return it->second.at(b);
  if (auto it = rows_.find(b); it != rows_.end()) return it->second.at(a);
  throw Error(ErrorCode::kUnknownNode, "neither endpoint has a cached distance row");
}

double sampled_mean_path_length(const PropertyGraph& g, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = g.num_nodes();
  std::vector<NodeId> sources(n);
  for (NodeId i = 0; i < n; ++i) sources[i] = i;
  if (samples < n) {
    Rng rng(seed);
    rng.shuffle(sources);
    sources.resize(samples);
    std::sort(sources.begin(), sources.end());
  }
  double total = 0.0;
  std::size_t pairs = 0;
  const auto unbounded = static_cast<std::uint32_t>(n);
  for (NodeId s : sources) {
    for (const auto& [node, d] : bfs_distances(g, s, unbounded).distance) {
      if (node == s) continue;
      total += d;
      ++pairs;
    }
  }
  return pairs ? total / static_cast<double>(pairs) : 0.0;
}

}  // namespace mdm::graph
