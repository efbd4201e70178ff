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

#include "mdm/explain/explain.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "mdm/common/error.h"
#include "mdm/common/text.h"
#include "mdm/graph/distances.h"
#include "mdm/match/standardize.h"

namespace mdm::explain {

namespace {

void require_node(const PropertyGraph& g, NodeId id) {
  if (!g.contains(id)) throw Error(ErrorCode::kUnknownNode, "unknown node " + std::to_string(id));
}

bool path_less(const GraphPath& a, const GraphPath& b) {
  if (a.nodes != b.nodes) return a.nodes < b.nodes;
  return a.edges < b.edges;
}

}  // namespace

std::vector<GraphPath> enumerate_paths(const PropertyGraph& g, NodeId u, NodeId v, std::size_t max_len,
                                       std::size_t max_paths) {
  require_node(g, u);
  require_node(g, v);
  if (u == v) throw Error(ErrorCode::kInvalidArgument, "path endpoints must differ");
  const auto to_v = graph::bfs_distances(g, v, static_cast<std::uint32_t>(max_len));

  std::vector<GraphPath> out;
  GraphPath current{{u}, {}};
  std::vector<bool> on_path(g.num_nodes(), false);
  on_path[u] = true;
  for (std::size_t len = 1; len <= max_len && out.size() < max_paths; ++len) {
    std::vector<GraphPath> found;
    // Depth-first extension, pruned by the hop distance still to cover.
    auto extend = [&](auto&& self, NodeId at) -> void {
      const std::size_t used = current.edges.size();
      for (const auto& nb : g.neighbors(at)) {
        const auto d = to_v.at(nb.node);
        if (!d || on_path[nb.node] || used + 1 + *d > len) continue;
        current.nodes.push_back(nb.node);
        current.edges.push_back(nb.edge);
        if (nb.node == v) {
          if (used + 1 == len) found.push_back(current);
        } else if (used + 1 < len) {
          on_path[nb.node] = true;
          self(self, nb.node);
          on_path[nb.node] = false;
        }
        current.nodes.pop_back();
        current.edges.pop_back();
      }
    };
    extend(extend, u);
    std::sort(found.begin(), found.end(), path_less);
    for (auto& p : found) {
      if (out.size() == max_paths) break;
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::map<std::string, double> relation_frequencies(const PropertyGraph& g) {
  std::map<std::string, double> freq;
  for (const auto& e : g.edges()) freq[e.relation] += 1.0;
  for (auto& [_, f] : freq) f /= static_cast<double>(g.num_edges());
  return freq;
}

PathExplanation rank_paths(const PropertyGraph& g, const std::vector<GraphPath>& paths, std::size_t top_k) {
  const auto freq = relation_frequencies(g);
  PathExplanation out;
  for (const auto& p : paths) {
    if (p.edges.empty() || p.nodes.size() != p.edges.size() + 1)
      throw Error(ErrorCode::kInvalidArgument, "malformed path");
    RankedPath r{p, 0.0, {}};
    double sum = 0.0;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      if (p.edges[i] >= g.num_edges()) throw Error(ErrorCode::kInvalidArgument, "path edge outside the graph");
      const auto& e = g.edges()[p.edges[i]];
      const auto [a, b] = std::minmax(p.nodes[i], p.nodes[i + 1]);
      if (e.src != a || e.dst != b) throw Error(ErrorCode::kInvalidArgument, "path edge does not join its nodes");
      const double f = freq.at(e.relation);
      const double term = std::log(1.0 / f);
      r.breakdown.push_back({p.edges[i], e.relation, f, term});
      sum += term;
    }
    const double len = static_cast<double>(p.length());
    r.score = sum / (len * len);
    out.paths.push_back(std::move(r));
  }
  std::sort(out.paths.begin(), out.paths.end(), [](const RankedPath& a, const RankedPath& b) {
    if (a.score != b.score) return a.score > b.score;
    return path_less(a.path, b.path);
  });
  if (out.paths.size() > top_k) out.paths.resize(top_k);
  return out;
}

std::vector<Document> load_documents(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::vector<Document> docs;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) docs.push_back({std::to_string(docs.size()), line});
    else docs.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return docs;
}

TextIndex TextIndex::build(std::vector<Document> documents) {
  TextIndex index;
  index.documents_ = std::move(documents);
  index.spans_.resize(index.documents_.size());
  for (std::size_t d = 0; d < index.documents_.size(); ++d) {
    const auto tokens = text::tokenize_spans(index.documents_[d].text);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      index.spans_[d].push_back({tokens[i].begin, tokens[i].end});
      auto& list = index.postings_[tokens[i].token];
      if (list.empty() || list.back().doc != d) list.push_back({d, {}});
      list.back().positions.push_back(i);
    }
  }
  return index;
}

const std::vector<TextIndex::Posting>& TextIndex::lookup(std::string_view token) const {
  static const std::vector<Posting> kEmpty;
  auto it = postings_.find(token);
  return it == postings_.end() ? kEmpty : it->second;
}

std::pair<std::size_t, std::size_t> TextIndex::token_span(std::size_t doc, std::size_t position) const {
  return spans_.at(doc).at(position);
}

std::vector<std::string> name_tokens(const graph::Node& node) {
  std::set<std::string> tokens;
  for (const char* attribute : {"given_name", "surname", "name"}) {
    auto it = node.attributes.find(attribute);
    if (it == node.attributes.end()) continue;
    for (const auto& t : text::tokenize_spans(it->second)) tokens.insert(t.token);
  }
  return {tokens.begin(), tokens.end()};
}

VerificationEvidence retrieve_verification(const TextIndex& index, const graph::Node& u, const graph::Node& v,
                                           std::size_t k) {
  struct Hit {
    std::set<std::string> terms_u;
    std::set<std::string> terms_v;
    std::vector<std::size_t> positions;
  };
  std::map<std::size_t, Hit> hits;
  auto collect = [&](const graph::Node& node, bool is_u) {
    for (const auto& token : name_tokens(node))
      for (const auto& posting : index.lookup(token)) {
        auto& hit = hits[posting.doc];
        (is_u ? hit.terms_u : hit.terms_v).insert(token);
        hit.positions.insert(hit.positions.end(), posting.positions.begin(), posting.positions.end());
      }
  };
  collect(u, true);
  collect(v, false);

  struct Ranked {
    std::size_t doc;
    bool both;
    std::size_t matched;
  };
  std::vector<Ranked> ranked;
  for (const auto& [doc, hit] : hits) {
    std::set<std::string> all = hit.terms_u;
    all.insert(hit.terms_v.begin(), hit.terms_v.end());
    ranked.push_back({doc, !hit.terms_u.empty() && !hit.terms_v.empty(), all.size()});
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    if (a.both != b.both) return a.both;
    if (a.matched != b.matched) return a.matched > b.matched;
    return a.doc < b.doc;
  });

  VerificationEvidence out;
  for (std::size_t r = 0; r < ranked.size() && r < k; ++r) {
    const auto& hit = hits.at(ranked[r].doc);
    const auto [lo_it, hi_it] = std::minmax_element(hit.positions.begin(), hit.positions.end());
    const std::size_t last = index.token_count(ranked[r].doc) - 1;
    const std::size_t lo = *lo_it > kSnippetWindow ? *lo_it - kSnippetWindow : 0;
    const std::size_t hi = std::min(last, *hi_it + kSnippetWindow);
    const auto begin = index.token_span(ranked[r].doc, lo).first;
    const auto end = index.token_span(ranked[r].doc, hi).second;
    const auto& doc = index.documents()[ranked[r].doc];
    std::set<std::string> terms = hit.terms_u;
    terms.insert(hit.terms_v.begin(), hit.terms_v.end());
    out.snippets.push_back({doc.text.substr(begin, end - begin), doc.id, {terms.begin(), terms.end()},
                            ranked[r].both, ranked[r].matched});
  }
  return out;
}

NodeComparison compare_nodes(const PropertyGraph& g, NodeId u, NodeId v) {
  require_node(g, u);
  require_node(g, v);
  NodeComparison out;
  const auto& au = g.node(u).attributes;
  const auto& av = g.node(v).attributes;
  for (const auto& [name, value] : au) {
    auto it = av.find(name);
    if (it == av.end()) continue;
    const auto su = match::standardize_value(name, value).value;
    const auto sv = match::standardize_value(name, it->second).value;
    out.attributes.push_back({name, value, it->second, text::edit_similarity(su, sv)});
  }
  const auto nu = g.neighbor_nodes(u);
  const auto nv = g.neighbor_nodes(v);
  std::vector<NodeId> inter, uni;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(inter));
  std::set_union(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(uni));
  out.neighbor_jaccard = uni.empty() ? 0.0 : static_cast<double>(inter.size()) / static_cast<double>(uni.size());
  return out;
}

ExplanationBundle explain_link(const PropertyGraph& g, const TextIndex& index,
                               const std::map<linkpred::NodePair, double>& predictions, NodeId u, NodeId v,
                               const ExplainOptions& options) {
  auto it = predictions.find(linkpred::make_pair_key(u, v));
  if (it == predictions.end())
    throw Error(ErrorCode::kUnknownPrediction,
                "no prediction for (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  ExplanationBundle b;
  b.u = u;
  b.v = v;
  b.score = it->second;
  b.paths = rank_paths(g, enumerate_paths(g, u, v, options.max_len, options.max_paths), options.top_paths);
  b.evidence = retrieve_verification(index, g.node(u), g.node(v), options.snippets);
  b.comparison = compare_nodes(g, u, v);
  return b;
}

Json path_explanation_to_json(const PropertyGraph& g, const PathExplanation& p) {
  Json out = Json::array();
  for (const auto& r : p.paths) {
    Json terms = Json::array();
    for (const auto& t : r.breakdown) {
      const auto& e = g.edges()[t.edge];
      terms.push_back({{"src", e.src}, {"dst", e.dst}, {"relation", t.relation},
                       {"frequency", t.frequency}, {"term", t.term}});
    }
    out.push_back({{"nodes", r.path.nodes}, {"score", r.score}, {"edges", terms}});
  }
  return out;
}

Json evidence_to_json(const VerificationEvidence& e) {
  Json out = Json::array();
  for (const auto& s : e.snippets)
    out.push_back({{"snippet", s.text},
                   {"source_record_id", s.source_record_id},
                   {"match_terms", s.match_terms},
                   {"both_endpoints", s.both_endpoints},
                   {"matched", s.matched}});
  return out;
}

Json comparison_to_json(const NodeComparison& c) {
  Json attrs = Json::array();
  for (const auto& a : c.attributes)
    attrs.push_back({{"attribute", a.attribute}, {"value_u", a.value_u}, {"value_v", a.value_v},
                     {"similarity", a.similarity}});
  return {{"attributes", attrs}, {"neighbor_jaccard", c.neighbor_jaccard}};
}

Json bundle_to_json(const PropertyGraph& g, const ExplanationBundle& b) {
  return {{"u", b.u},
          {"v", b.v},
          {"score", b.score},
          {"paths", path_explanation_to_json(g, b.paths)},
          {"verification", evidence_to_json(b.evidence)},
          {"comparison", comparison_to_json(b.comparison)}};
}

}  // namespace mdm::explain
