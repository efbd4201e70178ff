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
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mdm/common/jsonl.h"
#include "mdm/graph/property_graph.h"
#include "mdm/linkpred/split.h"

namespace mdm::explain {

using graph::NodeId;
using graph::PropertyGraph;

// nodes.size() == edges.size() + 1; edges index into PropertyGraph::edges().
struct GraphPath {
  std::vector<NodeId> nodes;
  std::vector<std::size_t> edges;
  std::size_t length() const { return edges.size(); }
  bool operator==(const GraphPath&) const = default;
};

// Simple paths from u to v with at most max_len edges, shortest first and
// lexicographic by (node sequence, edge sequence) within a length; at most
// max_paths. Parallel edges give distinct paths. Throws InvalidArgument for
// u == v and UnknownNode for ids outside g.
std::vector<GraphPath> enumerate_paths(const PropertyGraph& g, NodeId u, NodeId v, std::size_t max_len = 4,
                                       std::size_t max_paths = 100);

// Fraction of edges carrying each relation.
std::map<std::string, double> relation_frequencies(const PropertyGraph& g);

struct EdgeTerm {
  std::size_t edge = 0;
  std::string relation;
  double frequency = 0.0;
  double term = 0.0;  // log(1 / frequency)
};

struct RankedPath {
  GraphPath path;
  double score = 0.0;
  std::vector<EdgeTerm> breakdown;
};

struct PathExplanation {
  std::vector<RankedPath> paths;
};

// score = sum of log(1 / freq(relation)) over the edges, divided by length^2.
// Sorted by score descending, ties by node then edge sequence; top_k kept.
PathExplanation rank_paths(const PropertyGraph& g, const std::vector<GraphPath>& paths, std::size_t top_k = 3);

struct Document {
  std::string id;
  std::string text;
};

// Documents of a text feed: one per line, id before the first tab.
std::vector<Document> load_documents(const std::filesystem::path& path);

class TextIndex {
 public:
  struct Posting {
    std::size_t doc = 0;
    std::vector<std::size_t> positions;  // token positions
  };

  // Tokens are lowercased alphanumeric runs.
  static TextIndex build(std::vector<Document> documents);

  // Postings in document order; empty when the token is absent.
  const std::vector<Posting>& lookup(std::string_view token) const;
  const std::vector<Document>& documents() const { return documents_; }
  std::size_t size() const { return postings_.size(); }
  // Byte span of token `position` in document `doc`.
  std::pair<std::size_t, std::size_t> token_span(std::size_t doc, std::size_t position) const;
  std::size_t token_count(std::size_t doc) const { return spans_[doc].size(); }

 private:
  std::vector<Document> documents_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> spans_;
  std::map<std::string, std::vector<Posting>, std::less<>> postings_;
};

// Lowercased tokens of the node's name attributes (given_name, surname, name).
std::vector<std::string> name_tokens(const graph::Node& node);

struct Snippet {
  std::string text;  // a substring of the document
  std::string source_record_id;
  std::vector<std::string> match_terms;
  bool both_endpoints = false;
  std::size_t matched = 0;  // distinct name tokens of either endpoint found
};

struct VerificationEvidence {
  std::vector<Snippet> snippets;
};

inline constexpr std::size_t kSnippetWindow = 15;

// Documents mentioning both endpoints rank above single-endpoint ones, then by
// matched token count, then document order. Each snippet spans the matches
// plus kSnippetWindow tokens either side.
VerificationEvidence retrieve_verification(const TextIndex& index, const graph::Node& u, const graph::Node& v,
                                           std::size_t k = 5);

struct AttributeComparison {
  std::string attribute;
  std::string value_u;
  std::string value_v;
  double similarity = 0.0;
};

struct NodeComparison {
  std::vector<AttributeComparison> attributes;  // attributes both nodes carry, by name
  double neighbor_jaccard = 0.0;                // 0 when both have no neighbours
};

// Similarity is 1 - edit distance / longer length of the standardized values.
NodeComparison compare_nodes(const PropertyGraph& g, NodeId u, NodeId v);

struct ExplainOptions {
  std::size_t max_len = 4;
  std::size_t max_paths = 100;
  std::size_t top_paths = 3;
  std::size_t snippets = 5;
};

struct ExplanationBundle {
  NodeId u = 0;
  NodeId v = 0;
  double score = 0.0;
  PathExplanation paths;
  VerificationEvidence evidence;
  NodeComparison comparison;
};

// Throws UnknownPrediction when the pair is not in `predictions`.
ExplanationBundle explain_link(const PropertyGraph& g, const TextIndex& index,
                               const std::map<linkpred::NodePair, double>& predictions, NodeId u, NodeId v,
                               const ExplainOptions& options = {});

Json path_explanation_to_json(const PropertyGraph& g, const PathExplanation& p);
Json evidence_to_json(const VerificationEvidence& e);
Json comparison_to_json(const NodeComparison& c);
Json bundle_to_json(const PropertyGraph& g, const ExplanationBundle& b);

}  // namespace mdm::explain
