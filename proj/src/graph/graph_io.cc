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

#include "mdm/graph/graph_io.h"

#include "mdm/common/error.h"

namespace mdm::graph {

namespace fs = std::filesystem;

Json node_to_json(const Node& node) {
  Json j = {{"id", node.id}, {"kind", kind_name(node.kind)}, {"attributes", node.attributes}};
  if (!node.key.empty()) j["key"] = node.key;
  return j;
}

Json edge_to_json(const Edge& edge) {
  return {{"src", edge.src},
          {"dst", edge.dst},
          {"relation", edge.relation},
          {"properties", edge.properties}};
}

void save_graph(const PropertyGraph& g, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + dir.string());
  std::vector<Json> rows;
  rows.reserve(g.num_nodes());
  for (const auto& node : g.nodes()) rows.push_back(node_to_json(node));
  write_jsonl(dir / "nodes.jsonl", rows);
  rows.clear();
  for (const auto& edge : g.edges()) rows.push_back(edge_to_json(edge));
  write_jsonl(dir / "edges.jsonl", rows);
}

namespace {

AttributeMap string_map(const Json& j, const char* field) {
  AttributeMap out;
  if (!j.contains(field)) return out;
  const Json& m = j.at(field);
  if (!m.is_object()) throw Error(ErrorCode::kSchemaMismatch, std::string(field) + " is not an object");
  for (const auto& [k, v] : m.items()) {
    if (!v.is_string()) throw Error(ErrorCode::kSchemaMismatch, "non-string value for " + k);
    out.emplace(k, v.get<std::string>());
  }
  return out;
}

}  // namespace

PropertyGraph load_graph(const fs::path& dir) {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  try {
    for_each_jsonl(dir / "nodes.jsonl", [&](std::size_t, const Json& j) {
      Node node;
      node.id = j.at("id").get<NodeId>();
      node.kind = parse_kind(j.at("kind").get<std::string>());
      if (j.contains("key")) node.key = j.at("key").get<std::string>();
      node.attributes = string_map(j, "attributes");
      nodes.push_back(std::move(node));
    });
    for_each_jsonl(dir / "edges.jsonl", [&](std::size_t, const Json& j) {
      Edge edge;
      edge.src = j.at("src").get<NodeId>();
      edge.dst = j.at("dst").get<NodeId>();
      edge.relation = j.at("relation").get<std::string>();
      edge.properties = string_map(j, "properties");
      edges.push_back(std::move(edge));
    });
    return PropertyGraph::build(std::move(nodes), std::move(edges));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIoError || e.code() == ErrorCode::kSchemaMismatch) throw;
    throw Error(ErrorCode::kSchemaMismatch, dir.string() + ": " + e.what());
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kSchemaMismatch, dir.string() + ": " + e.what());
  }
}

}  // namespace mdm::graph
