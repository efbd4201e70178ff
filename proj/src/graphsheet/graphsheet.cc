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

#include "mdm/graphsheet/graphsheet.h"

#include <cstdio>
#include <set>
#include <sstream>

#include "mdm/common/error.h"
#include "mdm/common/rng.h"
#include "mdm/graph/components.h"
#include "mdm/graph/distances.h"
#include "mdm/graph/graph_io.h"

namespace mdm::graphsheet {

namespace {

std::string platform_string() {
  std::string os =
#if defined(__linux__)
      "linux";
#elif defined(__APPLE__)
      "macos";
#elif defined(_WIN32)
      "windows";
#else
      "unknown";
#endif
#if defined(__clang__)
  return os + ", clang " + __clang_version__;
#elif defined(__GNUC__)
  return os + ", gcc " + __VERSION__;
#else
  return os;
#endif
}

std::string fixed(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

void require_complete(const RunRecord& r) {
  auto missing = [](const char* field) {
    throw Error(ErrorCode::kIncompleteRecord, std::string("run record is missing ") + field);
  };
  if (r.dataset_id.empty()) missing("dataset_id");
  if (r.dataset_hash.empty()) missing("dataset_hash");
  if (r.model_kind.empty()) missing("model_kind");
  if (r.created_at.empty()) missing("created_at");
  if (r.toolkit_version.empty()) missing("toolkit_version");
}

std::string markdown(const RunRecord& r) {
  const auto& titles = section_titles();
  const auto& c = r.config;
  std::ostringstream md;
  md << "# GraphSheet: " << r.dataset_id << "\n\n";
  md << "## " << titles[0] << "\n\n"
     << "Link prediction on a master-data graph: rank probable links from watchlist nodes to the rest of the graph "
        "for review by data stewards. Predictions are candidates for human review, not decisions.\n\n"
     << "- Dataset: " << r.dataset_id << " (hash " << r.dataset_hash << ")\n"
     << "- Created: " << r.created_at << "\n"
     << "- Toolkit version: " << r.toolkit_version << "\n"
     << "- Platform: " << r.platform << "\n\n";

  md << "## " << titles[1] << "\n\n"
     << "| Persons | Orgs | Links | Attributes | Relations |\n|---|---|---|---|---|\n"
     << "| " << r.graph.persons << " | " << r.graph.orgs << " | " << r.graph.links << " | " << r.graph.attributes
     << " | " << r.graph.relations << " |\n\n"
     << "Average path length: " << fixed(r.graph.average_path_length) << " (BFS from " << r.graph.path_samples
     << " sampled sources)\n\n"
     << "| Component size | Components |\n|---|---|\n";
  for (const auto& [size, count] : r.graph.component_sizes) md << "| " << size << " | " << count << " |\n";
  md << "\n";

  md << "## " << titles[2] << "\n\n";
  if (r.protected_attributes.empty()) md << "No protected attributes declared.\n\n";
  for (const auto& attr : r.protected_attributes) {
    md << "### " << attr << "\n\n| Value | Count |\n|---|---|\n";
    auto it = r.protected_histograms.find(attr);
    if (it != r.protected_histograms.end())
      for (const auto& [value, count] : it->second) md << "| " << value << " | " << count << " |\n";
    md << "\n";
  }

  md << "## " << titles[3] << "\n\n"
     << "- Model: " << r.model_kind << "\n"
     << "- Decoder: sigmoid of the embedding dot product\n"
     << "- Loss: binary cross-entropy; optimizer Adam (beta 0.9/0.999)\n"
     << "- Initialization: Glorot uniform, zero biases\n"
     << "\n| Field | Value |\n|---|---|\n";
  const Json config_json = c.to_json();
  for (const auto& [key, value] : config_json.items())
    if (key != "features") md << "| " << key << " | " << value.dump() << " |\n";
  md << "\nFeatures:\n\n| Attribute | Encoding | Size |\n|---|---|---|\n";
  for (const auto& f : c.features)
    md << "| " << f.attribute << " | " << linkpred::encoding_name(f.encoding) << " | " << f.size << " |\n";
  md << "\n";

  md << "## " << titles[4] << "\n\n| Metric | Mean | Std. Dev. |\n|---|---|---|\n";
  const auto mean = linkpred::metrics_to_json(r.metrics.mean);
  const auto sd = linkpred::metrics_to_json(r.metrics.std_dev);
  for (const auto& [key, value] : mean.items())
    md << "| " << key << " | " << value.dump() << " | " << sd.at(key).dump() << " |\n";
  md << "\nRuns: " << r.metrics.runs.size() << " (seeds " << c.seed << " to " << c.seed + (c.runs ? c.runs - 1 : 0)
     << ")\n\n";

  md << "## " << titles[5] << "\n\n"
     << "**Where does the data come from?** Dataset " << r.dataset_id << ", content hash " << r.dataset_hash
     << ". Components smaller than " << c.min_component_size << " nodes are removed before training.\n\n"
     << "**Is the data anonymized?** " << (r.anonymized ? "Yes" : "No")
     << (r.anonymized ? ": classed attributes were replaced by consistent pseudonyms and dates shifted per entity."
                      : ": attribute values are as ingested.")
     << "\n\n"
     << "**How are negative samples chosen?** " << fixed(c.positive_fraction * 100, 1)
     << "% of links are held out as positives. Each negative pairs an endpoint of a held-out link with a node it is "
        "not linked to; there are as many negatives as positives. The graph is incomplete, so some negatives may be "
        "real but unrecorded links: a high positive-prediction rate on negatives is not necessarily an error.\n\n"
     << "**What do the thresholds mean?** Probabilities at or above 0.5 count as predicted links in the accuracy "
        "figures. In the review service, predicted links are queued for data stewards, who accept or reject them; "
        "nothing is linked automatically.\n\n"
     << "**What are the known limitations?** The graph is treated as static; new nodes require retraining. "
        "Anchor distances are truncated at "
     << c.distance_cutoff << " hops. Stewards are identified by a request header without authentication.\n";
  return md.str();
}

}  // namespace

std::string dataset_hash(const graph::PropertyGraph& g) {
  std::uint64_t h = fnv1a64(std::string_view{});
  for (const auto& n : g.nodes()) h = fnv1a64(graph::node_to_json(n).dump() + "\n", h);
  for (const auto& e : g.edges()) h = fnv1a64(graph::edge_to_json(e).dump() + "\n", h);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

GraphFacts graph_facts(const graph::PropertyGraph& g, std::size_t path_samples, std::uint64_t seed) {
  GraphFacts f;
  std::set<std::string> attributes, relations;
  for (const auto& n : g.nodes()) {
    (n.kind == graph::NodeKind::kPerson ? f.persons : f.orgs) += 1;
    for (const auto& [k, _] : n.attributes) attributes.insert(k);
  }
  for (const auto& e : g.edges()) relations.insert(e.relation);
  f.links = g.num_edges();
  f.attributes = attributes.size();
  f.relations = relations.size();
  for (const auto& c : graph::connected_components(g)) ++f.component_sizes[c.size()];
  f.path_samples = std::min(path_samples, g.num_nodes());
  f.average_path_length = graph::sampled_mean_path_length(g, path_samples, seed);
  return f;
}

RunRecord collect_facts(const graph::PropertyGraph& g, linkpred::ModelKind kind, const linkpred::TrainConfig& config,
                        const linkpred::MetricsReport& metrics, bool anonymized, const CollectOptions& options) {
  RunRecord r;
  r.dataset_id = options.dataset_id;
  r.dataset_hash = dataset_hash(g);
  r.graph = graph_facts(g, options.path_samples, options.seed);
  r.protected_attributes = options.protected_attributes;
  for (const auto& attr : options.protected_attributes) {
    auto& hist = r.protected_histograms[attr];
    for (const auto& n : g.nodes())
      if (auto it = n.attributes.find(attr); it != n.attributes.end()) ++hist[it->second];
  }
  r.model_kind = linkpred::model_name(kind);
  r.config = config;
  r.metrics = metrics;
  r.anonymized = anonymized;
  r.created_at = options.created_at;
  r.toolkit_version = MDM_VERSION;
  r.platform = platform_string();
  return r;
}

const std::vector<std::string>& section_titles() {
  static const std::vector<std::string> titles = {"Purpose & Intended Use", "Graph Facts",
                                                  "Diversity & Protected Attributes", "Model & Training Config",
                                                  "Metrics", "Caveats/FAQ"};
  return titles;
}

Format parse_format(std::string_view name) {
  if (name == "md" || name == "markdown") return Format::kMarkdown;
  if (name == "json") return Format::kJson;
  throw Error(ErrorCode::kConfigError, "unknown graphsheet format: " + std::string(name));
}

std::string render_graphsheet(const RunRecord& record, Format format) {
  require_complete(record);
  return format == Format::kJson ? record_to_json(record).dump(2) + "\n" : markdown(record);
}

Json record_to_json(const RunRecord& r) {
  Json sizes = Json::array();
  for (const auto& [size, count] : r.graph.component_sizes) sizes.push_back({{"size", size}, {"count", count}});
  Json hist = Json::object();
  for (const auto& [attr, values] : r.protected_histograms) hist[attr] = values;
  return {{"dataset", {{"id", r.dataset_id}, {"hash", r.dataset_hash}}},
          {"graph",
           {{"persons", r.graph.persons},
            {"orgs", r.graph.orgs},
            {"links", r.graph.links},
            {"attributes", r.graph.attributes},
            {"relations", r.graph.relations},
            {"component_sizes", sizes},
            {"average_path_length", r.graph.average_path_length},
            {"path_samples", r.graph.path_samples}}},
          {"protected_attributes", r.protected_attributes},
          {"protected_histograms", hist},
          {"model", {{"kind", r.model_kind}, {"config", r.config.to_json()}}},
          {"metrics", linkpred::report_to_json(r.metrics)},
          {"anonymized", r.anonymized},
          {"created_at", r.created_at},
          {"toolkit_version", r.toolkit_version},
          {"platform", r.platform}};
}

RunRecord record_from_json(const Json& j) {
  try {
    RunRecord r;
    r.dataset_id = j.at("dataset").at("id").get<std::string>();
    r.dataset_hash = j.at("dataset").at("hash").get<std::string>();
    const auto& g = j.at("graph");
    r.graph.persons = g.at("persons").get<std::size_t>();
    r.graph.orgs = g.at("orgs").get<std::size_t>();
    r.graph.links = g.at("links").get<std::size_t>();
    r.graph.attributes = g.at("attributes").get<std::size_t>();
    r.graph.relations = g.at("relations").get<std::size_t>();
    for (const auto& s : g.at("component_sizes"))
      r.graph.component_sizes[s.at("size").get<std::size_t>()] = s.at("count").get<std::size_t>();
    r.graph.average_path_length = g.at("average_path_length").get<double>();
    r.graph.path_samples = g.at("path_samples").get<std::size_t>();
    r.protected_attributes = j.at("protected_attributes").get<std::vector<std::string>>();
    for (const auto& [attr, values] : j.at("protected_histograms").items())
      r.protected_histograms[attr] = values.get<std::map<std::string, std::size_t>>();
    r.model_kind = j.at("model").at("kind").get<std::string>();
    const auto& config = j.at("model").at("config");
    const Json defaults = linkpred::TrainConfig{}.to_json();
    for (const auto& [key, _] : defaults.items())
      if (!config.contains(key)) throw Error(ErrorCode::kIncompleteRecord, "run record config is missing " + key);
    r.config = linkpred::TrainConfig::from_json(config);
    r.metrics = linkpred::report_from_json(j.at("metrics"));
    r.anonymized = j.at("anonymized").get<bool>();
    r.created_at = j.at("created_at").get<std::string>();
    r.toolkit_version = j.at("toolkit_version").get<std::string>();
    r.platform = j.at("platform").get<std::string>();
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kIncompleteRecord, std::string("run record: ") + e.what());
  }
}

}  // namespace mdm::graphsheet
