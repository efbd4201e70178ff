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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mdm/graph/distances.h"
#include "mdm/graph/property_graph.h"
#include "mdm/linkpred/dense.h"
#include "mdm/linkpred/split.h"

namespace mdm::linkpred {

enum class ModelKind { kGcn, kPgnn };

const char* model_name(ModelKind kind);
ModelKind parse_model(std::string_view name);

struct AnchorSets {
  std::vector<std::vector<graph::NodeId>> sets;
  std::uint64_t seed = 0;

  std::size_t total() const;
  // Distinct anchor nodes, ascending.
  std::vector<graph::NodeId> nodes() const;
  bool operator==(const AnchorSets&) const = default;
};

// Set sizes 1, 1, 2, 2, 4, 4, ... until `anchors` nodes are placed; the last
// set is truncated to fit. Anchors are distinct when anchors <= num_nodes;
// smaller graphs reuse nodes across sets but never within one.
AnchorSets make_anchor_sets(std::size_t num_nodes, std::size_t anchors, std::uint64_t seed);

struct NamedTensor {
  std::string name;
  DenseMatrix value;
};

// GCN layer l holds W (d x h) and b (1 x h). P-GNN layer l holds W (2d x h),
// b (1 x h), the position projection p (h x 1) and its bias c (1 x 1). d is
// input_dim for the first layer and hidden_dim afterwards.
struct ModelParams {
  ModelKind kind = ModelKind::kGcn;
  std::size_t input_dim = 0;
  std::size_t hidden_dim = 32;
  std::size_t layers = 2;
  std::vector<NamedTensor> tensors;

  // Glorot-uniform weights, zero biases.
  static ModelParams init(ModelKind kind, std::size_t input_dim, std::size_t hidden_dim, std::size_t layers,
                          std::uint64_t seed);
  std::size_t per_layer() const { return kind == ModelKind::kGcn ? 2 : 4; }
  const DenseMatrix& tensor(std::size_t layer, std::size_t slot) const {
    return tensors[layer * per_layer() + slot].value;
  }
};

// D^-1/2 (A + I) D^-1/2 over distinct neighbours.
SparseMatrix normalized_adjacency(const graph::PropertyGraph& g);

// s(v, u) = 1 / (d(v, u) + 1) within the cutoff, 0 beyond it.
struct AnchorProximity {
  struct Entry {
    graph::NodeId node;
    graph::NodeId anchor;
    double weight;  // s(node, anchor) / |set|
  };
  std::size_t num_nodes = 0;
  std::vector<std::vector<Entry>> sets;
  DenseMatrix coverage;  // n x sets: sum of weights per (node, set)
};

// Throws InvalidArgument if the cache lacks a row for some anchor.
AnchorProximity anchor_proximity(const AnchorSets& anchors, const graph::DistanceCache& cache,
                                 std::size_t num_nodes);

// What a forward pass needs besides parameters and features.
struct Propagation {
  ModelKind kind = ModelKind::kGcn;
  SparseMatrix adjacency;
  AnchorProximity proximity;
};

Propagation make_propagation(ModelKind kind, const graph::PropertyGraph& g, const AnchorSets& anchors,
                             std::uint32_t cutoff);

struct ForwardCache {
  std::vector<DenseMatrix> inputs;  // GCN: A_hat * H_(l-1); P-GNN: H_(l-1)
  std::vector<DenseMatrix> pre;     // pre-activations; P-GNN rows are (node, set) pairs
};

// GCN: H_l = ReLU(A_hat H_(l-1) W_l + b_l), last layer linear; n x hidden_dim.
// P-GNN: per layer and anchor set S_i, the node's message aggregates
// s(v,u) (h_v ++ h_u) / |S_i| over u in S_i, then ReLU(. W_l + b_l). The
// layer's position coordinates are message . p_l + c_l, one per set, and the
// next layer's h_v is the mean message over sets. Output: n x sets, summed
// over layers.
DenseMatrix forward(const ModelParams& params, const Propagation& prop, const DenseMatrix& x,
                    ForwardCache* cache = nullptr);

// Gradients for every tensor in params order, given dLoss/dOutput.
std::vector<DenseMatrix> backward(const ModelParams& params, const Propagation& prop, const ForwardCache& cache,
                                  const DenseMatrix& grad_output);

DenseMatrix gcn_forward(const ModelParams& params, const graph::PropertyGraph& g, const DenseMatrix& x);
DenseMatrix pgnn_forward(const ModelParams& params, const graph::PropertyGraph& g, const DenseMatrix& x,
                         const AnchorSets& anchors, const graph::DistanceCache& cache);

// sigmoid(emb_u . emb_v), kept inside the open interval (0, 1).
double score_link(const DenseMatrix& emb, graph::NodeId u, graph::NodeId v);

// Mean binary cross-entropy of sigmoid(emb_u . emb_v) against labels in {0, 1}.
// Fills grad (same shape as emb) when given.
double bce_loss(const DenseMatrix& emb, const std::vector<NodePair>& pairs, const std::vector<double>& labels,
                DenseMatrix* grad = nullptr);

}  // namespace mdm::linkpred
