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

#include "mdm/linkpred/models.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "mdm/common/error.h"
#include "mdm/common/rng.h"

namespace mdm::linkpred {

using graph::NodeId;
using graph::PropertyGraph;

const char* model_name(ModelKind kind) { return kind == ModelKind::kGcn ? "gcn" : "pgnn"; }

ModelKind parse_model(std::string_view name) {
  if (name == "gcn") return ModelKind::kGcn;
  if (name == "pgnn") return ModelKind::kPgnn;
  throw Error(ErrorCode::kConfigError, "unknown model: " + std::string(name));
}

std::size_t AnchorSets::total() const {
  std::size_t t = 0;
  for (const auto& s : sets) t += s.size();
  return t;
}

std::vector<NodeId> AnchorSets::nodes() const {
  std::set<NodeId> all;
  for (const auto& s : sets) all.insert(s.begin(), s.end());
  return {all.begin(), all.end()};
}

AnchorSets make_anchor_sets(std::size_t num_nodes, std::size_t anchors, std::uint64_t seed) {
  if (num_nodes == 0 || anchors == 0) throw Error(ErrorCode::kInvalidArgument, "anchor sets need nodes");
  Rng rng(seed);
  std::vector<NodeId> pool;
  std::size_t cursor = 0;
  auto refill = [&] {
    pool.resize(num_nodes);
    for (std::size_t i = 0; i < num_nodes; ++i) pool[i] = static_cast<NodeId>(i);
    rng.shuffle(pool);
    cursor = 0;
  };
  refill();

  AnchorSets out;
  out.seed = seed;
  std::size_t placed = 0;
  for (std::size_t k = 0; placed < anchors; ++k) {
    const std::size_t want = std::min({std::size_t{1} << (k / 2), anchors - placed, num_nodes});
    std::vector<NodeId> set;
    while (set.size() < want) {
      if (cursor == pool.size()) refill();
      const NodeId node = pool[cursor++];
      if (std::find(set.begin(), set.end(), node) == set.end()) set.push_back(node);
    }
    std::sort(set.begin(), set.end());
    placed += set.size();
    out.sets.push_back(std::move(set));
  }
  return out;
}

ModelParams ModelParams::init(ModelKind kind, std::size_t input_dim, std::size_t hidden_dim, std::size_t layers,
                              std::uint64_t seed) {
  if (input_dim == 0 || hidden_dim == 0 || layers == 0)
    throw Error(ErrorCode::kInvalidArgument, "model dimensions must be positive");
  ModelParams p;
  p.kind = kind;
  p.input_dim = input_dim;
  p.hidden_dim = hidden_dim;
  p.layers = layers;
  Rng rng(seed);
  auto glorot = [&](std::size_t fan_in, std::size_t fan_out) {
    DenseMatrix m(fan_in, fan_out);
    const double a = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    for (auto& x : m.data()) x = (2.0 * rng.uniform() - 1.0) * a;
    return m;
  };
  for (std::size_t l = 0; l < layers; ++l) {
    const std::size_t d = l == 0 ? input_dim : hidden_dim;
    const std::string tag = std::to_string(l);
    if (kind == ModelKind::kGcn) {
      p.tensors.push_back({"W" + tag, glorot(d, hidden_dim)});
      p.tensors.push_back({"b" + tag, DenseMatrix(1, hidden_dim)});
    } else {
      p.tensors.push_back({"W" + tag, glorot(2 * d, hidden_dim)});
      p.tensors.push_back({"b" + tag, DenseMatrix(1, hidden_dim)});
      p.tensors.push_back({"p" + tag, glorot(hidden_dim, 1)});
      p.tensors.push_back({"c" + tag, DenseMatrix(1, 1)});
    }
  }
  return p;
}

SparseMatrix normalized_adjacency(const PropertyGraph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<double> inv_sqrt(n);
  for (NodeId v = 0; v < n; ++v)
    inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(g.neighbor_nodes(v).size() + 1));
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, double>> entries;
  for (NodeId v = 0; v < n; ++v) {
    entries.push_back({{v, v}, inv_sqrt[v] * inv_sqrt[v]});
    for (NodeId u : g.neighbor_nodes(v)) entries.push_back({{v, u}, inv_sqrt[v] * inv_sqrt[u]});
  }
  return SparseMatrix::from_triplets(n, n, std::move(entries));
}

AnchorProximity anchor_proximity(const AnchorSets& anchors, const graph::DistanceCache& cache,
                                 std::size_t num_nodes) {
  AnchorProximity prox;
  prox.num_nodes = num_nodes;
  prox.sets.resize(anchors.sets.size());
  prox.coverage = DenseMatrix(num_nodes, anchors.sets.size());
  for (std::size_t i = 0; i < anchors.sets.size(); ++i) {
    const double size = static_cast<double>(anchors.sets[i].size());
    for (NodeId u : anchors.sets[i]) {
      if (!cache.has_row(u))
        throw Error(ErrorCode::kInvalidArgument, "distance cache has no row for anchor " + std::to_string(u));
      for (const auto& [v, d] : cache.row(u).sorted()) {
        if (v >= num_nodes) throw Error(ErrorCode::kShapeMismatch, "distance cache covers a larger graph");
        const double w = 1.0 / (static_cast<double>(d) + 1.0) / size;
        prox.sets[i].push_back({v, u, w});
        prox.coverage(v, i) += w;
      }
    }
  }
  return prox;
}

Propagation make_propagation(ModelKind kind, const PropertyGraph& g, const AnchorSets& anchors,
                             std::uint32_t cutoff) {
  Propagation prop;
  prop.kind = kind;
  if (kind == ModelKind::kGcn) {
    prop.adjacency = normalized_adjacency(g);
  } else {
    const auto nodes = anchors.nodes();
    const auto cache = graph::DistanceCache::compute(g, nodes, cutoff);
    prop.proximity = anchor_proximity(anchors, cache, g.num_nodes());
  }
  return prop;
}

namespace {

void check_shapes(const ModelParams& params, const Propagation& prop, const DenseMatrix& x) {
  if (params.kind != prop.kind) throw Error(ErrorCode::kShapeMismatch, "model kind differs from propagation");
  if (x.cols() != params.input_dim)
    throw Error(ErrorCode::kShapeMismatch, "feature width " + std::to_string(x.cols()) + " vs model input " +
                                               std::to_string(params.input_dim));
  const std::size_t n = params.kind == ModelKind::kGcn ? prop.adjacency.rows : prop.proximity.num_nodes;
  if (x.rows() != n) throw Error(ErrorCode::kShapeMismatch, "feature rows differ from graph size");
  if (params.tensors.size() != params.layers * params.per_layer())
    throw Error(ErrorCode::kShapeMismatch, "parameter count differs from layer count");
}

DenseMatrix relu(const DenseMatrix& m) {
  DenseMatrix out = m;
  for (auto& v : out.data()) v = std::max(v, 0.0);
  return out;
}

// Rows [begin, begin + rows) of m.
DenseMatrix row_block(const DenseMatrix& m, std::size_t begin, std::size_t rows) {
  DenseMatrix out(rows, m.cols());
  std::copy(m.data().begin() + begin * m.cols(), m.data().begin() + (begin + rows) * m.cols(), out.data().begin());
  return out;
}

DenseMatrix gcn(const ModelParams& params, const Propagation& prop, const DenseMatrix& x, ForwardCache* cache) {
  DenseMatrix h = x;
  for (std::size_t l = 0; l < params.layers; ++l) {
    DenseMatrix in = multiply(prop.adjacency, h);
    DenseMatrix pre = matmul(in, params.tensor(l, 0));
    add_row_vector(pre, params.tensor(l, 1));
    require_finite(pre, "gcn layer " + std::to_string(l));
    h = l + 1 == params.layers ? pre : relu(pre);
    if (cache) {
      cache->inputs.push_back(std::move(in));
      cache->pre.push_back(std::move(pre));
    }
  }
  return h;
}

DenseMatrix pgnn(const ModelParams& params, const Propagation& prop, const DenseMatrix& x, ForwardCache* cache) {
  const auto& px = prop.proximity;
  const std::size_t n = px.num_nodes;
  const std::size_t k = px.sets.size();
  const std::size_t hd = params.hidden_dim;
  DenseMatrix out(n, k);
  DenseMatrix h = x;
  for (std::size_t l = 0; l < params.layers; ++l) {
    const auto& w = params.tensor(l, 0);
    const std::size_t d = h.cols();
    if (w.rows() != 2 * d) throw Error(ErrorCode::kShapeMismatch, "P-GNN weight rows differ from 2 x input");
    const DenseMatrix q = matmul(h, row_block(w, 0, d));
    const DenseMatrix r = matmul(h, row_block(w, d, d));
    const auto& b = params.tensor(l, 1);
    DenseMatrix pre(n * k, hd);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t i = 0; i < k; ++i) {
        auto row = pre.row(v * k + i);
        const double c = px.coverage(v, i);
        for (std::size_t j = 0; j < hd; ++j) row[j] = c * q(v, j) + b(0, j);
      }
    for (std::size_t i = 0; i < k; ++i)
      for (const auto& e : px.sets[i]) {
        auto row = pre.row(e.node * k + i);
        const auto ru = r.row(e.anchor);
        for (std::size_t j = 0; j < hd; ++j) row[j] += e.weight * ru[j];
      }
    require_finite(pre, "pgnn layer " + std::to_string(l));

    const auto& p = params.tensor(l, 2);
    const double c = params.tensor(l, 3)(0, 0);
    DenseMatrix next(n, hd);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t i = 0; i < k; ++i) {
        const auto row = pre.row(v * k + i);
        double z = c;
        for (std::size_t j = 0; j < hd; ++j) {
          const double m = std::max(row[j], 0.0);
          z += m * p(j, 0);
          next(v, j) += m / static_cast<double>(k);
        }
        out(v, i) += z;
      }
    if (cache) {
      cache->inputs.push_back(std::move(h));
      cache->pre.push_back(std::move(pre));
    }
    h = std::move(next);
  }
  return out;
}

std::vector<DenseMatrix> gcn_grad(const ModelParams& params, const Propagation& prop, const ForwardCache& cache,
                                  const DenseMatrix& grad_output) {
  std::vector<DenseMatrix> grads(params.tensors.size());
  DenseMatrix dh = grad_output;
  for (std::size_t l = params.layers; l-- > 0;) {
    DenseMatrix du = dh;
    if (l + 1 != params.layers) {
      const auto& pre = cache.pre[l];
      for (std::size_t i = 0; i < du.size(); ++i)
        if (pre.data()[i] <= 0.0) du.data()[i] = 0.0;
    }
    grads[l * 2] = matmul_tn(cache.inputs[l], du);
    grads[l * 2 + 1] = column_sums(du);
    if (l > 0) dh = multiply_transposed(prop.adjacency, matmul_nt(du, params.tensor(l, 0)));
  }
  return grads;
}

std::vector<DenseMatrix> pgnn_grad(const ModelParams& params, const Propagation& prop, const ForwardCache& cache,
                                   const DenseMatrix& grad_output) {
  const auto& px = prop.proximity;
  const std::size_t n = px.num_nodes;
  const std::size_t k = px.sets.size();
  const std::size_t hd = params.hidden_dim;
  std::vector<DenseMatrix> grads(params.tensors.size());
  DenseMatrix dnext(n, hd);  // gradient w.r.t. this layer's output h
  for (std::size_t l = params.layers; l-- > 0;) {
    const auto& pre = cache.pre[l];
    const auto& h = cache.inputs[l];
    const auto& w = params.tensor(l, 0);
    const auto& p = params.tensor(l, 2);
    const std::size_t d = h.cols();

    DenseMatrix dp(hd, 1);
    DenseMatrix dc(1, 1);
    DenseMatrix du(n * k, hd);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t i = 0; i < k; ++i) {
        const double g = grad_output(v, i);
        dc(0, 0) += g;
        const auto row = pre.row(v * k + i);
        auto drow = du.row(v * k + i);
        for (std::size_t j = 0; j < hd; ++j) {
          if (row[j] <= 0.0) continue;
          dp(j, 0) += g * row[j];
          drow[j] = g * p(j, 0) + dnext(v, j) / static_cast<double>(k);
        }
      }

    DenseMatrix dq(n, hd);
    DenseMatrix dr(n, hd);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t i = 0; i < k; ++i) {
        const double c = px.coverage(v, i);
        if (c == 0.0) continue;
        const auto drow = du.row(v * k + i);
        for (std::size_t j = 0; j < hd; ++j) dq(v, j) += c * drow[j];
      }
    for (std::size_t i = 0; i < k; ++i)
      for (const auto& e : px.sets[i]) {
        const auto drow = du.row(e.node * k + i);
        auto rrow = dr.row(e.anchor);
        for (std::size_t j = 0; j < hd; ++j) rrow[j] += e.weight * drow[j];
      }

    DenseMatrix dw(2 * d, hd);
    const DenseMatrix dtop = matmul_tn(h, dq);
    const DenseMatrix dbot = matmul_tn(h, dr);
    std::copy(dtop.data().begin(), dtop.data().end(), dw.data().begin());
    std::copy(dbot.data().begin(), dbot.data().end(), dw.data().begin() + d * hd);
    grads[l * 4] = std::move(dw);
    grads[l * 4 + 1] = column_sums(du);
    grads[l * 4 + 2] = std::move(dp);
    grads[l * 4 + 3] = std::move(dc);
    if (l > 0) {
      dnext = matmul_nt(dq, row_block(w, 0, d));
      const DenseMatrix from_r = matmul_nt(dr, row_block(w, d, d));
      for (std::size_t i = 0; i < dnext.size(); ++i) dnext.data()[i] += from_r.data()[i];
    }
  }
  return grads;
}

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double dot(const DenseMatrix& emb, NodeId u, NodeId v) {
  const auto a = emb.row(u);
  const auto b = emb.row(v);
  double s = 0.0;
  for (std::size_t j = 0; j < emb.cols(); ++j) s += a[j] * b[j];
  return s;
}

}  // namespace

DenseMatrix forward(const ModelParams& params, const Propagation& prop, const DenseMatrix& x, ForwardCache* cache) {
  check_shapes(params, prop, x);
  if (cache) *cache = {};
  return params.kind == ModelKind::kGcn ? gcn(params, prop, x, cache) : pgnn(params, prop, x, cache);
}

std::vector<DenseMatrix> backward(const ModelParams& params, const Propagation& prop, const ForwardCache& cache,
                                  const DenseMatrix& grad_output) {
  if (cache.pre.size() != params.layers) throw Error(ErrorCode::kShapeMismatch, "forward cache is incomplete");
  return params.kind == ModelKind::kGcn ? gcn_grad(params, prop, cache, grad_output)
                                        : pgnn_grad(params, prop, cache, grad_output);
}

DenseMatrix gcn_forward(const ModelParams& params, const PropertyGraph& g, const DenseMatrix& x) {
  Propagation prop;
  prop.kind = ModelKind::kGcn;
  prop.adjacency = normalized_adjacency(g);
  return forward(params, prop, x);
}

DenseMatrix pgnn_forward(const ModelParams& params, const PropertyGraph& g, const DenseMatrix& x,
                         const AnchorSets& anchors, const graph::DistanceCache& cache) {
  Propagation prop;
  prop.kind = ModelKind::kPgnn;
  prop.proximity = anchor_proximity(anchors, cache, g.num_nodes());
  return forward(params, prop, x);
}

double score_link(const DenseMatrix& emb, NodeId u, NodeId v) {
  if (u >= emb.rows() || v >= emb.rows()) throw Error(ErrorCode::kUnknownNode, "node outside embedding");
  const double p = sigmoid(dot(emb, u, v));
  return std::clamp(p, std::numeric_limits<double>::denorm_min(), std::nextafter(1.0, 0.0));
}

double bce_loss(const DenseMatrix& emb, const std::vector<NodePair>& pairs, const std::vector<double>& labels,
                DenseMatrix* grad) {
  if (pairs.size() != labels.size() || pairs.empty())
    throw Error(ErrorCode::kInvalidArgument, "pairs and labels must be non-empty and aligned");
  if (grad) *grad = DenseMatrix(emb.rows(), emb.cols());
  const double scale = 1.0 / static_cast<double>(pairs.size());
  double loss = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [u, v] = pairs[i];
    const double x = dot(emb, u, v);
    const double y = labels[i];
    // log(1 + e^x) - y x, stable for large |x|.
    loss += std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x))) - y * x;
    if (grad) {
      const double g = (sigmoid(x) - y) * scale;
      auto gu = grad->row(u);
      auto gv = grad->row(v);
      const auto eu = emb.row(u);
      const auto ev = emb.row(v);
      for (std::size_t j = 0; j < emb.cols(); ++j) {
        gu[j] += g * ev[j];
        gv[j] += g * eu[j];
      }
    }
  }
  return loss * scale;
}

}  // namespace mdm::linkpred
