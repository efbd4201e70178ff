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

#include "mdm/linkpred/dense.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "mdm/common/error.h"

namespace mdm::linkpred {

namespace {

void require(bool ok, const char* op, const DenseMatrix& a, const DenseMatrix& b) {
  if (!ok)
    throw Error(ErrorCode::kShapeMismatch, std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                                               std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                               "x" + std::to_string(b.cols()));
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::kShapeMismatch, "ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

void DenseMatrix::fill(double value) { std::fill(data_.begin(), data_.end(), value); }

bool DenseMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.cols() == b.rows(), "matmul", a, b);
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto o = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double x = a(i, k);
      if (x == 0.0) continue;
      const auto br = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) o[j] += x * br[j];
    }
  }
  return out;
}

DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.rows() == b.rows(), "matmul_tn", a, b);
  DenseMatrix out(a.cols(), b.cols());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    const auto ar = a.row(k);
    const auto br = b.row(k);
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const double x = ar[i];
      if (x == 0.0) continue;
      auto o = out.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j) o[j] += x * br[j];
    }
  }
  return out;
}

DenseMatrix matmul_nt(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.cols() == b.cols(), "matmul_nt", a, b);
  DenseMatrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto ar = a.row(i);
    for (std::size_t j = 0; j < b.rows(); ++j) {
      const auto br = b.row(j);
      double s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += ar[k] * br[k];
      out(i, j) = s;
    }
  }
  return out;
}

void add_row_vector(DenseMatrix& m, const DenseMatrix& bias) {
  require(bias.rows() == 1 && bias.cols() == m.cols(), "add_row_vector", m, bias);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += bias(0, j);
  }
}

DenseMatrix column_sums(const DenseMatrix& m) {
  DenseMatrix out(1, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) out(0, j) += r[j];
  }
  return out;
}

void require_finite(const DenseMatrix& m, std::string_view where) {
  if (!m.all_finite())
    throw Error(ErrorCode::kNonFiniteActivation, "non-finite value in " + std::string(where));
}

SparseMatrix SparseMatrix::from_triplets(
    std::size_t rows, std::size_t cols,
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, double>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseMatrix s;
  s.rows = rows;
  s.cols = cols;
  s.offsets.assign(rows + 1, 0);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto [r, c] = entries[i].first;
    if (r >= rows || c >= cols) throw Error(ErrorCode::kShapeMismatch, "sparse entry out of range");
    if (!s.indices.empty() && i > 0 && entries[i - 1].first == entries[i].first) {
      s.values.back() += entries[i].second;
      continue;
    }
    s.indices.push_back(c);
    s.values.push_back(entries[i].second);
    ++s.offsets[r + 1];
  }
  for (std::size_t r = 0; r < rows; ++r) s.offsets[r + 1] += s.offsets[r];
  return s;
}

DenseMatrix multiply(const SparseMatrix& s, const DenseMatrix& m) {
  if (s.cols != m.rows()) throw Error(ErrorCode::kShapeMismatch, "sparse multiply");
  DenseMatrix out(s.rows, m.cols());
  for (std::size_t r = 0; r < s.rows; ++r) {
    auto o = out.row(r);
    for (std::size_t k = s.offsets[r]; k < s.offsets[r + 1]; ++k) {
      const auto mr = m.row(s.indices[k]);
      const double w = s.values[k];
      for (std::size_t j = 0; j < m.cols(); ++j) o[j] += w * mr[j];
    }
  }
  return out;
}

DenseMatrix multiply_transposed(const SparseMatrix& s, const DenseMatrix& m) {
  if (s.rows != m.rows()) throw Error(ErrorCode::kShapeMismatch, "sparse multiply_transposed");
  DenseMatrix out(s.cols, m.cols());
  for (std::size_t r = 0; r < s.rows; ++r) {
    const auto mr = m.row(r);
    for (std::size_t k = s.offsets[r]; k < s.offsets[r + 1]; ++k) {
      auto o = out.row(s.indices[k]);
      const double w = s.values[k];
      for (std::size_t j = 0; j < m.cols(); ++j) o[j] += w * mr[j];
    }
  }
  return out;
}

}  // namespace mdm::linkpred
