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
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace mdm::linkpred {

// Row-major matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  void fill(double value);
  bool all_finite() const;
  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Each throws ShapeMismatch when the inner dimensions disagree.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);     // a * b
DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b);  // a^T * b
DenseMatrix matmul_nt(const DenseMatrix& a, const DenseMatrix& b);  // a * b^T

// Adds the 1 x cols row vector to every row.
void add_row_vector(DenseMatrix& m, const DenseMatrix& bias);
// 1 x cols column sums.
DenseMatrix column_sums(const DenseMatrix& m);

// Throws NonFiniteActivation naming `where` if any entry is NaN or infinite.
void require_finite(const DenseMatrix& m, std::string_view where);

// Compressed sparse rows; column indices ascending within a row.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> offsets;  // rows + 1 entries
  std::vector<std::size_t> indices;
  std::vector<double> values;

  // From (row, col, value) triplets; duplicates are summed.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    std::vector<std::pair<std::pair<std::size_t, std::size_t>, double>> entries);
};

DenseMatrix multiply(const SparseMatrix& s, const DenseMatrix& m);
// s^T * m.
DenseMatrix multiply_transposed(const SparseMatrix& s, const DenseMatrix& m);

}  // namespace mdm::linkpred
