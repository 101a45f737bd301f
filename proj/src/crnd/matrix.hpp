// Copyright 2026 The crnd Authors
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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crnd/number.hpp"

namespace crnd {

/// Dense rectangular matrix over Q(i), row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);

  static ComplexMatrix identity(int n);
  /// Builds from a list of equal-length rows. An empty list gives 0 x cols.
  static ComplexMatrix from_rows(const std::vector<std::vector<GaussianRational>>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  GaussianRational& operator()(int r, int c) { return data_[index(r, c)]; }
  const GaussianRational& operator()(int r, int c) const { return data_[index(r, c)]; }

  std::span<const GaussianRational> row(int r) const;
  void append_row(std::span<const GaussianRational> values);

  bool is_zero() const;
  ComplexMatrix conj() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<GaussianRational> data_;
};

/// Exact rank over Q(i). Rows are cleared of denominators, then reduced
/// by fraction-free (Bareiss) elimination over Z[i] with full pivoting;
/// the pivot is the first nonzero entry of the trailing block in row-major
/// order, so the run is reproducible.
int rank_exact(const ComplexMatrix& m);

/// Gauss-Jordan inverse; nullopt when singular.
std::optional<ComplexMatrix> inverse(const ComplexMatrix& m);

/// Determinant by fraction-free elimination. Square input only.
GaussianRational determinant(const ComplexMatrix& m);

}  // namespace crnd
