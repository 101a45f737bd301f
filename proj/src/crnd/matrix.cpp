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

#include "crnd/matrix.hpp"

#include <sstream>
#include <utility>

#include "crnd/error.hpp"

namespace crnd {

namespace {

// Element of Z[i]. Only what Bareiss needs.
struct GaussInt {
  mpz_class re;
  mpz_class im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

// Exact quotient a / b; Bareiss guarantees divisibility.
GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  const mpz_class n = b.re * b.re + b.im * b.im;
  // a * conj(b)
  mpz_class re = a.re * b.re + a.im * b.im;
  mpz_class im = a.im * b.re - a.re * b.im;
  if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t())) {
    throw InternalError("Bareiss step produced an inexact quotient");
  }
  mpz_divexact(re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
  return {std::move(re), std::move(im)};
}

// Scales every row by the lcm of its denominators so that all entries lie
// in Z[i]. Row scaling leaves rank unchanged and multiplies det by the
// product of the scales, which is returned.
std::vector<std::vector<GaussInt>> integerize(const ComplexMatrix& m, mpz_class* scale_product) {
  std::vector<std::vector<GaussInt>> out(m.rows());
  *scale_product = 1;
  for (int r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (int c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).im().get_den_mpz_t());
    }
    *scale_product *= l;
    out[r].reserve(m.cols());
    for (int c = 0; c < m.cols(); ++c) {
      const Rational re = m(r, c).re() * l;
      const Rational im = m(r, c).im() * l;
      out[r].push_back({re.get_num(), im.get_num()});
    }
  }
  return out;
}

struct BareissResult {
  int rank = 0;
  GaussInt last_pivot{1, 0};
  int swaps = 0;
};

BareissResult bareiss(std::vector<std::vector<GaussInt>>& a, int rows, int cols) {
  BareissResult res;
  GaussInt prev{1, 0};
  for (int k = 0; k < rows && k < cols; ++k) {
    int pr = -1;
    int pc = -1;
    for (int r = k; r < rows && pr < 0; ++r) {
      for (int c = k; c < cols; ++c) {
        if (!a[r][c].is_zero()) {
          pr = r;
          pc = c;
          break;
        }
      }
    }
    if (pr < 0) break;
    if (pr != k) {
      std::swap(a[pr], a[k]);
      ++res.swaps;
    }
    if (pc != k) {
      for (int r = 0; r < rows; ++r) std::swap(a[r][pc], a[r][k]);
      ++res.swaps;
    }
    const GaussInt& piv = a[k][k];
    for (int r = k + 1; r < rows; ++r) {
      for (int c = k + 1; c < cols; ++c) {
        a[r][c] = exact_div(sub(mul(piv, a[r][c]), mul(a[r][k], a[k][c])), prev);
      }
      a[r][k] = GaussInt{0, 0};
    }
    prev = a[k][k];
    ++res.rank;
  }
  res.last_pivot = prev;
  return res;
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<GaussianRational>>& rows,
                                       int cols) {
  ComplexMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::span<const GaussianRational> ComplexMatrix::row(int r) const {
  return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)};
}

void ComplexMatrix::append_row(std::span<const GaussianRational> values) {
  if (static_cast<int>(values.size()) != cols_) throw InputError("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

bool ComplexMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out = *this;
  for (auto& x : out.data_) x = x.conj();
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
  ComplexMatrix out(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int k = 0; k < a.cols_; ++k) {
      const auto& x = a(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum dimension mismatch");
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

std::string ComplexMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

int rank_exact(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  mpz_class scale;
  auto a = integerize(m, &scale);
  return bareiss(a, m.rows(), m.cols()).rank;
}

std::optional<ComplexMatrix> inverse(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const int n = m.rows();
  ComplexMatrix a = m;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      for (int c = 0; c < n; ++c) {
        std::swap(a(p, c), a(k, c));
        std::swap(inv(p, c), inv(k, c));
      }
    }
    const GaussianRational piv_inv = a(k, k).inverse();
    for (int c = 0; c < n; ++c) {
      a(k, c) *= piv_inv;
      inv(k, c) *= piv_inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == k || a(r, k).is_zero()) continue;
      const GaussianRational f = a(r, k);
      for (int c = 0; c < n; ++c) {
        a(r, c) -= f * a(k, c);
        inv(r, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

GaussianRational determinant(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return GaussianRational(1);
  mpz_class scale;
  auto a = integerize(m, &scale);
  const BareissResult res = bareiss(a, n, n);
  if (res.rank < n) return GaussianRational(0);
  GaussianRational det(Rational(res.last_pivot.re), Rational(res.last_pivot.im));
  if (res.swaps % 2) det = -det;
  return det / GaussianRational(Rational(scale));
}

}  // namespace crnd
