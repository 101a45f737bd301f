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

#include <span>
#include <string>
#include <vector>

#include "crnd/matrix.hpp"
#include "crnd/series.hpp"

namespace crnd {

/// Shape of a generic submanifold Im w = phi(z, zbar, Re w) in C^N:
/// n = CR dimension, d = codimension, k = jet order.
///
/// Jet variables are laid out as z_1..z_n, zb_1..zb_n, s_1..s_d, followed
/// by `params` real parameters that ride along unchanged (used to carry a
/// symbolic basepoint through the normalization pipeline).
struct Dimensions {
  int n = 1;
  int d = 1;
  int k = 2;
  int params = 0;

  int N() const { return n + d; }
  int m() const { return 2 * n + d; }
  int nvars() const { return 2 * n + d + params; }

  int z(int i) const { return i; }
  int zb(int i) const { return n + i; }
  int s(int j) const { return 2 * n + j; }
  int param(int p) const { return 2 * n + d + p; }

  /// Throws InputError unless n >= 1, d >= 1, k >= 1 and the layout fits.
  /// Derivatives of 1-jets are 0-jets, hence the escape hatch.
  void validate(bool allow_order_zero = false) const;

  friend bool operator==(const Dimensions&, const Dimensions&) = default;
};

/// Monomial z^alpha zb^beta s^gamma in the layout of dims.
Monomial make_monomial(const Dimensions& dims, std::span<const int> alpha,
                       std::span<const int> beta, std::span<const int> gamma);

/// z-, zb- and s-degree of a monomial in the layout of dims.
int z_degree(const Dimensions& dims, const Monomial& m);
int zb_degree(const Dimensions& dims, const Monomial& m);

/// Complex conjugation of a series whose variables include n conjugate
/// pairs (z_i at z_first + i, zb_i at z_first + n + i); other variables are
/// real. Swaps each pair and conjugates the coefficients.
Series conjugate_pairs(const Series& s, int n, int z_first = 0);

/// "z1", ..., "zb1", ..., "s1", ..., "p1", ...
std::vector<std::string> variable_names(const Dimensions& dims);

/// A k-jet at 0 in (z, zbar, s[, params]) with exact Q(i) coefficients.
class Jet {
 public:
  Jet() = default;
  explicit Jet(const Dimensions& dims);
  /// Truncates s to order dims.k.
  Jet(const Dimensions& dims, const Series& s);

  static Jet z(const Dimensions& dims, int i);
  static Jet zb(const Dimensions& dims, int i);
  static Jet s(const Dimensions& dims, int j);
  static Jet constant(const Dimensions& dims, const GaussianRational& c);

  const Dimensions& dims() const { return dims_; }
  const Series& series() const { return series_; }
  bool is_zero() const { return series_.is_zero(); }

  GaussianRational coeff(std::span<const int> alpha, std::span<const int> beta,
                         std::span<const int> gamma) const;

  Jet conjugate() const;
  /// coeff(alpha, beta, gamma) == conj(coeff(beta, alpha, gamma)) everywhere.
  bool is_real() const;
  Jet real_part() const;
  Jet imag_part() const;

  /// Partial derivative; the result is a (k-1)-jet.
  Jet derive(int var) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(const GaussianRational& c, const Jet& a);
  Jet operator-() const;
  friend bool operator==(const Jet& a, const Jet& b) {
    return a.dims_ == b.dims_ && a.series_ == b.series_;
  }

  std::string to_string() const;

 private:
  void check_same_dims(const Jet& o) const;

  Dimensions dims_;
  Series series_;
};

/// The graph datum Im w = phi: d real k-jets with zero constant term.
class DefiningJet {
 public:
  DefiningJet() = default;
  /// Throws InputError on mixed dimensions, a non-real component or a
  /// nonzero constant term.
  explicit DefiningJet(std::vector<Jet> components);

  static DefiningJet zero(const Dimensions& dims);

  const Dimensions& dims() const { return dims_; }
  const std::vector<Jet>& components() const { return components_; }
  const Jet& operator[](int j) const { return components_[j]; }

  /// P(l, j) = d phi^l / d s_j at 0.
  ComplexMatrix s_jacobian() const;
  /// Whether id + i * P is invertible (graph-normalizable at 0).
  bool graph_invertible() const;

  friend bool operator==(const DefiningJet&, const DefiningJet&) = default;

 private:
  Dimensions dims_;
  std::vector<Jet> components_;
};

/// Globally defined real polynomials phi^1..phi^d (exact, untruncated);
/// dims.k is the order used when jets are taken from it.
struct DefiningPolynomial {
  Dimensions dims;
  std::vector<Series> components;

  /// Truncation at the origin.
  DefiningJet jet_at_origin() const;
};

}  // namespace crnd
