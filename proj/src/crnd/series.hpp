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

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "crnd/matrix.hpp"
#include "crnd/number.hpp"

namespace crnd {

inline constexpr int kMaxVars = 32;

/// Exponent vector over at most kMaxVars variables, with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exps);

  static Monomial unit(int var);

  int exp(int var) const { return exps_[var]; }
  int degree() const { return degree_; }
  void set_exp(int var, int e);

  Monomial operator*(const Monomial& o) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  const std::array<std::uint8_t, kMaxVars>& exps() const { return exps_; }

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  int degree_ = 0;
};

/// Graded lexicographic order: lower total degree first; within a degree,
/// larger exponent of the earlier variable first.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Truncated multivariate power series over Q(i): the coefficients of all
/// monomials of total degree <= order are exact, everything above is
/// discarded. order == kExact marks an exact polynomial (no truncation).
///
/// Zero coefficients are never stored.
class Series {
 public:
  static constexpr int kExact = 1 << 20;
  using Terms = std::map<Monomial, GaussianRational, GradedLex>;

  Series() = default;
  Series(int nvars, int order);

  static Series constant(int nvars, int order, const GaussianRational& c);
  static Series variable(int nvars, int order, int var);
  static Series term(int nvars, int order, const Monomial& m, const GaussianRational& c);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  bool is_exact() const { return order_ >= kExact; }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest stored total degree; -1 for the zero series.
  int degree() const;

  GaussianRational coeff(const Monomial& m) const;
  GaussianRational constant_term() const { return coeff(Monomial{}); }

  /// Adds c * m; drops the term when it exceeds the order.
  void add_term(const Monomial& m, const GaussianRational& c);

  Series truncated(int order) const;
  Series homogeneous_part(int degree) const;
  /// Keeps the terms for which keep(m) is true.
  template <typename Pred>
  Series filtered(Pred keep) const {
    Series out(nvars_, order_);
    for (const auto& [m, c] : terms_) {
      if (keep(m)) out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
  }

  Series derivative(int var) const;
  /// Conjugates the coefficients only; variables are treated as real.
  Series conj_coeffs() const;
  /// Renames variables: variable v of this series becomes variable
  /// var_map[v] in a series with new_nvars variables.
  Series remapped(int new_nvars, std::span<const int> var_map) const;
  /// Sets variable var to zero.
  Series without_var(int var) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const GaussianRational& c);
  Series operator-() const;

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const GaussianRational& c) { return a *= c; }
  friend Series operator*(const GaussianRational& c, Series a) { return a *= c; }
  /// Compares coefficients only; orders may differ.
  friend bool operator==(const Series& a, const Series& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Series pow(int e) const;

  /// Generic "c*x0^2*x1" rendering with the given variable names.
  std::string to_string(std::span<const std::string> names) const;

 private:
  void check_compatible(const Series& o) const;

  int nvars_ = 0;
  int order_ = 0;
  Terms terms_;
};

/// outer(inner_0, ..., inner_{M-1}), truncated at the smallest inner order
/// (and the outer order). Inner series must have zero constant term unless
/// outer is an exact polynomial. Throws InputError on arity mismatch or a
/// nonzero inner constant term.
Series compose(const Series& outer, std::span<const Series> inner);

/// Applies compose componentwise.
std::vector<Series> compose_all(std::span<const Series> outer, std::span<const Series> inner);

/// Jacobian of the linear parts: J(i, j) = coefficient of x_j in f_i,
/// restricted to the variable range [first, first + count).
ComplexMatrix linear_part(std::span<const Series> f, int first, int count);

/// Solves F(u, v(u)) = 0 for v with v(0) = 0. F has n_u + p variables laid
/// out as (u_1..u_{n_u}, v_1..v_p) and p components; the p x p block
/// dF/dv(0) must be invertible (PreconditionError otherwise). Homogeneous
/// layers of v are found one degree at a time, each from the same constant
/// linear block.
std::vector<Series> implicit_solve(std::span<const Series> f, int n_u);

/// Formal inverse of a map R^m -> R^m (or C^m) given by m series in m
/// variables with zero constant term and invertible linear part.
std::vector<Series> invert_map(std::span<const Series> g);

/// Inverse of a square matrix of series whose constant part is invertible.
std::vector<std::vector<Series>> invert_series_matrix(const std::vector<std::vector<Series>>& m);

}  // namespace crnd
