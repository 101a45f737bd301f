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
#include <vector>

#include "crnd/invariants.hpp"
#include "crnd/jet.hpp"

namespace crnd {

/// A vector field on M in the frame (d/dz_1..n, d/dzbar_1..n, d/ds_1..d).
/// All coefficient jets share dims; dims.k is the field's order.
class VectorFieldJet {
 public:
  VectorFieldJet() = default;
  /// Throws InputError unless there are 2n + d coefficients with equal dims.
  explicit VectorFieldJet(std::vector<Jet> coeffs);

  /// The coordinate field d/dx_var at order dims.k.
  static VectorFieldJet coordinate(const Dimensions& dims, int var);

  const Dimensions& dims() const { return dims_; }
  int order() const { return dims_.k; }
  const std::vector<Jet>& coeffs() const { return coeffs_; }
  const Jet& operator[](int slot) const { return coeffs_[slot]; }

  /// X(f); the result has order min(order(), f.k - 1).
  Jet apply(const Jet& f) const;
  /// Coefficients at 0.
  std::vector<GaussianRational> value_at_origin() const;
  /// Complex conjugate field.
  VectorFieldJet conjugate() const;
  /// Truncation to a lower order.
  VectorFieldJet truncated(int order) const;
  bool is_zero() const;

  friend VectorFieldJet operator+(const VectorFieldJet& a, const VectorFieldJet& b);
  friend VectorFieldJet operator-(const VectorFieldJet& a, const VectorFieldJet& b);
  friend VectorFieldJet operator*(const GaussianRational& c, const VectorFieldJet& a);
  friend bool operator==(const VectorFieldJet&, const VectorFieldJet&) = default;

 private:
  Dimensions dims_;
  std::vector<Jet> coeffs_;
};

/// [X, Y] at order min(order X, order Y) - 1. Throws InputError when an
/// input has order < 1.
VectorFieldJet bracket(const VectorFieldJet& x, const VectorFieldJet& y);

struct CrBasis {
  std::vector<VectorFieldJet> l;     // L_1..L_n, order k - 1
  std::vector<VectorFieldJet> lbar;  // conjugates
};

/// L_j = d/dz_j + sum_l a^l d/ds_l with a = (id - i phi_s)^{-1} (i phi_{z_j}).
/// Throws PreconditionError when id - i phi_s(0) is singular.
CrBasis cr_basis(const DefiningJet& phi);

/// L_j(s - i phi), which vanishes through order k - 1 for a correct basis.
std::vector<Jet> tangency_defect(const DefiningJet& phi, const CrBasis& basis);

/// r1(j) = N - dim span { Lbar words of length <= j applied to the rows of
/// rho_Z, at 0 }, j = 1..k-1.
std::vector<int> degeneracy_oracle(const DefiningJet& phi);

/// r2(j) = (2n + d) - dim span { values at 0 of [L_{i1}, [..., [L_{i(l-1)},
/// Lbar_j]...]] for l <= j, and their conjugates }, j = 1..k.
std::vector<int> strong_type_oracle(const DefiningJet& phi);

/// Least l <= k such that brackets of length <= l of {L, Lbar} span the
/// complexified tangent space at 0; empty when no such l exists.
std::optional<int> finite_type_oracle(const DefiningJet& phi);

/// [L_{j1}, [..., [L_{jr}, Lbar_l]...]](0) == -2i phi_{z_{j1}..z_{jr}, zbar_l}(0) d/ds.
/// Indices are 0-based; needs 1 <= r <= k - 1.
bool lemma_ident_check(const DefiningJet& phi, std::span<const int> word, int l);

/// Profile from the vector-field definitions, including finite type.
InvariantProfile oracle_profile(const DefiningJet& phi);

}  // namespace crnd
