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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crnd/jet.hpp"
#include "crnd/matrix.hpp"

namespace crnd {

/// Multi-indices of length n with lo <= |alpha| <= hi, by degree and then
/// in decreasing lexicographic order.
std::vector<std::vector<int>> multi_indices(int n, int lo, int hi);

/// Binomial coefficient C(a, b) (0 when b < 0 or b > a).
std::int64_t binomial(int a, int b);

/// Rows psi^c_{z, zbar^alpha}(0) for c = 1..d and 1 <= |alpha| <= j
/// (component-major); n columns. Requires a nonharmonic psi, 1 <= j <= k-1.
ComplexMatrix build_matrix_A(const DefiningJet& psi, int j);

struct BMatrices {
  /// Rows psi_{z^alpha, zbar_r}(0) in C^d, 1 <= r <= n, 1 <= |alpha| <= j-1,
  /// followed by their conjugates.
  ComplexMatrix b;
  /// Real form: Re/Im rows for |alpha| > 1, the n^2 independent real rows
  /// for |alpha| = 1.
  ComplexMatrix b_real;
};

/// Requires a nonharmonic psi, 1 <= j <= k. For j = 1 both matrices are
/// empty.
BMatrices build_matrix_B(const DefiningJet& psi, int j);

/// r1(j) = n - rank A(j), j = 1..k-1.
std::vector<int> degeneracy_sequence(const DefiningJet& psi);
/// r2(j) = d - rank B(j), j = 1..k.
std::vector<int> defect_sequence(const DefiningJet& psi);

/// 1-based index of the first zero, if any.
std::optional<int> first_zero(const std::vector<int>& seq);

struct InvariantProfile {
  Dimensions dims;
  std::vector<int> r1;  // j = 1..k-1
  std::vector<int> r2;  // j = 1..k
  std::optional<int> nondeg_order;
  std::optional<int> strong_type;
  /// Empty when undetermined within order k or not computed.
  std::optional<int> finite_type;
  bool finite_type_computed = false;

  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

/// Matrix-path profile of a nonharmonic jet (finite type left uncomputed).
InvariantProfile invariant_profile(const DefiningJet& psi);

/// Levi forms H_l(q, r) = psi^l_{z_q, zbar_r}(0), l = 1..d.
std::vector<ComplexMatrix> levi_forms(const DefiningJet& psi);

/// det(b_1 H_1 + ... + b_d H_d) as an exact polynomial in d variables.
Series levi_pencil_determinant(const DefiningJet& psi);

struct BoundConstants {
  int k1 = 0;
  int k2 = 0;
  int k2_prime = 0;
};

/// Requires 2 <= N < m < 2N.
BoundConstants bound_constants(int m, int big_n);

std::int64_t codim_A_r(int n, int d, int k, int r);
std::int64_t minuses(int n, int d, int k);
std::int64_t codim_B_r(int n, int d, int k, int r);
std::int64_t pluses(int n, int d, int k);
std::int64_t k_double_prime(int n, int k);

/// Real codimension of {A = 0} in the nonharmonic k-jets, counted as the
/// rank of the real-linear map from a real basis of that space to the
/// real and imaginary parts of the entries of A.
int brute_force_codim_A0(int n, int d, int k);

enum class StratumFamily { kA, kB, kWPrime, kWDoublePrime };

struct StratumDescriptor {
  StratumFamily family;
  int n = 0, d = 0, k = 0;
  int index = 0;  // r for A/B, e for W', W''
  std::int64_t codim = 0;

  std::string name() const;
};

/// A_r, B_r by rank; W'_{p,e} = A_{n-e}, W''_{p,e} = B_{d-e} by deficiency.
StratumDescriptor stratum(StratumFamily family, int n, int d, int k, int index);

}  // namespace crnd
