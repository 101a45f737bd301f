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
#include <utility>
#include <vector>

#include "crnd/jet.hpp"
#include "crnd/series.hpp"

namespace crnd {

/// Harmonic monomials have no z or no zbar factor (pure s included).
bool is_harmonic_monomial(const Dimensions& dims, const Monomial& m);
bool is_nonharmonic(const Jet& j);
bool is_nonharmonic(const DefiningJet& phi);

/// (harmonic, nonharmonic) with harmonic + nonharmonic == j.
/// Throws InputError if j is not real.
std::pair<Jet, Jet> split_harmonic(const Jet& j);

struct NormalForm {
  /// w = h(z', w'): d series in the variables (z'_1..z'_n, w'_1..w'_d,
  /// params), all of order dims.k.
  std::vector<Series> h;
  /// Im w' = psi(z', zbar', Re w'), nonharmonic.
  DefiningJet psi;
  /// Whether Im h - phi(z', zbar', Re h) vanished through order k after
  /// substituting w' = s' + i psi.
  bool residual_zero = false;
};

/// Holomorphic change w = h(z', w') removing the harmonic terms of phi.
/// Throws PreconditionError ("not graph-normalizable here") when
/// id + i phi_s(0) is singular, InternalError when a certificate fails.
NormalForm eliminate_harmonic(const DefiningJet& phi);

/// Im h(z', s' + i psi) - phi(z', zbar', Re h(z', s' + i psi)), as d series
/// in the jet variables of phi.
std::vector<Series> substitution_residual(const DefiningJet& phi, std::span<const Series> h,
                                          const DefiningJet& psi);

/// Inverse direction: rebuilds phi from its harmonic part and psi. Only the
/// harmonic part enters h, so this is a consistency check on the pair.
DefiningJet reconstruct_phi(const std::vector<Jet>& harmonic, const DefiningJet& psi);

/// The defining jet at a point of the graph Im w = phi_global. The point's
/// coordinates are given by `shift`: 2n + d series (z_0, conj z_0, s_0) in
/// the variables of `target` (numbers for an ordinary point, or expressions
/// in the parameter variables for a symbolic one). Terms free of
/// (z, zbar, s) are dropped, which moves the point to the origin.
DefiningJet recentre(const DefiningPolynomial& phi_global, const Dimensions& target,
                     std::span<const Series> shift);

/// Ordinary point (z0, s0).
DefiningJet recentre(const DefiningPolynomial& phi_global, std::span<const GaussianRational> z0,
                     std::span<const Rational> s0);

/// k-jet at a point of a real embedding R^m -> C^N: N complex series in m
/// real variables. The constant terms are the image of the point.
struct EmbeddingJet {
  Dimensions dims;
  std::vector<Series> components;
};

/// Z'_j = (times_i[j] ? i : 1) * (Z_{permutation[j]} - offset[permutation[j]]).
/// The first n of the new coordinates are z, the last d are w.
struct ChartTransform {
  std::vector<int> permutation;
  std::vector<bool> times_i;
  std::vector<GaussianRational> offset;

  std::vector<GaussianRational> apply(std::span<const GaussianRational> point) const;
  bool is_identity() const;
};

struct GraphChart {
  ChartTransform chart;
  /// Real parametrization (Re z', Im z', Re w') of the image, m series.
  std::vector<Series> g1;
  DefiningJet phi;
};

/// First chart (permutations in lexicographic order, then multiplier masks
/// in increasing order) in which the image is a graph Im w = phi with
/// id + i phi_s(0) invertible. Throws PreconditionError if none works.
GraphChart graph_extract(const EmbeddingJet& g);

/// The embedding x + iy -> (z, s + i phi(z, zbar, s)) of a graph.
EmbeddingJet graph_embedding(const DefiningJet& phi);

/// Real-variable form of a series in (z, zbar, s): z = x + iy.
Series to_real_coordinates(const Dimensions& dims, const Series& s);
/// Inverse of to_real_coordinates.
Series to_complex_coordinates(const Dimensions& dims, const Series& s);

struct SplitJet {
  std::vector<GaussianRational> base_point;  // Psi_1
  ChartTransform chart;
  std::vector<Series> param_jet;   // Psi_2
  std::vector<Jet> harmonic_part;  // Psi_3
  DefiningJet nonharmonic_part;    // Psi_4
};

SplitJet psi_map(const EmbeddingJet& g);

}  // namespace crnd
