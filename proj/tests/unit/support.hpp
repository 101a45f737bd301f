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

// Shared helpers for the unit tests: seeded generators and test-only
// oracles that do not go through the library's own algorithms.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "crnd/jet.hpp"
#include "crnd/matrix.hpp"
#include "crnd/series.hpp"

namespace crnd::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin(int percent) { return uniform(1, 100) <= percent; }

  Rational rational(int max_num = 5, int max_den = 3) {
    Rational q(uniform(-max_num, max_num), uniform(1, max_den));
    q.canonicalize();
    return q;
  }
  GaussianRational gaussian(int max_num = 5, int max_den = 3) {
    return {rational(max_num, max_den), rational(max_num, max_den)};
  }

 private:
  std::mt19937_64 gen_;
};

/// All exponent vectors over nvars variables with total degree <= max_deg.
inline std::vector<Monomial> monomials_up_to(int nvars, int max_deg) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v == nvars) {
      out.emplace_back(e);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      e[v] = x;
      self(self, v + 1, left - x);
    }
    e[v] = 0;
  };
  rec(rec, 0, max_deg);
  return out;
}

/// Random series with roughly `percent`% of the monomials up to the order
/// populated.
inline Series random_series(Rng& rng, int nvars, int order, int percent, bool zero_constant) {
  Series s(nvars, order);
  for (const auto& m : monomials_up_to(nvars, order)) {
    if (zero_constant && m.degree() == 0) continue;
    if (rng.coin(percent)) s.add_term(m, rng.gaussian());
  }
  return s;
}

/// Random real jet: J + conj(J) for a random J.
inline Jet random_real_jet(Rng& rng, const Dimensions& dims, int percent, bool zero_constant) {
  Jet j(dims, random_series(rng, dims.nvars(), dims.k, percent, zero_constant));
  return j + j.conjugate();
}

/// Random real jet with only monomials that contain both z and zbar.
inline Jet random_nonharmonic_jet(Rng& rng, const Dimensions& dims, int percent) {
  Series s(dims.nvars(), dims.k);
  for (const auto& m : monomials_up_to(dims.nvars(), dims.k)) {
    if (z_degree(dims, m) == 0 || zb_degree(dims, m) == 0) continue;
    if (rng.coin(percent)) s.add_term(m, rng.gaussian());
  }
  Jet j(dims, s);
  return j + j.conjugate();
}

/// Textbook Gaussian elimination with Q(i) division; independent of the
/// Bareiss kernel used by rank_exact.
inline int naive_rank(ComplexMatrix m) {
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int p = rank;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
    for (int r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c).is_zero()) continue;
      const GaussianRational f = m(r, c) / m(rank, c);
      for (int j = c; j < m.cols(); ++j) m(r, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

/// Univariate truncated polynomial helpers over Q (coefficient vectors).
using UPoly = std::vector<Rational>;

inline UPoly upoly_mul(const UPoly& a, const UPoly& b, int order) {
  UPoly out(order + 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(order); ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace crnd::testing
