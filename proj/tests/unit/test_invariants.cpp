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

#include "doctest.h"

#include "crnd/error.hpp"
#include "crnd/invariants.hpp"
#include "crnd/normalform.hpp"
#include "unit/support.hpp"

using namespace crnd;
using crnd::testing::Rng;

namespace {

const GaussianRational I = GaussianRational::i();

DefiningJet single(const Jet& j) { return DefiningJet(std::vector<Jet>{j}); }

DefiningJet quadric(int k) {
  const Dimensions dm{1, 1, k, 0};
  return single(Jet::z(dm, 0) * Jet::zb(dm, 0));
}

DefiningJet cubic_levi(int k) {
  const Dimensions dm{1, 1, k, 0};
  const Jet z = Jet::z(dm, 0), zb = Jet::zb(dm, 0), s = Jet::s(dm, 0);
  return single(z * z * z * zb + z * zb * zb * zb + z * zb * s);
}

DefiningJet quartic(int k) {
  const Dimensions dm{1, 1, k, 0};
  const Jet z = Jet::z(dm, 0), zb = Jet::zb(dm, 0);
  return single(z * z * zb * zb);
}

DefiningJet null_quadric(int k) {
  const Dimensions dm{3, 2, k, 0};
  auto z = [&](int i) { return Jet::z(dm, i); };
  auto zb = [&](int i) { return Jet::zb(dm, i); };
  const Jet p1 = z(0) * zb(0) - z(1) * zb(1);
  const Jet p2 = z(0) * zb(2) + z(2) * zb(0) + z(1) * zb(2) + z(2) * zb(1);
  return DefiningJet(std::vector<Jet>{p1, p2});
}

ComplexMatrix column(std::initializer_list<long> v) {
  ComplexMatrix m(static_cast<int>(v.size()), 1);
  int r = 0;
  for (long x : v) m(r++, 0) = GaussianRational(x);
  return m;
}

// psi(T z, conj(T) zbar, s) for an invertible complex matrix T.
DefiningJet linear_change(const DefiningJet& psi, const ComplexMatrix& t) {
  const Dimensions& dm = psi.dims();
  const int nv = dm.nvars();
  std::vector<Series> inner;
  for (int v = 0; v < nv; ++v) inner.push_back(Series::variable(nv, dm.k, v));
  for (int i = 0; i < dm.n; ++i) {
    Series zi(nv, dm.k), zbi(nv, dm.k);
    for (int j = 0; j < dm.n; ++j) {
      zi += t(i, j) * Series::variable(nv, dm.k, dm.z(j));
      zbi += t(i, j).conj() * Series::variable(nv, dm.k, dm.zb(j));
    }
    inner[dm.z(i)] = zi;
    inner[dm.zb(i)] = zbi;
  }
  std::vector<Jet> comps;
  for (const auto& c : psi.components()) comps.emplace_back(dm, compose(c.series(), inner));
  return DefiningJet(comps);
}

}  // namespace

TEST_CASE("multi-index enumeration and binomials") {
  CHECK(multi_indices(2, 1, 2) ==
        std::vector<std::vector<int>>{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
  CHECK(multi_indices(3, 0, 3).size() == static_cast<std::size_t>(binomial(6, 3)));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("matrix A examples") {
  CHECK(build_matrix_A(quadric(2), 1) == column({1}));
  CHECK(build_matrix_A(cubic_levi(4), 3) == column({0, 0, 6}));
  CHECK(build_matrix_A(quartic(4), 3) == column({0, 0, 0}));
  CHECK_THROWS_AS(build_matrix_A(quadric(2), 2), InputError);
  const Dimensions dm{1, 1, 3, 0};
  CHECK_THROWS_AS(build_matrix_A(single(Jet::z(dm, 0) + Jet::zb(dm, 0)), 1), InputError);
}

TEST_CASE("degeneracy profile examples") {
  CHECK(degeneracy_sequence(quadric(2)) == std::vector<int>{0});
  CHECK(first_zero(degeneracy_sequence(quadric(2))) == 1);

  const auto r1 = degeneracy_sequence(cubic_levi(4));
  CHECK(r1 == std::vector<int>{1, 1, 0});
  CHECK(first_zero(r1) == 3);

  const auto q = degeneracy_sequence(quartic(6));
  CHECK(q == std::vector<int>(5, 1));
  CHECK_FALSE(first_zero(q).has_value());
}

TEST_CASE("matrix B examples") {
  const BMatrices bq = build_matrix_B(quadric(2), 2);
  CHECK(bq.b == column({1, 1}));
  CHECK(rank_exact(bq.b) == 1);

  for (int j = 1; j <= 5; ++j) {
    const BMatrices b4 = build_matrix_B(quartic(5), j);
    CHECK(b4.b.is_zero());
    CHECK(rank_exact(b4.b) == 0);
  }

  const BMatrices nq = build_matrix_B(null_quadric(2), 2);
  CHECK(rank_exact(nq.b) == 2);
  CHECK(nq.b_real.rows() == k_double_prime(3, 2));

  // j = 1: empty
  CHECK(build_matrix_B(quadric(2), 1).b.rows() == 0);
}

TEST_CASE("defect profile examples") {
  const auto rq = defect_sequence(quadric(2));
  CHECK(rq == std::vector<int>{1, 0});
  CHECK(first_zero(rq) == 2);

  const auto r4 = defect_sequence(quartic(6));
  CHECK(r4 == std::vector<int>(6, 1));

  const auto rn = defect_sequence(null_quadric(2));
  CHECK(rn == std::vector<int>{2, 0});

  // The first nonzero row appears at |alpha| = 3.
  CHECK(defect_sequence(cubic_levi(4)) == std::vector<int>{1, 1, 1, 0});
}

TEST_CASE("null quadric: full rank A, degenerate pencil") {
  const DefiningJet nq = null_quadric(2);
  CHECK(rank_exact(build_matrix_A(nq, 1)) == 3);
  CHECK(levi_pencil_determinant(nq).is_zero());
  // A nondegenerate form has a nonzero pencil determinant.
  CHECK_FALSE(levi_pencil_determinant(quadric(2)).is_zero());
}

TEST_CASE("B and its real reduction have the same rank") {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const Dimensions dm{1 + trial % 3, 1 + (trial / 3) % 2, 2 + trial % 3, 0};
    std::vector<Jet> comps;
    for (int c = 0; c < dm.d; ++c) {
      comps.push_back(crnd::testing::random_nonharmonic_jet(rng, dm, trial % 2 ? 15 : 40));
    }
    const DefiningJet psi(comps);
    for (int j = 1; j <= dm.k; ++j) {
      const BMatrices b = build_matrix_B(psi, j);
      CHECK(rank_exact(b.b) == rank_exact(b.b_real));
      CHECK(rank_exact(b.b) == crnd::testing::naive_rank(b.b));
      if (j == dm.k) CHECK(b.b_real.rows() == k_double_prime(dm.n, dm.k));
    }
  }
}

TEST_CASE("profiles are invariant under linear changes of z") {
  Rng rng(41);
  int checked = 0;
  for (int trial = 0; trial < 16; ++trial) {
    const Dimensions dm{2, 1 + trial % 2, 3, 0};
    std::vector<Jet> comps;
    for (int c = 0; c < dm.d; ++c) comps.push_back(crnd::testing::random_nonharmonic_jet(rng, dm, 20));
    const DefiningJet psi(comps);
    ComplexMatrix t(dm.n, dm.n);
    for (int i = 0; i < dm.n; ++i)
      for (int j = 0; j < dm.n; ++j) t(i, j) = rng.gaussian();
    if (determinant(t).is_zero()) continue;
    const DefiningJet moved = eliminate_harmonic(linear_change(psi, t)).psi;
    CHECK(invariant_profile(moved) == invariant_profile(psi));
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("the same manifold in polluted coordinates normalizes back") {
  // reconstruct_phi(eta, psi) describes the manifold Im w' = psi after the
  // holomorphic change built from eta.
  Rng rng(43);
  for (int trial = 0; trial < 12; ++trial) {
    const Dimensions dm{1 + trial % 2, 1 + (trial / 2) % 2, 3, 0};
    std::vector<Jet> nh, eta;
    for (int c = 0; c < dm.d; ++c) {
      nh.push_back(crnd::testing::random_nonharmonic_jet(rng, dm, 30));
      eta.push_back(split_harmonic(crnd::testing::random_real_jet(rng, dm, 30, true)).first);
    }
    const DefiningJet psi(nh);
    if (!DefiningJet(eta).graph_invertible()) continue;
    const DefiningJet phi = reconstruct_phi(eta, psi);
    const DefiningJet back = eliminate_harmonic(phi).psi;
    CHECK(back == psi);
    CHECK(invariant_profile(back) == invariant_profile(psi));
  }
}

TEST_CASE("harmonic additions leave generic profiles unchanged") {
  Rng rng(44);
  for (int trial = 0; trial < 12; ++trial) {
    const Dimensions dm{1 + trial % 2, 1 + (trial / 2) % 2, 3, 0};
    std::vector<Jet> base, polluted;
    for (int c = 0; c < dm.d; ++c) {
      const Jet nh = crnd::testing::random_nonharmonic_jet(rng, dm, 100);
      const Jet eta = split_harmonic(crnd::testing::random_real_jet(rng, dm, 100, true)).first;
      base.push_back(nh);
      polluted.push_back(nh + eta);
    }
    const DefiningJet phi(base), phi_eta(polluted);
    if (!phi_eta.graph_invertible()) continue;
    CHECK(invariant_profile(eliminate_harmonic(phi).psi) ==
          invariant_profile(eliminate_harmonic(phi_eta).psi));
  }
}

TEST_CASE("harmonic additions can change a degenerate manifold") {
  // Im w = |z|^2 Re w is degenerate at 0; adding Re z bends it into a
  // 2-nondegenerate hypersurface.
  const Dimensions dm{1, 1, 3, 0};
  const Jet z = Jet::z(dm, 0), zb = Jet::zb(dm, 0), s = Jet::s(dm, 0);
  const DefiningJet phi = single(z * zb * s);
  const DefiningJet bent = single(z * zb * s + GaussianRational(Rational(1, 2)) * (z + zb));
  CHECK(degeneracy_sequence(eliminate_harmonic(phi).psi) == std::vector<int>{1, 1});
  CHECK(degeneracy_sequence(eliminate_harmonic(bent).psi) == std::vector<int>{1, 0});
}

TEST_CASE("bound constants") {
  const BoundConstants b32 = bound_constants(3, 2);
  CHECK(b32.k1 == 3);
  CHECK(b32.k2 == 4);
  CHECK(b32.k2_prime == 4);
  CHECK(bound_constants(5, 3).k2 == 3);
  CHECK(bound_constants(7, 5).k1 == 2);
  CHECK(bound_constants(7, 4).k1 == 2);
  CHECK(bound_constants(8, 5).k1 == 2);
  CHECK(bound_constants(8, 6).k1 == 1);
  for (int big_n = 4; big_n <= 10; ++big_n) CHECK(bound_constants(2 * big_n - 1, big_n).k2 == 2);
  CHECK_THROWS_AS(bound_constants(4, 2), InputError);
  CHECK_THROWS_AS(bound_constants(2, 2), InputError);
}

TEST_CASE("codimension formulas") {
  CHECK(codim_A_r(1, 1, 3, 0) == 3);
  CHECK(codim_A_r(1, 1, 4, 0) == 5);
  CHECK(minuses(1, 1, 3) == 3);
  CHECK(codim_B_r(1, 1, 2, 0) == 1);
  CHECK(codim_A_r(2, 1, 3, 2) == 0);
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d)
      for (int k = 2; k <= 6; ++k) {
        CHECK(minuses(n, d, k) == codim_A_r(n, d, k, n - 1));
        CHECK(pluses(n, d, k) == codim_B_r(n, d, k, d - 1));
      }
  CHECK_THROWS_AS(codim_A_r(1, 1, 3, 2), InputError);
  CHECK_THROWS_AS(codim_B_r(1, 1, 3, -1), InputError);
  CHECK(stratum(StratumFamily::kWPrime, 1, 1, 3, 1).codim == 3);
  CHECK(stratum(StratumFamily::kWDoublePrime, 2, 2, 3, 1).codim == pluses(2, 2, 3));
}

TEST_CASE("brute-force codimension of A_0") {
  CHECK(brute_force_codim_A0(1, 1, 3) == 3);
  CHECK(brute_force_codim_A0(1, 1, 4) == 5);
  CHECK(brute_force_codim_A0(2, 1, 3) == codim_A_r(2, 1, 3, 0));
  CHECK(brute_force_codim_A0(1, 2, 3) == codim_A_r(1, 2, 3, 0));
}

TEST_CASE("strong type with n = 1 respects the row count of B'") {
  Rng rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const Dimensions dm{1, 1 + trial % 3, 2 + trial % 3, 0};
    std::vector<Jet> comps;
    for (int c = 0; c < dm.d; ++c) comps.push_back(crnd::testing::random_nonharmonic_jet(rng, dm, 60));
    const auto st = first_zero(defect_sequence(DefiningJet(comps)));
    if (st) CHECK(dm.d <= k_double_prime(1, *st));
  }
}
