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
#include "crnd/genericity.hpp"
#include "crnd/normalform.hpp"
#include "unit/support.hpp"

using namespace crnd;

namespace {

const GaussianRational I = GaussianRational::i();

Series pvar(const Dimensions& dm, int v) { return Series::variable(dm.nvars(), Series::kExact, v); }

DefiningPolynomial poly1(const Series& s) { return {Dimensions{1, 1, 4, 0}, {s}}; }

DefiningPolynomial cubic_levi_poly() {
  const Dimensions dm{1, 1, 4, 0};
  const Series z = pvar(dm, 0), zb = pvar(dm, 1), s = pvar(dm, 2);
  return poly1(z.pow(3) * zb + z * zb.pow(3) + z * zb * s);
}

Series zzb() {
  const Dimensions dm{1, 1, 4, 0};
  return pvar(dm, 0) * pvar(dm, 1);
}

// (psi_{z zbar}, Re psi_{z^2 zbar}, Im psi_{z^2 zbar}) at (x + iy, s).
std::vector<Rational> mu_components(const DefiningPolynomial& phi, const Rational& x,
                                    const Rational& y, const Rational& s) {
  DefiningPolynomial p = phi;
  p.dims.k = 3;
  const std::vector<GaussianRational> z0{GaussianRational(x, y)};
  const std::vector<Rational> s0{s};
  const DefiningJet psi = eliminate_harmonic(recentre(p, z0, s0)).psi;
  const std::vector<int> a1{1}, a2{2}, b1{1}, g{0};
  const GaussianRational c11 = psi[0].coeff(a1, b1, g);
  const GaussianRational c21 = psi[0].coeff(a2, b1, g) * GaussianRational(2);
  return {c11.re(), c21.re(), c21.im()};
}

// Exact difference quotients with a small step; generic steps keep the rank
// of the derivative.
int mu_rank_by_differences(const DefiningPolynomial& phi) {
  const Rational h(1, 1000003);
  const auto base = mu_components(phi, 0, 0, 0);
  std::vector<std::vector<Rational>> cols{mu_components(phi, h, 0, 0), mu_components(phi, 0, h, 0),
                                          mu_components(phi, 0, 0, h)};
  ComplexMatrix m(3, 3);
  for (int p = 0; p < 3; ++p) {
    for (int r = 0; r < 3; ++r) m(r, p) = GaussianRational((cols[p][r] - base[r]) / h);
  }
  return crnd::testing::naive_rank(m);
}

int count_nonharmonic_monomials(const Dimensions& dm) {
  int count = 0;
  for (const auto& m : crnd::testing::monomials_up_to(dm.nvars(), dm.k)) {
    if (z_degree(dm, m) > 0 && zb_degree(dm, m) > 0) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("sample_jet is deterministic, dense and nonharmonic") {
  const Dimensions dm{2, 2, 3, 0};
  const DefiningJet a = sample_jet(dm, 42);
  CHECK(a == sample_jet(dm, 42));
  CHECK_FALSE(a == sample_jet(dm, 43));
  CHECK(is_nonharmonic(a));
  for (int c = 0; c < dm.d; ++c) {
    CHECK(static_cast<int>(a[c].series().terms().size()) == count_nonharmonic_monomials(dm));
    for (const auto& [m, coef] : a[c].series().terms()) {
      bool diagonal = true;
      for (int i = 0; i < dm.n; ++i) diagonal = diagonal && m.exp(dm.z(i)) == m.exp(dm.zb(i));
      CHECK(sgn(coef.re()) != 0);
      CHECK((sgn(coef.im()) != 0) == !diagonal);
      for (const Rational& q : {coef.re(), coef.im()}) {
        if (sgn(q) == 0) continue;
        CHECK(abs(q.get_num()) <= 16);
        CHECK(q.get_den() <= 8);
      }
    }
  }
}

TEST_CASE("sampled Levi forms never vanish") {
  const Dimensions dm{1, 1, 2, 0};
  int nonzero = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const std::vector<int> a{1}, b{1}, g{0};
    if (!sample_jet(dm, seed)[0].coeff(a, b, g).is_zero()) ++nonzero;
  }
  CHECK(nonzero == 1000);
}

TEST_CASE("stratum witnesses have the requested rank") {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 2; ++d) {
      for (int k = 2; k <= 4; ++k) {
        const Dimensions dm{n, d, k, 0};
        for (int r = 0; r <= n; ++r) {
          const DefiningJet w = stratum_witness(dm, r);
          CHECK(is_nonharmonic(w));
          CHECK(crnd::testing::naive_rank(build_matrix_A(w, k - 1)) == r);
        }
      }
    }
  }
  CHECK(stratum_witness(Dimensions{2, 1, 2, 0}, 1)[0] ==
        Jet::z(Dimensions{2, 1, 2, 0}, 0) * Jet::zb(Dimensions{2, 1, 2, 0}, 0));
  CHECK_THROWS_AS(stratum_witness(Dimensions{2, 1, 2, 0}, 3), InputError);
  CHECK_THROWS_AS(stratum_witness(Dimensions{2, 1, 2, 0}, -1), InputError);
}

TEST_CASE("closure perturbations reach the target rank") {
  const Dimensions dm{2, 1, 3, 0};
  const auto eps = default_eps_schedule();
  REQUIRE(eps.size() == 8);
  CHECK(eps.front() == Rational(1, 2));
  CHECK(eps.back() == Rational(1, 256));

  ClosureRecord r = closure_perturb(DefiningJet::zero(dm), 2);
  CHECK(r.ok);
  CHECK(r.base_rank == 0);
  CHECK(r.ranks == std::vector<int>(8, 2));

  r = closure_perturb(stratum_witness(dm, 1), 2);
  CHECK(r.ok);
  CHECK(r.base_rank == 1);

  r = closure_perturb(stratum_witness(dm, 1), 1);
  CHECK(r.ok);
  CHECK(r.ranks == std::vector<int>(8, 1));

  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 2; ++d) {
      const Dimensions dd{n, d, 3, 0};
      for (int c = 0; c < n; ++c) {
        for (int t = c + 1; t <= n; ++t) CHECK(closure_perturb(stratum_witness(dd, c), t).ok);
      }
    }
  }

  const DefiningJet off(std::vector<Jet>{Jet::z(dm, 1) * Jet::zb(dm, 1)});
  CHECK_THROWS_AS(closure_perturb(off, 2), PreconditionError);
  CHECK_THROWS_AS(closure_perturb(stratum_witness(dm, 2), 1), InputError);
}

TEST_CASE("basepoint lattice") {
  const std::vector<Rational> v{Rational(-1, 4), Rational(0), Rational(1, 4)};
  const auto pts = basepoint_lattice(1, 1, v);
  REQUIRE(pts.size() == 27);
  CHECK(pts.front().z[0] == GaussianRational(Rational(-1, 4), Rational(-1, 4)));
  CHECK(pts.front().s[0] == Rational(-1, 4));
  CHECK(pts[1].s[0] == Rational(0));
  CHECK(pts.back().z[0] == GaussianRational(Rational(1, 4), Rational(1, 4)));
  CHECK(basepoint_lattice(2, 1, v).size() == 243);
}

TEST_CASE("deformation of the flat graph by z zbar") {
  const Dimensions dm{1, 1, 3, 0};
  DeformationFamily fam;
  fam.base = {dm, {Series(dm.nvars(), Series::kExact)}};
  fam.direction = {zzb()};
  fam.t_grid = {Rational(0), Rational(1, 3), Rational(-2), Rational(5, 7)};
  fam.basepoints = basepoint_lattice(1, 1, {Rational(-1, 4), Rational(0), Rational(1, 4)});
  const SweepReport rep = deform_sweep(fam, 3, 4);
  REQUIRE(rep.entries.size() == 4 * 27);
  CHECK(rep.chart_failures == 0);
  for (const auto& e : rep.entries) {
    REQUIRE(e.profile.has_value());
    if (e.is_base) {
      CHECK(e.profile->r1 == std::vector<int>{1, 1});
      CHECK(e.profile->r2 == std::vector<int>{1, 1, 1});
    } else {
      CHECK(e.profile->nondeg_order == 1);
      CHECK(e.profile->strong_type == 2);
    }
  }
  CHECK(rep.degenerate == 27);
  CHECK(rep.non_strong_type == 27);

  const SweepReport serial = deform_sweep(fam, 3, 1);
  REQUIRE(serial.entries.size() == rep.entries.size());
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    CHECK(serial.entries[i].t == rep.entries[i].t);
    CHECK(serial.entries[i].basepoint == rep.entries[i].basepoint);
    CHECK(serial.entries[i].profile == rep.entries[i].profile);
  }
}

TEST_CASE("deformation of the quartic gains strong type 2") {
  const Dimensions dm{1, 1, 4, 0};
  DeformationFamily fam;
  fam.base = {dm, {zzb().pow(2)}};
  fam.direction = {zzb()};
  fam.t_grid = {Rational(1, 2), Rational(-3)};
  fam.basepoints = {Basepoint{{GaussianRational(0)}, {Rational(0)}}};
  const SweepReport rep = deform_sweep(fam, 4);
  for (const auto& e : rep.entries) CHECK(e.profile->strong_type == 2);
  // Two nonzero t give the same profile.
  CHECK(rep.entries[0].profile == rep.entries[1].profile);

  fam.direction = {Series(dm.nvars(), Series::kExact)};
  fam.basepoints = basepoint_lattice(1, 1, {Rational(0), Rational(1, 3)});
  const SweepReport flat = deform_sweep(fam, 4);
  for (const auto& e : flat.entries) {
    const DefiningJet phi = recentre(DefiningPolynomial{Dimensions{1, 1, 4, 0}, fam.base.components},
                                     e.basepoint.z, e.basepoint.s);
    CHECK(e.profile == invariant_profile(eliminate_harmonic(phi).psi));
  }
}

TEST_CASE("transversality rank") {
  CHECK(mu_transversality_rank(cubic_levi_poly()) == 3);
  CHECK(mu_rank_by_differences(cubic_levi_poly()) == 3);
  CHECK(mu_transversality_rank(poly1(zzb())) == 0);
  CHECK(mu_rank_by_differences(poly1(zzb())) == 0);
  // At z0 the z^2 zbar coefficient of |z + z0|^4 is 2 conj(z0): rank 2.
  CHECK(mu_transversality_rank(poly1(zzb().pow(2))) == 2);
  CHECK(mu_rank_by_differences(poly1(zzb().pow(2))) == 2);
  CHECK_THROWS_AS(mu_transversality_rank(DefiningPolynomial{Dimensions{2, 1, 3, 0}, {}}), InputError);
}

TEST_CASE("genericity trials") {
  const TrialSummary a = genericity_trial(Dimensions{1, 1, 2, 0}, 300, 7);
  CHECK(a.samples == 300);
  CHECK(a.bad == 0);
  const TrialSummary b = genericity_trial(Dimensions{2, 2, 2, 0}, 300, 7);
  CHECK(b.degenerate == 0);
  CHECK(b.bad == 0);
  const TrialSummary empty = genericity_trial(Dimensions{1, 1, 2, 0}, 0, 7);
  CHECK(empty.samples == 0);
  CHECK(empty.bad == 0);
  CHECK(task_seed(7, 0) != task_seed(7, 1));
  CHECK(task_seed(7, 0) != task_seed(8, 0));
}
