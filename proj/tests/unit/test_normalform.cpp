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
#include "crnd/normalform.hpp"
#include "unit/support.hpp"

using namespace crnd;
using crnd::testing::Rng;

namespace {

const GaussianRational I = GaussianRational::i();

Dimensions dims(int n, int d, int k) { return Dimensions{n, d, k, 0}; }

DefiningJet single(const Jet& j) { return DefiningJet(std::vector<Jet>{j}); }

// Test-side residual: builds Im h(z, s + i psi) - phi(z, zbar, Re h(...))
// through the Jet API rather than the library's residual routine.
bool residual_is_zero(const DefiningJet& phi, const NormalForm& nf) {
  const Dimensions& dm = phi.dims();
  const int nv = dm.nvars();
  std::vector<Series> inner_h;
  for (int i = 0; i < dm.n; ++i) inner_h.push_back(Jet::z(dm, i).series());
  for (int j = 0; j < dm.d; ++j) inner_h.push_back((Jet::s(dm, j) + I * nf.psi[j]).series());
  std::vector<Jet> re, im;
  for (int j = 0; j < dm.d; ++j) {
    const Jet hw(dm, compose(nf.h[j], inner_h));
    re.push_back(hw.real_part());
    im.push_back(hw.imag_part());
  }
  std::vector<Series> inner_phi;
  for (int v = 0; v < 2 * dm.n; ++v) inner_phi.push_back(Series::variable(nv, dm.k, v));
  for (int j = 0; j < dm.d; ++j) inner_phi.push_back(re[j].series());
  for (int j = 0; j < dm.d; ++j) {
    if (!(im[j] - Jet(dm, compose(phi[j].series(), inner_phi))).is_zero()) return false;
  }
  return true;
}

Jet random_phi_component(Rng& rng, const Dimensions& dm) {
  return crnd::testing::random_real_jet(rng, dm, 25, true);
}

}  // namespace

TEST_CASE("split_harmonic examples") {
  const Dimensions dm = dims(1, 1, 3);
  const Jet z = Jet::z(dm, 0), zb = Jet::zb(dm, 0), s = Jet::s(dm, 0);
  const Jet re_z2 = GaussianRational(Rational(1, 2)) * (z * z + zb * zb);

  auto [h, nh] = split_harmonic(re_z2 + z * zb);
  CHECK(h == re_z2);
  CHECK(nh == z * zb);

  std::tie(h, nh) = split_harmonic(s * s);
  CHECK(h == s * s);
  CHECK(nh.is_zero());

  std::tie(h, nh) = split_harmonic(z * zb * s);
  CHECK(h.is_zero());
  CHECK(nh == z * zb * s);

  CHECK_THROWS_AS(split_harmonic(I * z * zb), InputError);
}

TEST_CASE("split_harmonic is additive and idempotent") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Dimensions dm = dims(1 + trial % 2, 1 + (trial / 2) % 2, 4);
    const Jet j = crnd::testing::random_real_jet(rng, dm, 30, false);
    const auto [h, nh] = split_harmonic(j);
    CHECK(h + nh == j);
    CHECK(is_nonharmonic(nh));
    CHECK(split_harmonic(h).first == h);
    CHECK(split_harmonic(nh).second == nh);
  }
}

TEST_CASE("eliminate_harmonic examples") {
  const Dimensions dm = dims(1, 1, 3);
  const Jet z = Jet::z(dm, 0), zb = Jet::zb(dm, 0);
  const Series zp = Series::variable(2, 3, 0), wp = Series::variable(2, 3, 1);

  {
    const DefiningJet phi = single(z * zb);
    const NormalForm nf = eliminate_harmonic(phi);
    CHECK(nf.h[0] == wp);
    CHECK(nf.psi == phi);
    CHECK(nf.residual_zero);
  }
  {
    const DefiningJet phi = single(GaussianRational(Rational(1, 2)) * (z + zb));
    const NormalForm nf = eliminate_harmonic(phi);
    CHECK(nf.h[0] == wp + I * zp);
    CHECK(nf.psi[0].is_zero());
    CHECK(residual_is_zero(phi, nf));
  }
  {
    const DefiningJet phi = single(GaussianRational(Rational(1, 2)) * (z * z + zb * zb));
    const NormalForm nf = eliminate_harmonic(phi);
    CHECK(nf.h[0] == wp + I * zp * zp);
    CHECK(nf.psi[0].is_zero());
    CHECK(residual_is_zero(phi, nf));
  }
}

TEST_CASE("eliminate_harmonic rejects a singular graph matrix") {
  // phi = (s2, -s1): id + i*phi_s = [[1, i], [-i, 1]] is singular.
  const Dimensions dm = dims(1, 2, 3);
  const DefiningJet phi(std::vector<Jet>{Jet::s(dm, 1), -Jet::s(dm, 0)});
  CHECK_FALSE(phi.graph_invertible());
  CHECK_THROWS_AS(eliminate_harmonic(phi), PreconditionError);
}

TEST_CASE("eliminate_harmonic certificates on a random polluted corpus") {
  Rng rng(2024);
  int solved = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const Dimensions dm = dims(1 + trial % 2, 1 + (trial / 2) % 2, 3 + trial % 2);
    std::vector<Jet> comps;
    for (int j = 0; j < dm.d; ++j) comps.push_back(random_phi_component(rng, dm));
    const DefiningJet phi(comps);
    if (!phi.graph_invertible()) {
      CHECK_THROWS_AS(eliminate_harmonic(phi), PreconditionError);
      continue;
    }
    const NormalForm nf = eliminate_harmonic(phi);
    CHECK(is_nonharmonic(nf.psi));
    CHECK(nf.residual_zero);
    CHECK(residual_is_zero(phi, nf));

    // On the w'-axis: h(0, s) = s + i phi(0, 0, s).
    const int hv = dm.n + dm.d;
    std::vector<Series> axis(hv, Series(hv, dm.k));
    for (int j = 0; j < dm.d; ++j) axis[dm.n + j] = Series::variable(hv, dm.k, dm.n + j);
    std::vector<Series> phi_axis(dm.nvars(), Series(hv, dm.k));
    for (int j = 0; j < dm.d; ++j) phi_axis[dm.s(j)] = Series::variable(hv, dm.k, dm.n + j);
    for (int j = 0; j < dm.d; ++j) {
      CHECK(compose(nf.h[j], axis) ==
            Series::variable(hv, dm.k, dm.n + j) + I * compose(phi[j].series(), phi_axis));
    }

    // Psi_3 alone determines h; with psi it gives phi back.
    std::vector<Jet> harmonic;
    for (const auto& c : phi.components()) harmonic.push_back(split_harmonic(c).first);
    CHECK(reconstruct_phi(harmonic, nf.psi) == phi);
    ++solved;
  }
  CHECK(solved >= 25);
}

TEST_CASE("recentre examples") {
  const Dimensions dm = dims(1, 1, 3);
  Series zzb(dm.nvars(), Series::kExact);
  zzb.add_term(Monomial::unit(dm.z(0)) * Monomial::unit(dm.zb(0)), GaussianRational(1));
  const DefiningPolynomial quad{dm, {zzb}};
  const Jet z = Jet::z(dm, 0), zb = Jet::zb(dm, 0);
  const std::vector<Rational> s0{Rational(0)};

  std::vector<GaussianRational> origin{GaussianRational(0)};
  CHECK(recentre(quad, origin, s0) == single(z * zb));

  std::vector<GaussianRational> one{GaussianRational(1)};
  CHECK(recentre(quad, one, s0) == single(z * zb + z + zb));

  const DefiningPolynomial flat{dm, {Series(dm.nvars(), Series::kExact)}};
  std::vector<GaussianRational> p{GaussianRational(Rational(1, 4), Rational(-3))};
  CHECK(recentre(flat, p, std::vector<Rational>{Rational(5)}) == DefiningJet::zero(dm));
}

TEST_CASE("recentre with a symbolic basepoint specializes to the numeric one") {
  // phi = z^2 zb + zb^2 z + z zb s at basepoint (x + iy, s) in parameters.
  Dimensions dm = dims(1, 1, 3);
  Series phi(dm.nvars(), Series::kExact);
  Monomial z2zb = Monomial::unit(0) * Monomial::unit(0) * Monomial::unit(1);
  Monomial zb2z = Monomial::unit(1) * Monomial::unit(1) * Monomial::unit(0);
  phi.add_term(z2zb, GaussianRational(1));
  phi.add_term(zb2z, GaussianRational(1));
  phi.add_term(Monomial::unit(0) * Monomial::unit(1) * Monomial::unit(2), GaussianRational(1));
  const DefiningPolynomial poly{dm, {phi}};

  Dimensions sym = dm;
  sym.params = 3;
  sym.k = 4;
  const int nv = sym.nvars();
  const Series x = Series::variable(nv, sym.k, sym.param(0));
  const Series y = Series::variable(nv, sym.k, sym.param(1));
  const Series s = Series::variable(nv, sym.k, sym.param(2));
  const std::vector<Series> shift{x + I * y, x - I * y, s};
  const DefiningJet at = recentre(poly, sym, shift);
  CHECK(at.dims() == sym);

  // Specialize params to (1/2, -1, 2), term by term, and compare with the
  // numeric path.
  const Rational vals[] = {Rational(1, 2), Rational(-1), Rational(2)};
  Series specialized(3, 3);
  for (const auto& [m, c] : at[0].series().terms()) {
    GaussianRational coeff = c;
    Monomial head;
    for (int v = 0; v < 3; ++v) {
      head.set_exp(v, m.exp(v));
      for (int e = 0; e < m.exp(sym.param(v)); ++e) coeff *= GaussianRational(vals[v]);
    }
    specialized.add_term(head, coeff);
  }
  std::vector<GaussianRational> z0{GaussianRational(Rational(1, 2), Rational(-1))};
  const DefiningJet num = recentre(poly, z0, std::vector<Rational>{Rational(2)});
  CHECK(specialized == num[0].series());
}

TEST_CASE("graph_extract examples") {
  const Dimensions dm = dims(1, 1, 3);
  const int nv = dm.m();
  const Series x = Series::variable(nv, 3, 0), y = Series::variable(nv, 3, 1),
               s = Series::variable(nv, 3, 2);

  {
    const GraphChart gc = graph_extract(EmbeddingJet{dm, {x + I * y, s}});
    CHECK(gc.chart.is_identity());
    CHECK(gc.phi == DefiningJet::zero(dm));
  }
  {
    const GraphChart gc = graph_extract(EmbeddingJet{dm, {x + I * y, s + I * x * y}});
    CHECK(gc.chart.is_identity());
    CHECK(to_real_coordinates(dm, gc.phi[0].series()) == x * y);
    // (z^2 - zb^2) / (4i)
    const Jet z = Jet::z(dm, 0), zb = Jet::zb(dm, 0);
    CHECK(gc.phi[0] == GaussianRational(Rational(0), Rational(-1, 4)) * (z * z - zb * zb));
  }
}

TEST_CASE("graph_extract picks another chart when the naive one is singular") {
  const Dimensions dm = dims(1, 2, 3);
  const int nv = dm.m();
  auto v = [&](int i) { return Series::variable(nv, 3, i); };
  const Series x = v(0), y = v(1), s1 = v(2), s2 = v(3);
  const EmbeddingJet g{dm, {x + I * y, s1 + I * (x + s2), s2 + I * (y - s1)}};
  const GraphChart gc = graph_extract(g);
  CHECK_FALSE(gc.chart.is_identity());
  CHECK(gc.phi.graph_invertible());

  // The image is the graph in the chosen chart: Im w'_j = phi_j(g1).
  std::vector<Series> zp;
  for (int j = 0; j < dm.N(); ++j) {
    const Series c = g.components[gc.chart.permutation[j]];
    zp.push_back(gc.chart.times_i[j] ? I * c : c);
  }
  for (int j = 0; j < dm.d; ++j) {
    const Series im = (zp[dm.n + j] - zp[dm.n + j].conj_coeffs()) *
                      GaussianRational(Rational(0), Rational(-1, 2));
    CHECK(im == compose(to_real_coordinates(dm, gc.phi[j].series()), gc.g1));
  }
}

TEST_CASE("graph_extract inverts graph_embedding") {
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const Dimensions dm = dims(1 + trial % 2, 1 + (trial / 2) % 2, 3);
    std::vector<Jet> comps;
    for (int j = 0; j < dm.d; ++j) comps.push_back(random_phi_component(rng, dm));
    const DefiningJet phi(comps);
    if (!phi.graph_invertible()) continue;
    const GraphChart gc = graph_extract(graph_embedding(phi));
    CHECK(gc.chart.is_identity());
    CHECK(gc.phi == phi);
  }
}

TEST_CASE("psi_map") {
  const Dimensions dm = dims(1, 1, 3);
  const int nv = dm.m();
  const Series x = Series::variable(nv, 3, 0), y = Series::variable(nv, 3, 1),
               s = Series::variable(nv, 3, 2);
  const Jet z = Jet::z(dm, 0), zb = Jet::zb(dm, 0);

  CHECK(psi_map(EmbeddingJet{dm, {x + I * y, s}}).nonharmonic_part == DefiningJet::zero(dm));

  const SplitJet quad = psi_map(EmbeddingJet{dm, {x + I * y, s + I * (x * x + y * y)}});
  CHECK(quad.nonharmonic_part == single(z * zb));
  CHECK(quad.harmonic_part[0].is_zero());

  // phi = z zb + Re z, at the point (1 + 2i, 3 + 4i).
  const GaussianRational b0(1, 2), b1(3, 4);
  const Series c0 = Series::constant(nv, 3, b0), c1 = Series::constant(nv, 3, b1);
  const SplitJet sj = psi_map(EmbeddingJet{dm, {c0 + x + I * y, c1 + s + I * (x * x + y * y + x)}});
  CHECK(sj.base_point == std::vector<GaussianRational>{b0, b1});
  CHECK(sj.harmonic_part[0] == GaussianRational(Rational(1, 2)) * (z + zb));
  CHECK(is_nonharmonic(sj.nonharmonic_part));
  const auto [h, nh] = split_harmonic(sj.nonharmonic_part[0]);
  CHECK(h.is_zero());
  CHECK(nh.series().coeff(Monomial::unit(0) * Monomial::unit(1)) == GaussianRational(1));
  CHECK(reconstruct_phi(sj.harmonic_part, sj.nonharmonic_part) ==
        single(z * zb + GaussianRational(Rational(1, 2)) * (z + zb)));
}
