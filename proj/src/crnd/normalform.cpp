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

#include "crnd/normalform.hpp"

#include <algorithm>
#include <numeric>

#include "crnd/error.hpp"

namespace crnd {

namespace {

const GaussianRational kI = GaussianRational::i();
const GaussianRational kHalf = GaussianRational(Rational(1, 2));
const GaussianRational kMinusHalfI = GaussianRational(Rational(0), Rational(-1, 2));  // 1/(2i)

Series var(int nvars, int order, int v) { return Series::variable(nvars, order, v); }

// Re and Im of a series in a space whose first 2n variables are n
// conjugate pairs and whose remaining variables are real.
Series re_part(const Series& s, int n) { return (s + conjugate_pairs(s, n)) * kHalf; }
Series im_part(const Series& s, int n) { return (s - conjugate_pairs(s, n)) * kMinusHalfI; }

void require_graph_invertible(const DefiningJet& phi) {
  if (!phi.graph_invertible()) {
    throw PreconditionError("not graph-normalizable here: id + i*phi_s(0) is singular");
  }
}

std::vector<Jet> to_jets(const Dimensions& dims, std::span<const Series> s) {
  std::vector<Jet> out;
  out.reserve(s.size());
  for (const auto& c : s) out.emplace_back(dims, c);
  return out;
}

// Step one: h on z-bar' = 0, from
//   h(z', w') - hbar0(w') = 2i phi(z', 0, (h + hbar0)/2),
// where h0(s) = s + i phi(0, 0, s). Only the harmonic part of phi enters.
std::vector<Series> solve_h(const DefiningJet& phi) {
  const Dimensions& dims = phi.dims();
  const int n = dims.n, d = dims.d, np = dims.params, order = dims.k;
  const int nu = n + d + np;
  const int total = nu + d;
  auto wp = [&](int j) { return n + j; };
  auto par = [&](int p) { return n + d + p; };

  std::vector<Series> axis(dims.nvars(), Series(total, order));
  for (int j = 0; j < d; ++j) axis[dims.s(j)] = var(total, order, wp(j));
  for (int p = 0; p < np; ++p) axis[dims.param(p)] = var(total, order, par(p));

  std::vector<Series> hbar0(d);
  for (int j = 0; j < d; ++j) {
    const Series h0 = var(total, order, wp(j)) + kI * compose(phi[j].series(), axis);
    hbar0[j] = h0.conj_coeffs();
  }

  std::vector<Series> inner(dims.nvars(), Series(total, order));
  for (int i = 0; i < n; ++i) inner[dims.z(i)] = var(total, order, i);
  for (int j = 0; j < d; ++j) inner[dims.s(j)] = (var(total, order, nu + j) + hbar0[j]) * kHalf;
  for (int p = 0; p < np; ++p) inner[dims.param(p)] = var(total, order, par(p));

  std::vector<Series> f;
  for (int j = 0; j < d; ++j) {
    f.push_back(var(total, order, nu + j) - hbar0[j] -
                GaussianRational(0, 2) * compose(phi[j].series(), inner));
  }
  return implicit_solve(f, nu);
}

// h(z, W, params) with W given as d series in the space of `like`.
std::vector<Series> h_at(const Dimensions& dims, std::span<const Series> h,
                         std::span<const Series> w, int nvars, int order) {
  std::vector<Series> inner;
  inner.reserve(dims.n + dims.d + dims.params);
  for (int i = 0; i < dims.n; ++i) inner.push_back(var(nvars, order, dims.z(i)));
  for (int j = 0; j < dims.d; ++j) inner.push_back(w[j]);
  for (int p = 0; p < dims.params; ++p) inner.push_back(var(nvars, order, dims.param(p)));
  std::vector<Series> out;
  for (const auto& hj : h) out.push_back(compose(hj, inner));
  return out;
}

// phi(z, zbar, s_new, params) in a space that extends the jet space.
Series phi_at(const Dimensions& dims, const Series& phi, std::span<const Series> s_new, int nvars,
              int order) {
  std::vector<Series> inner;
  inner.reserve(dims.nvars());
  for (int v = 0; v < 2 * dims.n; ++v) inner.push_back(var(nvars, order, v));
  for (int j = 0; j < dims.d; ++j) inner.push_back(s_new[j]);
  for (int p = 0; p < dims.params; ++p) inner.push_back(var(nvars, order, dims.param(p)));
  return compose(phi, inner);
}

}  // namespace

bool is_harmonic_monomial(const Dimensions& dims, const Monomial& m) {
  return z_degree(dims, m) == 0 || zb_degree(dims, m) == 0;
}

bool is_nonharmonic(const Jet& j) {
  for (const auto& [m, c] : j.series().terms()) {
    if (is_harmonic_monomial(j.dims(), m)) return false;
  }
  return true;
}

bool is_nonharmonic(const DefiningJet& phi) {
  return std::all_of(phi.components().begin(), phi.components().end(),
                     [](const Jet& j) { return is_nonharmonic(j); });
}

std::pair<Jet, Jet> split_harmonic(const Jet& j) {
  if (!j.is_real()) throw InputError("split_harmonic: jet is not real");
  const Dimensions& dims = j.dims();
  Jet h(dims, j.series().filtered([&](const Monomial& m) { return is_harmonic_monomial(dims, m); }));
  Jet nh(dims,
         j.series().filtered([&](const Monomial& m) { return !is_harmonic_monomial(dims, m); }));
  return {h, nh};
}

NormalForm eliminate_harmonic(const DefiningJet& phi) {
  require_graph_invertible(phi);
  const Dimensions& dims = phi.dims();
  const int d = dims.d, order = dims.k;
  const int jv = dims.nvars();
  const int total = jv + d;

  NormalForm out;
  out.h = solve_h(phi);

  // Step two: Im h(z', s' + i t') = phi(z', zbar', Re h(z', s' + i t')),
  // solved for t' = psi(z', zbar', s').
  std::vector<Series> w(d);
  for (int j = 0; j < d; ++j) {
    w[j] = var(total, order, dims.s(j)) + kI * var(total, order, jv + j);
  }
  const auto hw = h_at(dims, out.h, w, total, order);
  std::vector<Series> re_h, f;
  for (int j = 0; j < d; ++j) re_h.push_back(re_part(hw[j], dims.n));
  for (int j = 0; j < d; ++j) {
    f.push_back(im_part(hw[j], dims.n) - phi_at(dims, phi[j].series(), re_h, total, order));
  }
  const auto psi = implicit_solve(f, jv);

  std::vector<Jet> comps = to_jets(dims, psi);
  for (const auto& c : comps) {
    if (!c.is_real()) throw InternalError("eliminate_harmonic: psi is not real");
    if (!is_nonharmonic(c)) throw InternalError("eliminate_harmonic: psi is not nonharmonic");
  }
  out.psi = DefiningJet(std::move(comps));

  const auto residual = substitution_residual(phi, out.h, out.psi);
  out.residual_zero = std::all_of(residual.begin(), residual.end(),
                                  [](const Series& r) { return r.is_zero(); });
  if (!out.residual_zero) throw InternalError("eliminate_harmonic: nonzero substitution residual");
  return out;
}

std::vector<Series> substitution_residual(const DefiningJet& phi, std::span<const Series> h,
                                          const DefiningJet& psi) {
  const Dimensions& dims = phi.dims();
  if (!(psi.dims() == dims)) throw InputError("substitution_residual: dimension mismatch");
  if (static_cast<int>(h.size()) != dims.d) throw InputError("substitution_residual: h arity");
  const int jv = dims.nvars(), order = dims.k;

  std::vector<Series> w;
  for (int j = 0; j < dims.d; ++j) w.push_back(var(jv, order, dims.s(j)) + kI * psi[j].series());
  const auto hw = h_at(dims, h, w, jv, order);
  std::vector<Series> re_h;
  for (const auto& x : hw) re_h.push_back(re_part(x, dims.n));
  std::vector<Series> out;
  for (int j = 0; j < dims.d; ++j) {
    out.push_back(im_part(hw[j], dims.n) - phi_at(dims, phi[j].series(), re_h, jv, order));
  }
  return out;
}

DefiningJet reconstruct_phi(const std::vector<Jet>& harmonic, const DefiningJet& psi) {
  const Dimensions& dims = psi.dims();
  if (!is_nonharmonic(psi)) throw InputError("reconstruct_phi: psi is not nonharmonic");
  for (const auto& hj : harmonic) {
    if (!(hj.dims() == dims)) throw InputError("reconstruct_phi: dimension mismatch");
    for (const auto& [m, c] : hj.series().terms()) {
      if (!is_harmonic_monomial(dims, m)) throw InputError("reconstruct_phi: harmonic part has a mixed term");
    }
  }
  const DefiningJet harm(harmonic);
  require_graph_invertible(harm);
  const auto h = solve_h(harm);

  // Given (z, zbar, s), find s' with Re h(z, s' + i psi(z, zbar, s')) = s;
  // then phi = Im h at that point.
  const int d = dims.d, order = dims.k;
  const int jv = dims.nvars();
  const int total = jv + d;
  std::vector<Series> s_new(d);
  for (int j = 0; j < d; ++j) s_new[j] = var(total, order, jv + j);
  std::vector<Series> w;
  for (int j = 0; j < d; ++j) {
    w.push_back(s_new[j] + kI * phi_at(dims, psi[j].series(), s_new, total, order));
  }
  const auto hw = h_at(dims, h, w, total, order);
  std::vector<Series> f;
  for (int j = 0; j < d; ++j) f.push_back(re_part(hw[j], dims.n) - var(total, order, dims.s(j)));
  const auto sp = implicit_solve(f, jv);

  std::vector<Series> back;
  for (int v = 0; v < jv; ++v) back.push_back(var(jv, order, v));
  for (const auto& x : sp) back.push_back(x);
  std::vector<Jet> comps;
  for (int j = 0; j < d; ++j) comps.emplace_back(dims, compose(im_part(hw[j], dims.n), back));
  return DefiningJet(std::move(comps));
}

DefiningJet recentre(const DefiningPolynomial& phi_global, const Dimensions& target,
                     std::span<const Series> shift) {
  const Dimensions& src = phi_global.dims;
  if (src.n != target.n || src.d != target.d || src.params != 0) {
    throw InputError("recentre: dimension mismatch");
  }
  target.validate();
  const int m = src.m();
  if (static_cast<int>(shift.size()) != m) throw InputError("recentre: shift needs 2n + d entries");
  if (static_cast<int>(phi_global.components.size()) != src.d) {
    throw InputError("recentre: component count does not match d");
  }
  const int nv = target.nvars(), order = target.k;
  std::vector<Series> inner;
  for (int v = 0; v < m; ++v) {
    if (shift[v].nvars() != nv) throw InputError("recentre: shift arity mismatch");
    inner.push_back(var(nv, order, v) + shift[v]);
  }
  std::vector<Jet> comps;
  for (const auto& c : phi_global.components) {
    if (!c.is_exact()) throw InputError("recentre: defining function must be an exact polynomial");
    const Series moved = compose(c, inner).filtered([&](const Monomial& mono) {
      for (int v = 0; v < m; ++v) {
        if (mono.exp(v) != 0) return true;
      }
      return false;
    });
    comps.emplace_back(target, moved);
  }
  return DefiningJet(std::move(comps));
}

DefiningJet recentre(const DefiningPolynomial& phi_global, std::span<const GaussianRational> z0,
                     std::span<const Rational> s0) {
  const Dimensions& dims = phi_global.dims;
  if (static_cast<int>(z0.size()) != dims.n || static_cast<int>(s0.size()) != dims.d) {
    throw InputError("recentre: point has the wrong number of coordinates");
  }
  const int nv = dims.nvars(), order = dims.k;
  std::vector<Series> shift;
  for (int i = 0; i < dims.n; ++i) shift.push_back(Series::constant(nv, order, z0[i]));
  for (int i = 0; i < dims.n; ++i) shift.push_back(Series::constant(nv, order, z0[i].conj()));
  for (int j = 0; j < dims.d; ++j) shift.push_back(Series::constant(nv, order, GaussianRational(s0[j])));
  return recentre(phi_global, dims, shift);
}

// --- charts ----------------------------------------------------------------

std::vector<GaussianRational> ChartTransform::apply(std::span<const GaussianRational> point) const {
  if (point.size() != permutation.size()) throw InputError("chart: point dimension mismatch");
  std::vector<GaussianRational> out;
  for (std::size_t j = 0; j < permutation.size(); ++j) {
    GaussianRational v = point[permutation[j]] - offset[permutation[j]];
    out.push_back(times_i[j] ? kI * v : v);
  }
  return out;
}

bool ChartTransform::is_identity() const {
  for (std::size_t j = 0; j < permutation.size(); ++j) {
    if (permutation[j] != static_cast<int>(j) || times_i[j]) return false;
  }
  return true;
}

Series to_real_coordinates(const Dimensions& dims, const Series& s) {
  const int nv = s.nvars(), order = s.order();
  std::vector<Series> inner;
  for (int v = 0; v < nv; ++v) inner.push_back(var(nv, order, v));
  for (int i = 0; i < dims.n; ++i) {
    const Series x = var(nv, order, dims.z(i)), y = var(nv, order, dims.zb(i));
    inner[dims.z(i)] = x + kI * y;
    inner[dims.zb(i)] = x - kI * y;
  }
  return compose(s, inner);
}

Series to_complex_coordinates(const Dimensions& dims, const Series& s) {
  const int nv = s.nvars(), order = s.order();
  std::vector<Series> inner;
  for (int v = 0; v < nv; ++v) inner.push_back(var(nv, order, v));
  for (int i = 0; i < dims.n; ++i) {
    const Series z = var(nv, order, dims.z(i)), zb = var(nv, order, dims.zb(i));
    inner[dims.z(i)] = (z + zb) * kHalf;
    inner[dims.zb(i)] = (z - zb) * kMinusHalfI;
  }
  return compose(s, inner);
}

EmbeddingJet graph_embedding(const DefiningJet& phi) {
  const Dimensions& dims = phi.dims();
  if (dims.params != 0) throw InputError("graph_embedding: parameters are not supported");
  const int nv = dims.m(), order = dims.k;
  EmbeddingJet g{dims, {}};
  for (int i = 0; i < dims.n; ++i) {
    g.components.push_back(var(nv, order, dims.z(i)) + kI * var(nv, order, dims.zb(i)));
  }
  for (int j = 0; j < dims.d; ++j) {
    g.components.push_back(var(nv, order, dims.s(j)) +
                           kI * to_real_coordinates(dims, phi[j].series()));
  }
  return g;
}

GraphChart graph_extract(const EmbeddingJet& g) {
  const Dimensions& dims = g.dims;
  dims.validate();
  if (dims.params != 0) throw InputError("graph_extract: parameters are not supported");
  const int n = dims.n, d = dims.d, big_n = dims.N(), m = dims.m(), order = dims.k;
  if (static_cast<int>(g.components.size()) != big_n) {
    throw InputError("graph_extract: embedding needs N = n + d components");
  }
  std::vector<GaussianRational> base;
  std::vector<Series> centred;
  for (const auto& c : g.components) {
    if (c.nvars() != m) throw InputError("graph_extract: components must have m = 2n + d variables");
    if (c.order() < order) throw InputError("graph_extract: component order below k");
    base.push_back(c.constant_term());
    Series t = c.truncated(order);
    t.add_term(Monomial{}, -base.back());
    centred.push_back(t);
  }

  std::vector<int> perm(big_n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << big_n); ++mask) {
      std::vector<Series> zp;
      for (int j = 0; j < big_n; ++j) {
        zp.push_back((mask >> j) & 1u ? kI * centred[perm[j]] : centred[perm[j]]);
      }
      std::vector<Series> g1, g2;
      for (int i = 0; i < n; ++i) g1.push_back(re_part(zp[i], 0));
      for (int i = 0; i < n; ++i) g1.push_back(im_part(zp[i], 0));
      for (int j = 0; j < d; ++j) g1.push_back(re_part(zp[n + j], 0));
      for (int j = 0; j < d; ++j) g2.push_back(im_part(zp[n + j], 0));
      if (rank_exact(linear_part(g1, 0, m)) < m) continue;
      const auto inv = invert_map(g1);
      std::vector<Jet> comps;
      for (int j = 0; j < d; ++j) {
        comps.emplace_back(dims, to_complex_coordinates(dims, compose(g2[j], inv)));
      }
      DefiningJet phi(std::move(comps));
      if (!phi.graph_invertible()) continue;

      ChartTransform chart;
      chart.permutation = perm;
      for (int j = 0; j < big_n; ++j) chart.times_i.push_back((mask >> j) & 1u);
      chart.offset = base;
      return {chart, g1, phi};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw PreconditionError("not a generic embedding jet: no chart gives a graph");
}

SplitJet psi_map(const EmbeddingJet& g) {
  GraphChart gc = graph_extract(g);
  SplitJet out;
  for (const auto& c : g.components) out.base_point.push_back(c.constant_term());
  out.chart = gc.chart;
  out.param_jet = gc.g1;
  for (const auto& c : gc.phi.components()) out.harmonic_part.push_back(split_harmonic(c).first);
  out.nonharmonic_part = eliminate_harmonic(gc.phi).psi;
  return out;
}

}  // namespace crnd
