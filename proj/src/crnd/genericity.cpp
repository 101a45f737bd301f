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

#include "crnd/genericity.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "crnd/error.hpp"
#include "crnd/matrix.hpp"
#include "crnd/normalform.hpp"

namespace crnd {

namespace {

// Runs fn(0..count-1) on up to `workers` threads. fn writes only to its own
// slot, so the result does not depend on scheduling. The first exception is
// rethrown after all threads join.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

Rational sample_rational(std::mt19937_64& gen) {
  const auto v = static_cast<long>(gen() % 32);
  const long num = v < 16 ? v - 16 : v - 15;
  const long den = 1 + static_cast<long>(gen() % 8);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

int a_rank(const DefiningJet& psi) {
  return rank_exact(build_matrix_A(psi, psi.dims().k - 1));
}

DefiningJet hermitian_sum(const Dimensions& dims, int r, const Rational& scale) {
  std::vector<Jet> comps(dims.d, Jet(dims));
  for (int l = 0; l < r; ++l) {
    comps[0] += GaussianRational(scale) * (Jet::z(dims, l) * Jet::zb(dims, l));
  }
  return DefiningJet(std::move(comps));
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t task_seed(std::uint64_t seed, std::uint64_t index) {
  return mix_seed(mix_seed(seed) ^ index);
}

DefiningJet sample_jet(const Dimensions& dims, std::uint64_t seed) {
  dims.validate();
  if (dims.params != 0) throw InputError("sample_jet: parameters not supported");
  std::mt19937_64 gen(mix_seed(seed));
  const int n = dims.n;
  std::vector<Jet> comps;
  for (int c = 0; c < dims.d; ++c) {
    Series s(dims.nvars(), dims.k);
    for (const auto& e : multi_indices(dims.nvars(), 2, dims.k)) {
      const std::vector<int> alpha(e.begin(), e.begin() + n);
      const std::vector<int> beta(e.begin() + n, e.begin() + 2 * n);
      const auto nonzero = [](const std::vector<int>& v) {
        return std::any_of(v.begin(), v.end(), [](int x) { return x != 0; });
      };
      if (!nonzero(alpha) || !nonzero(beta)) continue;
      if (alpha > beta) continue;  // drawn with its conjugate partner
      const Monomial m(e);
      if (alpha == beta) {
        s.add_term(m, GaussianRational(sample_rational(gen)));
        continue;
      }
      Rational re = sample_rational(gen);
      Rational im = sample_rational(gen);
      std::vector<int> swapped = e;
      std::copy(beta.begin(), beta.end(), swapped.begin());
      std::copy(alpha.begin(), alpha.end(), swapped.begin() + n);
      s.add_term(m, GaussianRational(re, im));
      s.add_term(Monomial(swapped), GaussianRational(re, -im));
    }
    comps.emplace_back(dims, s);
  }
  return DefiningJet(std::move(comps));
}

DefiningJet stratum_witness(const Dimensions& dims, int r) {
  dims.validate();
  if (r < 0 || r > dims.n) throw InputError("stratum_witness: need 0 <= r <= n");
  if (dims.k < 2) throw InputError("stratum_witness: need k >= 2");
  return hermitian_sum(dims, r, Rational(1));
}

std::vector<Rational> default_eps_schedule() {
  std::vector<Rational> eps;
  for (int e = 1; e <= 8; ++e) eps.emplace_back(1, 1 << e);
  return eps;
}

ClosureRecord closure_perturb(const DefiningJet& psi, int target_rank,
                              const std::vector<Rational>& eps) {
  const Dimensions& dims = psi.dims();
  const ComplexMatrix a = build_matrix_A(psi, dims.k - 1);
  const int c = rank_exact(a);
  if (target_rank < c || target_rank > dims.n) {
    throw InputError("closure_perturb: need rank <= target <= n");
  }
  for (int row = 0; row < a.rows(); ++row) {
    for (int col = c; col < dims.n; ++col) {
      if (!a(row, col).is_zero()) {
        throw PreconditionError("closure_perturb: kernel of A is not spanned by the trailing basis vectors");
      }
    }
  }
  ClosureRecord rec;
  rec.base_rank = c;
  rec.target_rank = target_rank;
  rec.eps = eps;
  rec.ok = true;
  for (const auto& e : eps) {
    if (sgn(e) == 0) throw InputError("closure_perturb: eps must be nonzero");
    const DefiningJet shift = hermitian_sum(dims, target_rank, e);
    std::vector<Jet> comps;
    for (int l = 0; l < dims.d; ++l) comps.push_back(psi[l] + shift[l]);
    const int r = a_rank(DefiningJet(std::move(comps)));
    rec.ranks.push_back(r);
    rec.ok = rec.ok && r == target_rank;
  }
  return rec;
}

std::vector<Basepoint> basepoint_lattice(int n, int d, const std::vector<Rational>& values) {
  const int m = 2 * n + d;
  std::vector<Basepoint> out;
  if (values.empty()) return out;
  std::vector<std::size_t> idx(m, 0);
  while (true) {
    Basepoint p;
    for (int i = 0; i < n; ++i) p.z.emplace_back(values[idx[2 * i]], values[idx[2 * i + 1]]);
    for (int j = 0; j < d; ++j) p.s.push_back(values[idx[2 * n + j]]);
    out.push_back(std::move(p));
    int pos = m - 1;
    while (pos >= 0 && ++idx[pos] == values.size()) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

SweepReport deform_sweep(const DeformationFamily& family, int k, unsigned workers) {
  Dimensions dims = family.base.dims;
  dims.k = k;
  dims.validate();
  if (family.direction.size() != family.base.components.size() ||
      static_cast<int>(family.direction.size()) != dims.d) {
    throw InputError("deform_sweep: base and direction need d components");
  }
  for (const auto& p : family.basepoints) {
    if (static_cast<int>(p.z.size()) != dims.n || static_cast<int>(p.s.size()) != dims.d) {
      throw InputError("deform_sweep: basepoint has the wrong number of coordinates");
    }
  }

  SweepReport report;
  report.dims = dims;
  report.t_count = family.t_grid.size();
  report.basepoint_count = family.basepoints.size();
  report.entries.resize(report.t_count * report.basepoint_count);

  parallel_for(report.entries.size(), workers, [&](std::size_t i) {
    SweepEntry& e = report.entries[i];
    e.t = family.t_grid[i / report.basepoint_count];
    e.basepoint = family.basepoints[i % report.basepoint_count];
    e.is_base = sgn(e.t) == 0;
    DefiningPolynomial poly{dims, {}};
    for (int l = 0; l < dims.d; ++l) {
      poly.components.push_back(family.base.components[l] + family.direction[l] * GaussianRational(e.t));
    }
    try {
      const DefiningJet phi = recentre(poly, e.basepoint.z, e.basepoint.s);
      e.profile = invariant_profile(eliminate_harmonic(phi).psi);
    } catch (const PreconditionError& err) {
      e.chart_failure = true;
      e.diagnostic = err.what();
    }
  });

  for (const auto& e : report.entries) {
    if (e.chart_failure) {
      ++report.chart_failures;
      continue;
    }
    if (!e.profile->nondeg_order) ++report.degenerate;
    if (!e.profile->strong_type) ++report.non_strong_type;
  }
  return report;
}

int mu_transversality_rank(const DefiningPolynomial& phi) {
  const Dimensions& src = phi.dims;
  if (src.n != 1 || src.d != 1) throw InputError("mu_transversality_rank: needs n = d = 1");
  // Basepoint (x + iy, s) carried by three real parameters; one extra order
  // keeps the terms linear in them.
  const Dimensions target{1, 1, 4, 3};
  const int nv = target.nvars();
  const auto pvar = [&](int p) { return Series::variable(nv, target.k, target.param(p)); };
  const std::vector<Series> shift{pvar(0) + GaussianRational::i() * pvar(1),
                                  pvar(0) - GaussianRational::i() * pvar(1), pvar(2)};
  const DefiningJet moved = recentre(phi, target, shift);
  const DefiningJet psi = eliminate_harmonic(moved).psi;

  // Rows d/dp of psi_{z zbar}, Re and Im of psi_{z^2 zbar}.
  ComplexMatrix jac(3, 3);
  for (int p = 0; p < 3; ++p) {
    std::vector<int> e11(nv, 0), e21(nv, 0);
    e11[target.z(0)] = 1;
    e11[target.zb(0)] = 1;
    e11[target.param(p)] = 1;
    e21[target.z(0)] = 2;
    e21[target.zb(0)] = 1;
    e21[target.param(p)] = 1;
    const GaussianRational c11 = psi[0].series().coeff(Monomial(e11));
    const GaussianRational c21 = psi[0].series().coeff(Monomial(e21)) * GaussianRational(2);
    jac(0, p) = GaussianRational(c11.re());
    jac(1, p) = GaussianRational(c21.re());
    jac(2, p) = GaussianRational(c21.im());
  }
  return rank_exact(jac);
}

TrialSummary genericity_trial(const Dimensions& dims, int sample_count, std::uint64_t seed,
                              unsigned workers) {
  if (sample_count < 0) throw InputError("genericity_trial: negative sample count");
  dims.validate();
  TrialSummary summary;
  summary.dims = dims;
  summary.seed = seed;
  summary.samples = sample_count;
  std::vector<std::pair<bool, bool>> flags(sample_count);
  parallel_for(flags.size(), workers, [&](std::size_t i) {
    const InvariantProfile p = invariant_profile(sample_jet(dims, task_seed(seed, i)));
    flags[i] = {!p.r1.empty() && p.r1.back() > 0, p.r2.back() > 0};
  });
  for (const auto& [degenerate, no_type] : flags) {
    summary.degenerate += degenerate;
    summary.no_strong_type += no_type;
    summary.bad += degenerate || no_type;
  }
  return summary;
}

}  // namespace crnd
