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

#include "crnd/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "crnd/error.hpp"
#include "crnd/normalform.hpp"

namespace crnd {

namespace {

Rational factorial(const std::vector<int>& alpha) {
  Rational f(1);
  for (int a : alpha) {
    for (int i = 2; i <= a; ++i) f *= i;
  }
  return f;
}

std::vector<int> unit(int n, int i) {
  std::vector<int> e(n, 0);
  e[i] = 1;
  return e;
}

void require_nonharmonic(const DefiningJet& psi, const char* what) {
  if (psi.dims().params != 0) throw InputError(std::string(what) + ": jet carries parameters");
  if (!is_nonharmonic(psi)) throw InputError(std::string(what) + ": jet is not nonharmonic");
}

// d^{a} d-bar^{b} psi^c at 0.
GaussianRational mixed_derivative(const DefiningJet& psi, int c, const std::vector<int>& a,
                                  const std::vector<int>& b) {
  const std::vector<int> gamma(psi.dims().d, 0);
  return psi[c].coeff(a, b, gamma) * GaussianRational(factorial(a) * factorial(b));
}

std::int64_t clamp_plus(std::int64_t r) { return std::max<std::int64_t>(r, 0); }

void check_nd(int n, int d, int k) {
  if (n < 1 || d < 1 || k < 1) throw InputError("codimension formulas need n, d, k >= 1");
}

Series series_determinant(const std::vector<std::vector<Series>>& m, int nvars) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Series::constant(nvars, Series::kExact, GaussianRational(1));
  if (n == 1) return m[0][0];
  Series det(nvars, Series::kExact);
  for (int c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Series>> minor;
    for (int r = 1; r < n; ++r) {
      std::vector<Series> row;
      for (int cc = 0; cc < n; ++cc) {
        if (cc != c) row.push_back(m[r][cc]);
      }
      minor.push_back(row);
    }
    const Series term = m[0][c] * series_determinant(minor, nvars);
    if (c % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

}  // namespace

std::vector<std::vector<int>> multi_indices(int n, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, int v, int left) -> void {
    if (v == n - 1) {
      e[v] = left;
      out.push_back(e);
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[v] = x;
      self(self, v + 1, left - x);
    }
  };
  for (int deg = std::max(lo, 0); deg <= hi; ++deg) rec(rec, 0, deg);
  return out;
}

std::int64_t binomial(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  std::int64_t r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

ComplexMatrix build_matrix_A(const DefiningJet& psi, int j) {
  require_nonharmonic(psi, "build_matrix_A");
  const Dimensions& dims = psi.dims();
  if (j < 1 || j > dims.k - 1) throw InputError("build_matrix_A: need 1 <= j <= k-1");
  const auto alphas = multi_indices(dims.n, 1, j);
  ComplexMatrix a(0, dims.n);
  std::vector<GaussianRational> row(dims.n);
  for (int c = 0; c < dims.d; ++c) {
    for (const auto& alpha : alphas) {
      for (int q = 0; q < dims.n; ++q) row[q] = mixed_derivative(psi, c, unit(dims.n, q), alpha);
      a.append_row(row);
    }
  }
  return a;
}

BMatrices build_matrix_B(const DefiningJet& psi, int j) {
  require_nonharmonic(psi, "build_matrix_B");
  const Dimensions& dims = psi.dims();
  const int n = dims.n, d = dims.d;
  if (j < 1 || j > dims.k) throw InputError("build_matrix_B: need 1 <= j <= k");
  BMatrices out{ComplexMatrix(0, d), ComplexMatrix(0, d)};
  auto row_of = [&](const std::vector<int>& alpha, int r) {
    std::vector<GaussianRational> row(d);
    for (int c = 0; c < d; ++c) row[c] = mixed_derivative(psi, c, alpha, unit(n, r));
    return row;
  };
  auto re_im = [&](const std::vector<GaussianRational>& row, bool imag) {
    std::vector<GaussianRational> out_row(d);
    for (int c = 0; c < d; ++c) out_row[c] = GaussianRational(imag ? row[c].im() : row[c].re());
    return out_row;
  };

  std::vector<std::vector<GaussianRational>> rows;
  for (const auto& alpha : multi_indices(n, 1, j - 1)) {
    const int deg = std::accumulate(alpha.begin(), alpha.end(), 0);
    const int q = deg == 1 ? static_cast<int>(std::find(alpha.begin(), alpha.end(), 1) - alpha.begin())
                           : -1;
    for (int r = 0; r < n; ++r) {
      const auto row = row_of(alpha, r);
      rows.push_back(row);
      if (deg > 1 || q < r) {
        out.b_real.append_row(re_im(row, false));
        out.b_real.append_row(re_im(row, true));
      } else if (q == r) {
        out.b_real.append_row(re_im(row, false));
      }
    }
  }
  for (const auto& row : rows) out.b.append_row(row);
  for (const auto& row : rows) {
    std::vector<GaussianRational> c(row.size());
    std::transform(row.begin(), row.end(), c.begin(), [](const auto& x) { return x.conj(); });
    out.b.append_row(c);
  }
  return out;
}

std::vector<int> degeneracy_sequence(const DefiningJet& psi) {
  require_nonharmonic(psi, "degeneracy_sequence");
  std::vector<int> r1;
  for (int j = 1; j <= psi.dims().k - 1; ++j) {
    r1.push_back(psi.dims().n - rank_exact(build_matrix_A(psi, j)));
  }
  return r1;
}

std::vector<int> defect_sequence(const DefiningJet& psi) {
  require_nonharmonic(psi, "defect_sequence");
  std::vector<int> r2;
  for (int j = 1; j <= psi.dims().k; ++j) {
    r2.push_back(psi.dims().d - rank_exact(build_matrix_B(psi, j).b));
  }
  return r2;
}

std::optional<int> first_zero(const std::vector<int>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == 0) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

InvariantProfile invariant_profile(const DefiningJet& psi) {
  InvariantProfile p;
  p.dims = psi.dims();
  p.r1 = degeneracy_sequence(psi);
  p.r2 = defect_sequence(psi);
  p.nondeg_order = first_zero(p.r1);
  p.strong_type = first_zero(p.r2);
  return p;
}

std::vector<ComplexMatrix> levi_forms(const DefiningJet& psi) {
  const Dimensions& dims = psi.dims();
  if (dims.k < 2) throw InputError("levi_forms: need k >= 2");
  std::vector<ComplexMatrix> out;
  for (int l = 0; l < dims.d; ++l) {
    ComplexMatrix h(dims.n, dims.n);
    for (int q = 0; q < dims.n; ++q)
      for (int r = 0; r < dims.n; ++r) h(q, r) = mixed_derivative(psi, l, unit(dims.n, q), unit(dims.n, r));
    out.push_back(h);
  }
  return out;
}

Series levi_pencil_determinant(const DefiningJet& psi) {
  const auto forms = levi_forms(psi);
  const int n = psi.dims().n, d = psi.dims().d;
  std::vector<std::vector<Series>> pencil(n, std::vector<Series>(n, Series(d, Series::kExact)));
  for (int l = 0; l < d; ++l) {
    const Series b = Series::variable(d, Series::kExact, l);
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) pencil[q][r] += b * forms[l](q, r);
  }
  return series_determinant(pencil, d);
}

BoundConstants bound_constants(int m, int big_n) {
  if (!(2 <= big_n && big_n < m && m < 2 * big_n)) {
    throw InputError("bound constants need 2 <= N < m < 2N");
  }
  BoundConstants b;
  if (m == 3 && big_n == 2) b.k1 = 3;
  else if (big_n + 2 <= m && m <= 2 * big_n - 3 && !(m == 7 && big_n == 5)) b.k1 = 1;
  else b.k1 = 2;

  const int c = m - big_n;
  auto least_k = [&](std::int64_t rhs) {
    for (int k = 1;; ++k) {
      if (2 * c * binomial(k + c - 1, k - 1) >= rhs) return k;
    }
  };
  b.k2 = least_k(static_cast<std::int64_t>(c) * c + 2 * m);
  b.k2_prime = least_k(static_cast<std::int64_t>(c) * c + 2 * m + 1);
  return b;
}

std::int64_t codim_A_r(int n, int d, int k, int r) {
  check_nd(n, d, k);
  if (r < 0 || r > n) throw InputError("codim_A_r: need 0 <= r <= n");
  const std::int64_t nr = n - r;
  return 2 * d * nr * binomial(k + n - 1, k - 1) - nr * (2 * d + d * nr + 2 * r);
}

std::int64_t minuses(int n, int d, int k) {
  check_nd(n, d, k);
  return 2 * d * binomial(k + n - 1, k - 1) - 2 * n - 3 * d + 2;
}

std::int64_t codim_B_r(int n, int d, int k, int r) {
  check_nd(n, d, k);
  if (r < 0 || r > d) throw InputError("codim_B_r: need 0 <= r <= d");
  return (d - r) * clamp_plus(2 * n * binomial(k + n - 1, k - 1) - n * n - 2 * n - r);
}

std::int64_t pluses(int n, int d, int k) {
  check_nd(n, d, k);
  return clamp_plus(2 * n * binomial(k + n - 1, k - 1) - n * n - 2 * n - d + 1);
}

std::int64_t k_double_prime(int n, int k) {
  check_nd(n, 1, k);
  return 2 * n * (binomial(k + n - 1, k - 1) - n - 1) + n * n;
}

int brute_force_codim_A0(int n, int d, int k) {
  const Dimensions dims{n, d, k, 0};
  dims.validate();
  if (k < 2) throw InputError("brute_force_codim_A0: need k >= 2");
  // Real basis of the nonharmonic real k-jets: for each conjugate pair of
  // monomials {M, conj M}, M + conj M and i(M - conj M) (only the first if
  // M is self-conjugate), in each component.
  std::vector<DefiningJet> basis;
  const auto all = multi_indices(n, 1, k);
  for (const auto& alpha : all) {
    for (const auto& beta : all) {
      const int deg = std::accumulate(alpha.begin(), alpha.end(), 0) +
                      std::accumulate(beta.begin(), beta.end(), 0);
      if (deg > k || alpha > beta) continue;
      for (const auto& gamma : multi_indices(d, 0, k - deg)) {
        const Jet m(dims, Series::term(dims.nvars(), k, make_monomial(dims, alpha, beta, gamma),
                                       GaussianRational(1)));
        std::vector<Jet> reals{m + m.conjugate()};
        if (alpha != beta) reals.push_back(GaussianRational::i() * (m - m.conjugate()));
        for (const auto& r : reals) {
          for (int c = 0; c < d; ++c) {
            std::vector<Jet> comps(d, Jet(dims));
            comps[c] = r;
            basis.emplace_back(std::move(comps));
          }
        }
      }
    }
  }
  ComplexMatrix map(0, 0);
  for (const auto& b : basis) {
    const ComplexMatrix a = build_matrix_A(b, k - 1);
    std::vector<GaussianRational> row;
    for (int r = 0; r < a.rows(); ++r)
      for (int c = 0; c < a.cols(); ++c) {
        row.emplace_back(a(r, c).re());
        row.emplace_back(a(r, c).im());
      }
    if (map.cols() == 0) map = ComplexMatrix(0, static_cast<int>(row.size()));
    map.append_row(row);
  }
  return rank_exact(map);
}

std::string StratumDescriptor::name() const {
  switch (family) {
    case StratumFamily::kA: return "A_" + std::to_string(index);
    case StratumFamily::kB: return "B_" + std::to_string(index);
    case StratumFamily::kWPrime: return "W'_{p," + std::to_string(index) + "}";
    case StratumFamily::kWDoublePrime: return "W''_{p," + std::to_string(index) + "}";
  }
  return "?";
}

StratumDescriptor stratum(StratumFamily family, int n, int d, int k, int index) {
  StratumDescriptor s{family, n, d, k, index, 0};
  switch (family) {
    case StratumFamily::kA: s.codim = codim_A_r(n, d, k, index); break;
    case StratumFamily::kB: s.codim = codim_B_r(n, d, k, index); break;
    case StratumFamily::kWPrime:
      if (index < 1 || index > n) throw InputError("W'_{p,e} needs 1 <= e <= n");
      s.codim = codim_A_r(n, d, k, n - index);
      break;
    case StratumFamily::kWDoublePrime:
      if (index < 1 || index > d) throw InputError("W''_{p,e} needs 1 <= e <= d");
      s.codim = codim_B_r(n, d, k, d - index);
      break;
  }
  return s;
}

}  // namespace crnd
