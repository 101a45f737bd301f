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

#include "crnd/series.hpp"

#include <algorithm>
#include <sstream>

#include "crnd/error.hpp"

namespace crnd {

// --- Monomial --------------------------------------------------------------

Monomial::Monomial(std::span<const int> exps) {
  if (exps.size() > kMaxVars) throw InputError("too many variables for a monomial");
  for (std::size_t v = 0; v < exps.size(); ++v) set_exp(static_cast<int>(v), exps[v]);
}

Monomial Monomial::unit(int var) {
  Monomial m;
  m.set_exp(var, 1);
  return m;
}

void Monomial::set_exp(int var, int e) {
  if (var < 0 || var >= kMaxVars) throw InputError("variable index out of range");
  if (e < 0 || e > 255) throw InputError("exponent out of range");
  degree_ += e - exps_[var];
  exps_[var] = static_cast<std::uint8_t>(e);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  for (int v = 0; v < kMaxVars; ++v) {
    const int e = exps_[v] + o.exps_[v];
    if (e > 255) throw InputError("exponent overflow");
    out.exps_[v] = static_cast<std::uint8_t>(e);
  }
  out.degree_ = degree_ + o.degree_;
  return out;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.exps() > b.exps();
}

// --- Series ----------------------------------------------------------------

Series::Series(int nvars, int order) : nvars_(nvars), order_(order) {
  if (nvars < 0 || nvars > kMaxVars) throw InputError("series variable count out of range");
  if (order < 0) throw InputError("negative truncation order");
}

Series Series::constant(int nvars, int order, const GaussianRational& c) {
  Series s(nvars, order);
  s.add_term(Monomial{}, c);
  return s;
}

Series Series::variable(int nvars, int order, int var) {
  if (var < 0 || var >= nvars) throw InputError("variable index out of range");
  Series s(nvars, order);
  s.add_term(Monomial::unit(var), GaussianRational(1));
  return s;
}

Series Series::term(int nvars, int order, const Monomial& m, const GaussianRational& c) {
  Series s(nvars, order);
  s.add_term(m, c);
  return s;
}

int Series::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

GaussianRational Series::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void Series::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero() || m.degree() > order_) return;
  for (int v = nvars_; v < kMaxVars; ++v) {
    if (m.exp(v) != 0) throw InputError("monomial uses a variable outside the series");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Series Series::truncated(int order) const {
  Series out(nvars_, std::min(order, order_));
  for (const auto& [m, c] : terms_) {
    if (m.degree() > out.order_) break;
    out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

Series Series::homogeneous_part(int degree) const {
  return filtered([degree](const Monomial& m) { return m.degree() == degree; });
}

Series Series::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw InputError("derivative variable out of range");
  if (!is_exact() && order_ == 0) throw InputError("derivative of an order-0 series is undetermined");
  Series out(nvars_, is_exact() ? order_ : order_ - 1);
  for (const auto& [m, c] : terms_) {
    const int e = m.exp(var);
    if (e == 0) continue;
    Monomial d = m;
    d.set_exp(var, e - 1);
    out.add_term(d, c * GaussianRational(e));
  }
  return out;
}

Series Series::conj_coeffs() const {
  Series out(nvars_, order_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, c.conj());
  return out;
}

Series Series::remapped(int new_nvars, std::span<const int> var_map) const {
  if (static_cast<int>(var_map.size()) != nvars_) throw InputError("variable map arity mismatch");
  Series out(new_nvars, order_);
  for (const auto& [m, c] : terms_) {
    Monomial r;
    for (int v = 0; v < nvars_; ++v) {
      if (m.exp(v) == 0) continue;
      const int t = var_map[v];
      if (t < 0 || t >= new_nvars) throw InputError("variable map target out of range");
      r.set_exp(t, r.exp(t) + m.exp(v));
    }
    out.add_term(r, c);
  }
  return out;
}

Series Series::without_var(int var) const {
  return filtered([var](const Monomial& m) { return m.exp(var) == 0; });
}

void Series::check_compatible(const Series& o) const {
  if (nvars_ != o.nvars_) throw InputError("series variable count mismatch");
}

Series& Series::operator+=(const Series& o) {
  check_compatible(o);
  order_ = std::min(order_, o.order_);
  if (order_ < kExact) {
    while (!terms_.empty() && terms_.rbegin()->first.degree() > order_) {
      terms_.erase(std::prev(terms_.end()));
    }
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series& Series::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Series Series::operator-() const {
  Series out = *this;
  for (auto& [m, x] : out.terms_) x = -x;
  return out;
}

Series operator*(const Series& a, const Series& b) {
  a.check_compatible(b);
  Series out(a.nvars_, std::min(a.order_, b.order_));
  for (const auto& [ma, ca] : a.terms_) {
    if (ma.degree() > out.order_) break;
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.degree() + mb.degree() > out.order_) break;
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

Series Series::pow(int e) const {
  if (e < 0) throw InputError("negative power of a series");
  Series result = constant(nvars_, order_, GaussianRational(1));
  Series base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string Series::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = false;
    if ((c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0)) {
      negative = true;
      coeff = (-c).to_string();
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (int v = 0; v < nvars_; ++v) {
      const int e = m.exp(v);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << coeff;
    } else if (coeff == "1") {
      os << mono;
    } else {
      os << coeff << "*" << mono;
    }
  }
  return os.str();
}

// --- Composition and solving -----------------------------------------------

Series compose(const Series& outer, std::span<const Series> inner) {
  if (static_cast<int>(inner.size()) != outer.nvars()) {
    throw InputError("compose: outer arity " + std::to_string(outer.nvars()) + " but " +
                     std::to_string(inner.size()) + " inner series");
  }
  const int target_nvars = inner.empty() ? 0 : inner[0].nvars();
  int order = outer.order();
  for (const auto& s : inner) {
    if (s.nvars() != target_nvars) throw InputError("compose: inner series disagree on arity");
    if (!outer.is_exact() && !s.constant_term().is_zero()) {
      throw InputError("compose: inner series with nonzero constant term");
    }
    order = std::min(order, s.order());
  }
  if (inner.empty()) return Series::constant(0, order, outer.constant_term());

  // powers[v][e] = inner[v]^e, truncated to the result order.
  std::vector<std::vector<Series>> powers(inner.size());
  for (std::size_t v = 0; v < inner.size(); ++v) {
    powers[v].push_back(Series::constant(target_nvars, order, GaussianRational(1)));
  }
  auto power = [&](int v, int e) -> const Series& {
    auto& p = powers[v];
    while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * inner[v].truncated(order));
    return p[e];
  };

  Series out(target_nvars, order);
  for (const auto& [m, c] : outer.terms()) {
    Series prod = Series::constant(target_nvars, order, c);
    for (int v = 0; v < outer.nvars() && !prod.is_zero(); ++v) {
      if (m.exp(v) > 0) prod = prod * power(v, m.exp(v));
    }
    out += prod;
  }
  return out;
}

std::vector<Series> compose_all(std::span<const Series> outer, std::span<const Series> inner) {
  std::vector<Series> out;
  out.reserve(outer.size());
  for (const auto& f : outer) out.push_back(compose(f, inner));
  return out;
}

ComplexMatrix linear_part(std::span<const Series> f, int first, int count) {
  ComplexMatrix j(static_cast<int>(f.size()), count);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (int c = 0; c < count; ++c) j(static_cast<int>(i), c) = f[i].coeff(Monomial::unit(first + c));
  }
  return j;
}

std::vector<Series> implicit_solve(std::span<const Series> f, int n_u) {
  const int p = static_cast<int>(f.size());
  if (p == 0) return {};
  int order = Series::kExact;
  for (const auto& fi : f) {
    if (fi.nvars() != n_u + p) throw InputError("implicit_solve: F must have n_u + p variables");
    if (!fi.constant_term().is_zero()) throw InputError("implicit_solve: F(0, 0) != 0");
    order = std::min(order, fi.order());
  }
  if (order >= Series::kExact) throw InputError("implicit_solve: F needs a finite order");

  const auto jinv = inverse(linear_part(f, n_u, p));
  if (!jinv) throw PreconditionError("implicit_solve: dF/dv(0) is singular");

  std::vector<Series> v(p, Series(n_u, order));
  for (int deg = 1; deg <= order; ++deg) {
    std::vector<Series> inner;
    inner.reserve(n_u + p);
    for (int i = 0; i < n_u; ++i) inner.push_back(Series::variable(n_u, deg, i));
    for (int i = 0; i < p; ++i) inner.push_back(v[i].truncated(deg));
    std::vector<Series> layer;
    layer.reserve(p);
    for (const auto& fi : f) layer.push_back(compose(fi.truncated(deg), inner).homogeneous_part(deg));
    for (int i = 0; i < p; ++i) {
      Series step(n_u, order);
      for (int j = 0; j < p; ++j) {
        if ((*jinv)(i, j).is_zero()) continue;
        // layer[j] carries order deg; accumulate termwise to keep `order`.
        for (const auto& [mono, c] : layer[j].terms()) {
          step.add_term(mono, c * (*jinv)(i, j));
        }
      }
      v[i] -= step;
    }
  }
  return v;
}

std::vector<Series> invert_map(std::span<const Series> g) {
  const int m = static_cast<int>(g.size());
  std::vector<int> shift(m);
  for (int j = 0; j < m; ++j) shift[j] = m + j;
  std::vector<Series> f;
  f.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (g[i].nvars() != m) throw InputError("invert_map: map must be square");
    if (!g[i].constant_term().is_zero()) throw InputError("invert_map: nonzero constant term");
    f.push_back(g[i].remapped(2 * m, shift) - Series::variable(2 * m, g[i].order(), i));
  }
  if (!inverse(linear_part(g, 0, m))) throw PreconditionError("invert_map: singular linear part");
  return implicit_solve(f, m);
}

std::vector<std::vector<Series>> invert_series_matrix(const std::vector<std::vector<Series>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return {};
  const int nvars = m[0][0].nvars();
  int order = Series::kExact;
  ComplexMatrix c0(n, n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(m[r].size()) != n) throw InputError("series matrix must be square");
    for (int c = 0; c < n; ++c) {
      order = std::min(order, m[r][c].order());
      c0(r, c) = m[r][c].constant_term();
    }
  }
  if (order >= Series::kExact) throw InputError("invert_series_matrix: needs a finite order");
  const auto q0 = inverse(c0);
  if (!q0) throw PreconditionError("series matrix has singular constant part");

  using SM = std::vector<std::vector<Series>>;
  auto mul = [&](const SM& a, const SM& b) {
    SM out(n, std::vector<Series>(n, Series(nvars, order)));
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k)
        for (int c = 0; c < n; ++c) out[r][c] += a[r][k] * b[k][c];
    return out;
  };
  SM q(n, std::vector<Series>(n));
  SM step(n, std::vector<Series>(n));  // -Q0 * (M - M0)
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      q[r][c] = Series::constant(nvars, order, (*q0)(r, c));
      Series acc(nvars, order);
      for (int k = 0; k < n; ++k) {
        Series e = m[k][c].truncated(order);
        e.add_term(Monomial{}, -m[k][c].constant_term());
        acc += e * (-(*q0)(r, k));
      }
      step[r][c] = acc;
    }
  }
  // (I + Q0 E)^{-1} Q0 = sum_i (-Q0 E)^i Q0; E has no constant term, so
  // the sum terminates after `order` powers.
  SM result = q;
  SM power = q;
  for (int i = 1; i <= order; ++i) {
    power = mul(step, power);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) result[r][c] += power[r][c];
  }
  return result;
}

}  // namespace crnd
