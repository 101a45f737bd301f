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

#include "crnd/vforacle.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "crnd/error.hpp"
#include "crnd/matrix.hpp"

namespace crnd {

namespace {

const GaussianRational kI = GaussianRational::i();

Jet at_order(const Jet& j, int k) {
  Dimensions dims = j.dims();
  dims.k = k;
  return Jet(dims, j.series());
}

int slot_count(const Dimensions& dims) { return 2 * dims.n + dims.d; }

int conjugate_slot(const Dimensions& dims, int slot) {
  if (slot < dims.n) return slot + dims.n;
  if (slot < 2 * dims.n) return slot - dims.n;
  return slot;
}

std::vector<GaussianRational> conjugate_value(const Dimensions& dims,
                                              const std::vector<GaussianRational>& v) {
  std::vector<GaussianRational> out(v.size());
  for (int s = 0; s < static_cast<int>(v.size()); ++s) out[conjugate_slot(dims, s)] = v[s].conj();
  return out;
}

int span_dimension(const std::vector<std::vector<GaussianRational>>& vectors, int width) {
  return rank_exact(ComplexMatrix::from_rows(vectors, width));
}

// Keeps a maximal subfamily of fields that are linearly independent over
// constants, in input order.
std::vector<VectorFieldJet> independent_fields(const std::vector<VectorFieldJet>& fields) {
  std::map<std::pair<int, Monomial>, int, bool (*)(const std::pair<int, Monomial>&,
                                                   const std::pair<int, Monomial>&)>
      columns([](const std::pair<int, Monomial>& a, const std::pair<int, Monomial>& b) {
        if (a.first != b.first) return a.first < b.first;
        return GradedLex{}(a.second, b.second);
      });
  for (const auto& f : fields) {
    for (int s = 0; s < static_cast<int>(f.coeffs().size()); ++s) {
      for (const auto& [m, c] : f[s].series().terms()) columns.try_emplace({s, m}, 0);
    }
  }
  int next = 0;
  for (auto& [key, idx] : columns) idx = next++;

  std::vector<VectorFieldJet> kept;
  ComplexMatrix rows(0, next);
  int rank = 0;
  for (const auto& f : fields) {
    std::vector<GaussianRational> row(next);
    for (int s = 0; s < static_cast<int>(f.coeffs().size()); ++s) {
      for (const auto& [m, c] : f[s].series().terms()) row[columns.at({s, m})] = c;
    }
    ComplexMatrix trial = rows;
    trial.append_row(row);
    const int r = rank_exact(trial);
    if (r > rank) {
      rows = std::move(trial);
      rank = r;
      kept.push_back(f);
    }
  }
  return kept;
}

void require_order(const DefiningJet& phi) {
  if (phi.dims().params != 0) throw InputError("vector-field oracle: jet carries parameters");
}

}  // namespace

VectorFieldJet::VectorFieldJet(std::vector<Jet> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InputError("vector field needs coefficients");
  dims_ = coeffs_[0].dims();
  if (static_cast<int>(coeffs_.size()) != slot_count(dims_)) {
    throw InputError("vector field needs 2n + d coefficients");
  }
  for (const auto& c : coeffs_) {
    if (!(c.dims() == dims_)) throw InputError("vector field coefficients disagree on dimensions");
  }
}

VectorFieldJet VectorFieldJet::coordinate(const Dimensions& dims, int var) {
  std::vector<Jet> c(slot_count(dims), Jet(dims));
  c.at(var) = Jet::constant(dims, GaussianRational(1));
  return VectorFieldJet(std::move(c));
}

Jet VectorFieldJet::apply(const Jet& f) const {
  Dimensions fd = f.dims();
  fd.k = dims_.k;
  if (!(fd == dims_)) throw InputError("vector field applied to a jet of other dimensions");
  if (f.dims().k < 1) throw InputError("vector field applied to a 0-jet");
  const int order = std::min(dims_.k, f.dims().k - 1);
  Dimensions out_dims = dims_;
  out_dims.k = order;
  Jet out(out_dims);
  for (int s = 0; s < static_cast<int>(coeffs_.size()); ++s) {
    if (coeffs_[s].is_zero()) continue;
    out += at_order(coeffs_[s], order) * at_order(f.derive(s), order);
  }
  return out;
}

std::vector<GaussianRational> VectorFieldJet::value_at_origin() const {
  std::vector<GaussianRational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c.series().constant_term());
  return v;
}

VectorFieldJet VectorFieldJet::conjugate() const {
  std::vector<Jet> c(coeffs_.size());
  for (int s = 0; s < static_cast<int>(coeffs_.size()); ++s) {
    c[conjugate_slot(dims_, s)] = coeffs_[s].conjugate();
  }
  return VectorFieldJet(std::move(c));
}

VectorFieldJet VectorFieldJet::truncated(int order) const {
  if (order > dims_.k) throw InputError("cannot raise the order of a vector field");
  std::vector<Jet> c;
  for (const auto& x : coeffs_) c.push_back(at_order(x, order));
  return VectorFieldJet(std::move(c));
}

bool VectorFieldJet::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Jet& j) { return j.is_zero(); });
}

VectorFieldJet operator+(const VectorFieldJet& a, const VectorFieldJet& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Jet> c;
  for (std::size_t s = 0; s < a.coeffs_.size(); ++s) {
    c.push_back(at_order(a.coeffs_[s], order) + at_order(b.coeffs_.at(s), order));
  }
  return VectorFieldJet(std::move(c));
}

VectorFieldJet operator-(const VectorFieldJet& a, const VectorFieldJet& b) {
  return a + GaussianRational(-1) * b;
}

VectorFieldJet operator*(const GaussianRational& c, const VectorFieldJet& a) {
  std::vector<Jet> out;
  for (const auto& x : a.coeffs_) out.push_back(c * x);
  return VectorFieldJet(std::move(out));
}

VectorFieldJet bracket(const VectorFieldJet& x, const VectorFieldJet& y) {
  if (x.order() < 1 || y.order() < 1) throw InputError("bracket: order exhausted");
  const int order = std::min(x.order(), y.order()) - 1;
  std::vector<Jet> c;
  for (int s = 0; s < static_cast<int>(x.coeffs().size()); ++s) {
    c.push_back(at_order(x.apply(y[s]), order) - at_order(y.apply(x[s]), order));
  }
  return VectorFieldJet(std::move(c));
}

CrBasis cr_basis(const DefiningJet& phi) {
  require_order(phi);
  const Dimensions& dims = phi.dims();
  if (dims.k < 1) throw InputError("cr_basis: need k >= 1");
  const int n = dims.n, d = dims.d;
  Dimensions fd = dims;
  fd.k = dims.k - 1;

  std::vector<std::vector<Series>> m(d, std::vector<Series>(d));
  for (int l = 0; l < d; ++l) {
    for (int c = 0; c < d; ++c) {
      Series e = Series::constant(dims.nvars(), fd.k, GaussianRational(l == c ? 1 : 0));
      m[l][c] = e - kI * phi[l].derive(dims.s(c)).series();
    }
  }
  const auto minv = invert_series_matrix(m);

  CrBasis basis;
  for (int j = 0; j < n; ++j) {
    std::vector<Jet> coeffs(slot_count(dims), Jet(fd));
    coeffs[dims.z(j)] = Jet::constant(fd, GaussianRational(1));
    for (int l = 0; l < d; ++l) {
      Series a(dims.nvars(), fd.k);
      for (int c = 0; c < d; ++c) a += minv[l][c] * (kI * phi[c].derive(dims.z(j)).series());
      coeffs[dims.s(l)] = Jet(fd, a);
    }
    basis.l.emplace_back(std::move(coeffs));
    basis.lbar.push_back(basis.l.back().conjugate());
  }
  return basis;
}

std::vector<Jet> tangency_defect(const DefiningJet& phi, const CrBasis& basis) {
  const Dimensions& dims = phi.dims();
  std::vector<Jet> out;
  for (const auto& lj : basis.l) {
    for (int l = 0; l < dims.d; ++l) out.push_back(lj.apply(Jet::s(dims, l) - kI * phi[l]));
  }
  return out;
}

std::vector<int> degeneracy_oracle(const DefiningJet& phi) {
  const Dimensions& dims = phi.dims();
  const CrBasis basis = cr_basis(phi);
  const int big_n = dims.N();
  Dimensions gd = dims;
  gd.k = dims.k - 1;
  const GaussianRational half_over_i(Rational(0), Rational(-1, 2));  // 1/(2i)

  // Rows of rho_Z for rho^j = (w_j - wbar_j)/(2i) - phi^j(z, zbar, (w + wbar)/2).
  using Row = std::vector<Jet>;
  std::vector<Row> level;
  for (int j = 0; j < dims.d; ++j) {
    Row row;
    for (int q = 0; q < dims.n; ++q) row.push_back(-phi[j].derive(dims.z(q)));
    for (int l = 0; l < dims.d; ++l) {
      Jet e = Jet::constant(gd, j == l ? half_over_i : GaussianRational(0));
      row.push_back(e - GaussianRational(Rational(1, 2)) * phi[j].derive(dims.s(l)));
    }
    level.push_back(std::move(row));
  }

  std::vector<std::vector<GaussianRational>> values;
  auto record = [&](const std::vector<Row>& rows) {
    for (const auto& row : rows) {
      std::vector<GaussianRational> v;
      for (const auto& x : row) v.push_back(x.series().constant_term());
      values.push_back(std::move(v));
    }
  };
  record(level);

  std::vector<int> r1;
  for (int s = 1; s <= dims.k - 1; ++s) {
    std::vector<Row> next;
    for (const auto& row : level) {
      for (const auto& lb : basis.lbar) {
        Row applied;
        for (const auto& x : row) applied.push_back(lb.apply(x));
        next.push_back(std::move(applied));
      }
    }
    level = std::move(next);
    record(level);
    r1.push_back(big_n - span_dimension(values, big_n));
  }
  return r1;
}

std::vector<int> strong_type_oracle(const DefiningJet& phi) {
  const Dimensions& dims = phi.dims();
  const CrBasis basis = cr_basis(phi);
  const int width = slot_count(dims);

  std::vector<std::vector<GaussianRational>> values;
  auto record = [&](const std::vector<VectorFieldJet>& fields) {
    for (const auto& f : fields) {
      const auto v = f.value_at_origin();
      values.push_back(v);
      values.push_back(conjugate_value(dims, v));
    }
  };

  std::vector<VectorFieldJet> level = basis.lbar;
  record(level);
  std::vector<int> r2{width - span_dimension(values, width)};
  for (int l = 2; l <= dims.k; ++l) {
    std::vector<VectorFieldJet> next;
    for (const auto& li : basis.l) {
      for (const auto& x : level) next.push_back(bracket(li, x));
    }
    level = independent_fields(next);
    record(level);
    r2.push_back(width - span_dimension(values, width));
  }
  return r2;
}

std::optional<int> finite_type_oracle(const DefiningJet& phi) {
  const Dimensions& dims = phi.dims();
  const CrBasis basis = cr_basis(phi);
  const int width = slot_count(dims);

  std::vector<VectorFieldJet> generators = basis.l;
  generators.insert(generators.end(), basis.lbar.begin(), basis.lbar.end());

  std::vector<std::vector<GaussianRational>> values;
  std::vector<VectorFieldJet> level = generators;
  for (const auto& f : level) values.push_back(f.value_at_origin());
  if (span_dimension(values, width) == width) return 1;
  for (int l = 2; l <= dims.k; ++l) {
    std::vector<VectorFieldJet> next;
    for (const auto& g : generators) {
      for (const auto& x : level) next.push_back(bracket(g, x));
    }
    level = independent_fields(next);
    for (const auto& f : level) values.push_back(f.value_at_origin());
    if (span_dimension(values, width) == width) return l;
  }
  return std::nullopt;
}

bool lemma_ident_check(const DefiningJet& phi, std::span<const int> word, int l) {
  const Dimensions& dims = phi.dims();
  const int r = static_cast<int>(word.size());
  if (r < 1 || r > dims.k - 1) throw InputError("lemma_ident_check: need 1 <= r <= k-1");
  if (l < 0 || l >= dims.n) throw InputError("lemma_ident_check: index out of range");
  const CrBasis basis = cr_basis(phi);

  VectorFieldJet x = basis.lbar[l];
  std::vector<int> alpha(dims.n, 0);
  for (int idx = r - 1; idx >= 0; --idx) {
    if (word[idx] < 0 || word[idx] >= dims.n) throw InputError("lemma_ident_check: index out of range");
    x = bracket(basis.l[word[idx]], x);
    ++alpha[word[idx]];
  }
  Rational fact(1);
  for (int a : alpha) {
    for (int i = 2; i <= a; ++i) fact *= i;
  }
  std::vector<int> beta(dims.n, 0);
  beta[l] = 1;
  const std::vector<int> gamma(dims.d, 0);

  std::vector<GaussianRational> expected(slot_count(dims));
  for (int c = 0; c < dims.d; ++c) {
    expected[dims.s(c)] = GaussianRational(0, -2) * phi[c].coeff(alpha, beta, gamma) * GaussianRational(fact);
  }
  return x.value_at_origin() == expected;
}

InvariantProfile oracle_profile(const DefiningJet& phi) {
  InvariantProfile p;
  p.dims = phi.dims();
  p.r1 = degeneracy_oracle(phi);
  p.r2 = strong_type_oracle(phi);
  p.nondeg_order = first_zero(p.r1);
  p.strong_type = first_zero(p.r2);
  p.finite_type = finite_type_oracle(phi);
  p.finite_type_computed = true;
  return p;
}

}  // namespace crnd
