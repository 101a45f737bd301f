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

#include "crnd/jet.hpp"

#include "crnd/error.hpp"

namespace crnd {

void Dimensions::validate(bool allow_order_zero) const {
  if (n < 1) throw InputError("CR dimension n must be >= 1");
  if (d < 1) throw InputError("codimension d must be >= 1");
  if (k < (allow_order_zero ? 0 : 1)) throw InputError("jet order k must be >= 1");
  if (params < 0) throw InputError("negative parameter count");
  // Normalization needs 2n + 2d + params variables at once.
  if (2 * n + 2 * d + params > kMaxVars) throw InputError("dimensions exceed the variable limit");
}

Monomial make_monomial(const Dimensions& dims, std::span<const int> alpha,
                       std::span<const int> beta, std::span<const int> gamma) {
  if (static_cast<int>(alpha.size()) != dims.n || static_cast<int>(beta.size()) != dims.n ||
      static_cast<int>(gamma.size()) != dims.d) {
    throw InputError("multi-index length does not match dimensions");
  }
  Monomial m;
  for (int i = 0; i < dims.n; ++i) {
    m.set_exp(dims.z(i), alpha[i]);
    m.set_exp(dims.zb(i), beta[i]);
  }
  for (int j = 0; j < dims.d; ++j) m.set_exp(dims.s(j), gamma[j]);
  return m;
}

int z_degree(const Dimensions& dims, const Monomial& m) {
  int deg = 0;
  for (int i = 0; i < dims.n; ++i) deg += m.exp(dims.z(i));
  return deg;
}

int zb_degree(const Dimensions& dims, const Monomial& m) {
  int deg = 0;
  for (int i = 0; i < dims.n; ++i) deg += m.exp(dims.zb(i));
  return deg;
}

Series conjugate_pairs(const Series& s, int n, int z_first) {
  std::vector<int> map(s.nvars());
  for (int v = 0; v < s.nvars(); ++v) map[v] = v;
  for (int i = 0; i < n; ++i) {
    map[z_first + i] = z_first + n + i;
    map[z_first + n + i] = z_first + i;
  }
  return s.remapped(s.nvars(), map).conj_coeffs();
}

std::vector<std::string> variable_names(const Dimensions& dims) {
  std::vector<std::string> names;
  for (int i = 0; i < dims.n; ++i) names.push_back("z" + std::to_string(i + 1));
  for (int i = 0; i < dims.n; ++i) names.push_back("zb" + std::to_string(i + 1));
  for (int j = 0; j < dims.d; ++j) names.push_back("s" + std::to_string(j + 1));
  for (int p = 0; p < dims.params; ++p) names.push_back("p" + std::to_string(p + 1));
  return names;
}

// --- Jet -------------------------------------------------------------------

Jet::Jet(const Dimensions& dims) : dims_(dims), series_(dims.nvars(), dims.k) {
  dims.validate(true);
}

Jet::Jet(const Dimensions& dims, const Series& s) : dims_(dims) {
  dims.validate(true);
  if (s.nvars() != dims.nvars()) throw InputError("series arity does not match jet dimensions");
  if (s.order() < dims.k) throw InputError("series order below jet order");
  series_ = s.truncated(dims.k);
}

Jet Jet::z(const Dimensions& dims, int i) {
  return Jet(dims, Series::variable(dims.nvars(), dims.k, dims.z(i)));
}

Jet Jet::zb(const Dimensions& dims, int i) {
  return Jet(dims, Series::variable(dims.nvars(), dims.k, dims.zb(i)));
}

Jet Jet::s(const Dimensions& dims, int j) {
  return Jet(dims, Series::variable(dims.nvars(), dims.k, dims.s(j)));
}

Jet Jet::constant(const Dimensions& dims, const GaussianRational& c) {
  return Jet(dims, Series::constant(dims.nvars(), dims.k, c));
}

GaussianRational Jet::coeff(std::span<const int> alpha, std::span<const int> beta,
                            std::span<const int> gamma) const {
  return series_.coeff(make_monomial(dims_, alpha, beta, gamma));
}

Jet Jet::conjugate() const {
  Jet out(dims_);
  out.series_ = conjugate_pairs(series_, dims_.n);
  return out;
}

bool Jet::is_real() const { return conjugate().series_ == series_; }

Jet Jet::real_part() const {
  Jet out = *this + conjugate();
  out.series_ *= GaussianRational(Rational(1, 2));
  return out;
}

Jet Jet::imag_part() const {
  Jet out = *this - conjugate();
  out.series_ *= GaussianRational(Rational(0), Rational(-1, 2));  // 1/(2i)
  return out;
}

Jet Jet::derive(int var) const {
  if (dims_.k < 1) throw InputError("cannot differentiate a 0-jet");
  Dimensions lower = dims_;
  lower.k = dims_.k - 1;
  return Jet(lower, series_.derivative(var));
}

void Jet::check_same_dims(const Jet& o) const {
  if (!(dims_ == o.dims_)) throw InputError("jet dimension mismatch");
}

Jet& Jet::operator+=(const Jet& o) {
  check_same_dims(o);
  series_ += o.series_;
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  check_same_dims(o);
  series_ -= o.series_;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  a.check_same_dims(b);
  Jet out(a.dims_);
  out.series_ = a.series_ * b.series_;
  return out;
}

Jet operator*(const GaussianRational& c, const Jet& a) {
  Jet out = a;
  out.series_ *= c;
  return out;
}

Jet Jet::operator-() const {
  Jet out = *this;
  out.series_ = -series_;
  return out;
}

std::string Jet::to_string() const { return series_.to_string(variable_names(dims_)); }

// --- DefiningJet -----------------------------------------------------------

DefiningJet::DefiningJet(std::vector<Jet> components) : components_(std::move(components)) {
  if (components_.empty()) throw InputError("defining jet needs at least one component");
  dims_ = components_[0].dims();
  if (static_cast<int>(components_.size()) != dims_.d) {
    throw InputError("defining jet has " + std::to_string(components_.size()) +
                     " components but d = " + std::to_string(dims_.d));
  }
  for (std::size_t j = 0; j < components_.size(); ++j) {
    const Jet& c = components_[j];
    if (!(c.dims() == dims_)) throw InputError("defining jet components disagree on dimensions");
    if (!c.is_real()) {
      throw InputError("component " + std::to_string(j + 1) + " is not formally real");
    }
    if (!c.series().constant_term().is_zero()) {
      throw InputError("component " + std::to_string(j + 1) + " has a nonzero constant term");
    }
  }
}

DefiningJet DefiningJet::zero(const Dimensions& dims) {
  return DefiningJet(std::vector<Jet>(dims.d, Jet(dims)));
}

ComplexMatrix DefiningJet::s_jacobian() const {
  ComplexMatrix p(dims_.d, dims_.d);
  for (int l = 0; l < dims_.d; ++l) {
    for (int j = 0; j < dims_.d; ++j) {
      p(l, j) = components_[l].series().coeff(Monomial::unit(dims_.s(j)));
    }
  }
  return p;
}

bool DefiningJet::graph_invertible() const {
  ComplexMatrix m = ComplexMatrix::identity(dims_.d);
  const ComplexMatrix p = s_jacobian();
  for (int l = 0; l < dims_.d; ++l) {
    for (int j = 0; j < dims_.d; ++j) m(l, j) += GaussianRational::i() * p(l, j);
  }
  return rank_exact(m) == dims_.d;
}

DefiningJet DefiningPolynomial::jet_at_origin() const {
  std::vector<Jet> comps;
  comps.reserve(components.size());
  for (const auto& c : components) {
    Series t = c;
    t.add_term(Monomial{}, -c.constant_term());
    comps.emplace_back(dims, t);
  }
  return DefiningJet(std::move(comps));
}

}  // namespace crnd
