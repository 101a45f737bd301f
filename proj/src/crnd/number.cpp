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

#include "crnd/number.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace crnd {

Rational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  auto digits = [&](std::size_t from) {
    std::size_t p = from;
    if (p < text.size() && (text[p] == '-' || text[p] == '+')) ++p;
    const std::size_t start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (p == start) throw std::invalid_argument("malformed rational '" + text + "'");
    return p;
  };
  pos = digits(0);
  mpz_class num(text.substr(0, pos), 10);
  mpz_class den(1);
  if (pos < text.size()) {
    if (text[pos] != '/') throw std::invalid_argument("malformed rational '" + text + "'");
    const std::size_t end = digits(pos + 1);
    if (end != text.size()) throw std::invalid_argument("malformed rational '" + text + "'");
    den = mpz_class(text.substr(pos + 1), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

GaussianRational GaussianRational::inverse() const {
  const Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) {
    if (im_ == 1) return "i";
    if (im_ == -1) return "-i";
    return im_.get_str() + "*i";
  }
  std::string out = "(" + re_.get_str();
  out += sgn(im_) > 0 ? "+" : "-";
  const Rational mag = abs(im_);
  if (mag != 1) out += mag.get_str() + "*";
  out += "i)";
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.to_string(); }

}  // namespace crnd
