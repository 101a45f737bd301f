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

#include "crnd/poly_parser.hpp"

#include <cctype>
#include <optional>

#include "crnd/error.hpp"

namespace crnd {

namespace {

constexpr int kMaxExponent = 255;

enum class Tok { kNum, kIdent, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t bytes) {
    for (std::size_t b = 0; b < bytes; ++b) {
      const auto c = static_cast<unsigned char>(src[i]);
      if (c == '\n') {
        ++line;
        col = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    const int l = line, cl = col;
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::kNum, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::kIdent, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (src.substr(i, 3) == "\xE2\x88\x92") {  // U+2212 minus sign
      out.push_back({Tok::kMinus, "-", l, cl});
      advance(3);
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '/': kind = Tok::kSlash; break;
      case '^': kind = Tok::kCaret; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      default: throw ParseError(l, cl, "unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back({kind, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::kEnd, "", line, col});
  return out;
}

std::optional<int> parse_index(std::string_view digits) {
  if (digits.empty() || digits.size() > 4) return std::nullopt;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  if (digits[0] == '0') return std::nullopt;
  return std::stoi(std::string(digits));
}

class Parser {
 public:
  // dims == nullptr parses constants only.
  Parser(std::string_view src, const Dimensions* dims)
      : toks_(lex(src)), dims_(dims), nvars_(dims ? dims->nvars() : 0) {}

  Series parse() {
    Series s = expr();
    if (peek().kind != Tok::kEnd) fail(peek(), "unexpected '" + peek().text + "'");
    return s;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(t.line, t.col, msg);
  }
  void expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) {
      fail(peek(), "expected " + what + (peek().kind == Tok::kEnd ? " at end of input" : ", found '" + peek().text + "'"));
    }
    ++pos_;
  }

  Series constant(const GaussianRational& c) const { return Series::constant(nvars_, Series::kExact, c); }

  Series expr() {
    Series acc = term();
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      const bool minus = take().kind == Tok::kMinus;
      Series rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Series term() {
    Series acc = factor();
    while (peek().kind == Tok::kStar || peek().kind == Tok::kSlash) {
      const Token& op = take();
      Series rhs = factor();
      if (op.kind == Tok::kStar) {
        acc = acc * rhs;
        continue;
      }
      if (rhs.degree() > 0) fail(op, "division by a non-constant expression");
      const GaussianRational c = rhs.constant_term();
      if (c.is_zero()) fail(op, "division by zero");
      acc *= c.inverse();
    }
    return acc;
  }

  Series factor() {
    if (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      const bool minus = take().kind == Tok::kMinus;
      Series f = factor();
      return minus ? -f : f;
    }
    Series base = atom();
    if (peek().kind == Tok::kCaret) {
      take();
      const Token& e = peek();
      if (e.kind != Tok::kNum) fail(e, "expected a nonnegative integer exponent");
      take();
      if (e.text.size() > 3 || std::stoi(e.text) > kMaxExponent) {
        fail(e, "exponent larger than " + std::to_string(kMaxExponent));
      }
      base = base.pow(std::stoi(e.text));
    }
    return base;
  }

  Series atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kNum: {
        take();
        return constant(GaussianRational(Rational(t.text)));
      }
      case Tok::kLParen: {
        take();
        Series inner = expr();
        expect(Tok::kRParen, "')'");
        return inner;
      }
      case Tok::kIdent:
        take();
        return identifier(t);
      default:
        fail(t, t.kind == Tok::kEnd ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
  }

  Series call_argument() {
    expect(Tok::kLParen, "'('");
    Series inner = expr();
    expect(Tok::kRParen, "')'");
    return inner;
  }

  Series conj(const Series& s) const { return dims_ ? conjugate_pairs(s, dims_->n) : s.conj_coeffs(); }

  Series identifier(const Token& t) {
    const std::string& id = t.text;
    if (id == "i") return constant(GaussianRational::i());
    if (id == "conj") return conj(call_argument());
    if (id == "Re") {
      const Series a = call_argument();
      return (a + conj(a)) * GaussianRational(Rational(1, 2));
    }
    if (id == "Im") {
      const Series a = call_argument();
      return (a - conj(a)) * GaussianRational(Rational(0), Rational(-1, 2));
    }
    if (!dims_) fail(t, "unknown name '" + id + "' in a constant");

    std::optional<int> var;
    auto indexed = [&](std::string_view prefix, int count, auto slot) {
      if (id.size() <= prefix.size() || id.compare(0, prefix.size(), prefix) != 0) return;
      const auto idx = parse_index(std::string_view(id).substr(prefix.size()));
      if (idx && *idx <= count) var = slot(*idx - 1);
    };
    indexed("zb", dims_->n, [&](int j) { return dims_->zb(j); });
    if (!var && id.rfind("zb", 0) != 0) indexed("z", dims_->n, [&](int j) { return dims_->z(j); });
    indexed("s", dims_->d, [&](int j) { return dims_->s(j); });
    indexed("p", dims_->params, [&](int j) { return dims_->param(j); });
    if (!var) fail(t, "unknown variable '" + id + "'");
    return Series::variable(nvars_, Series::kExact, *var);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Dimensions* dims_;
  int nvars_;
};

}  // namespace

ParsedPoly parse_poly(std::string_view text, const Dimensions& dims) {
  dims.validate();
  ParsedPoly out;
  out.exact = Parser(text, &dims).parse();
  for (const auto& [m, c] : out.exact.terms()) {
    if (m.degree() > dims.k) ++out.dropped_terms;
  }
  if (out.dropped_terms > 0) {
    out.warnings.push_back("dropped " + std::to_string(out.dropped_terms) + " term(s) above order " +
                           std::to_string(dims.k));
  }
  out.jet = Jet(dims, out.exact);
  return out;
}

ParsedPoly parse_real_component(std::string_view text, const Dimensions& dims) {
  ParsedPoly p = parse_poly(text, dims);
  if (!(conjugate_pairs(p.exact, dims.n) == p.exact)) throw InputError("component not formally real");
  return p;
}

GaussianRational parse_constant(std::string_view text) {
  const Series s = Parser(text, nullptr).parse();
  return s.constant_term();
}

std::string format_poly(const Series& s, const Dimensions& dims) {
  const auto names = variable_names(dims);
  return s.to_string(names);
}

}  // namespace crnd
