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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "crnd/jet.hpp"
#include "crnd/series.hpp"

namespace crnd {

// Grammar (whitespace and newlines are free):
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' integer]
//   atom   := integer | 'i' | variable | func '(' expr ')' | '(' expr ')'
//           | ('+'|'-') factor
//   func   := 'Re' | 'Im' | 'conj'
//   variable := 'z'<j> | 'zb'<j> | 's'<l>   (1-based)
//
// '-' may also be written as U+2212. Division is by nonzero constants only.

struct ParsedPoly {
  /// The exact polynomial (order Series::kExact).
  Series exact;
  /// Truncation at dims.k.
  Jet jet;
  /// Number of monomials above order k that were dropped.
  int dropped_terms = 0;
  std::vector<std::string> warnings;
};

/// Throws ParseError (line/column of the offending character, 1-based) on a
/// syntax error or an unknown variable.
ParsedPoly parse_poly(std::string_view text, const Dimensions& dims);

/// Parses one real component; additionally throws InputError
/// "component not formally real" when conjugation symmetry fails.
ParsedPoly parse_real_component(std::string_view text, const Dimensions& dims);

/// A constant expression (no variables), e.g. "1/4 - i/2".
GaussianRational parse_constant(std::string_view text);

/// Parser syntax for a series in the variables of dims.
std::string format_poly(const Series& s, const Dimensions& dims);

}  // namespace crnd
