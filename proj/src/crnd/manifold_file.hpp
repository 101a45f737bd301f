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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crnd/genericity.hpp"
#include "crnd/jet.hpp"

namespace crnd {

// Manifold files:
//
//   # comment
//   [manifold]
//   n = 1
//   d = 1
//   k = 4
//   phi = ["2*Re(z1^3*zb1) + z1*zb1*s1"]
//
//   [basepoint]          # optional
//   z = ["1/4 + i/2"]
//   s = ["0"]
//
// Values are integers, double-quoted strings or arrays of strings; arrays
// may span lines. phi1 = "...", phi2 = "..." may replace the phi array.

struct ManifoldSpec {
  int n = 0, d = 0, k = 0;
  std::vector<std::string> phi;
  std::optional<Basepoint> basepoint;

  /// The parsed components as an exact polynomial (dims.k = k).
  DefiningPolynomial polynomial;
  /// Degree-overflow and similar notes.
  std::vector<std::string> warnings;

  Dimensions dims() const { return Dimensions{n, d, k, 0}; }
};

/// Throws ParseError with file positions, InputError on missing keys or a
/// component that is not formally real.
ManifoldSpec parse_manifold(std::string_view text);
ManifoldSpec load_manifold(const std::string& path);

/// "z1,...,zn,s1,...,sd", each a constant expression; s must be real.
Basepoint parse_point(std::string_view text, int n, int d);
/// The same format.
std::string format_point(const Basepoint& p);

std::string read_file(const std::string& path);
/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::string& path, std::string_view contents);

}  // namespace crnd
