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
#include <vector>

#include "crnd/jet.hpp"

namespace crnd {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  /// Informational notes (recorded, not asserted).
  std::string note;
  double elapsed_ms = 0;
  double limit_ms = 0;
};

/// The built-in reference examples, one check per item. Deterministic and
/// self-contained. A check fails when its value is wrong or when it exceeds
/// its time limit.
std::vector<CheckResult> run_reference_suite(unsigned workers = 0);

std::string suite_to_json(const std::vector<CheckResult>& results);
std::string suite_to_human(const std::vector<CheckResult>& results);

/// Standard examples shared by the suite, the CLI data files and the tests.
/// Im w = 2 Re(z^3 zbar) + z zbar s at order k.
DefiningPolynomial cubic_levi_example(int k);
/// Im w = |z|^4 at order k.
DefiningPolynomial quartic_example(int k);
/// (|z1|^2 - |z2|^2, 2 Re(z1 zbar3 + z2 zbar3)) at order k.
DefiningPolynomial null_quadric_example(int k);

}  // namespace crnd
