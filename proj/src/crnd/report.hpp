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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crnd/genericity.hpp"
#include "crnd/invariants.hpp"
#include "crnd/manifold_file.hpp"
#include "crnd/normalform.hpp"

namespace crnd {

struct Timings {
  double normalize_ms = 0;
  double invariants_ms = 0;
  double oracle_ms = 0;
  double total_ms = 0;

  friend bool operator==(const Timings&, const Timings&) = default;
};

struct AnalysisReport {
  Dimensions dims;
  Basepoint basepoint;
  std::vector<int> r1;
  std::vector<int> r2;
  std::optional<int> nondeg_order;
  std::optional<int> strong_type;
  std::optional<int> finite_type;
  bool normal_form_residual_zero = false;
  bool oracle_agreement = false;
  std::optional<std::uint64_t> seed;
  Timings timings;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalysisOptions {
  std::optional<Basepoint> at;  // overrides the file's basepoint
  std::optional<int> order;     // overrides the file's k
  bool run_oracle = true;
};

struct Analysis {
  AnalysisReport report;
  DefiningJet phi;  // recentred jet
  NormalForm normal_form;
};

/// Recentres, normalizes, and computes both the matrix-path profile and
/// (unless disabled) the vector-field profile. Throws PreconditionError when
/// the graph is not normalizable at the point.
Analysis analyze(const ManifoldSpec& spec, const AnalysisOptions& options = {});

/// Keys, in order: dims{n,d,N,m,k}, basepoint{z,s}, r1, r2, nondeg_order,
/// strong_type, finite_type, certificates{normal_form_residual_zero,
/// oracle_agreement}, seed (when set), timings_ms. Absent orders are "none".
std::string report_to_json(const AnalysisReport& r);
/// Inverse of report_to_json; throws InputError on schema violations.
AnalysisReport report_from_json(std::string_view text);
std::string report_to_human(const AnalysisReport& r);

/// psi and h in parser syntax plus the residual certificate.
std::string normal_form_to_human(const Analysis& a);
std::string normal_form_to_json(const Analysis& a);

/// Per-order table r1(j), r2(j).
std::string profile_to_human(const AnalysisReport& r);

/// Deformation sweep of spec by direction (same n, d) at spec.k.
SweepReport run_sweep(const ManifoldSpec& base, const ManifoldSpec& direction,
                      const std::vector<Rational>& t_grid, const std::vector<Basepoint>& points,
                      unsigned workers = 0);
std::string sweep_to_json(const SweepReport& s);
std::string sweep_to_human(const SweepReport& s);

/// "a,b,c" of real constants.
std::vector<Rational> parse_rational_list(std::string_view text);
/// "lattice:v1,v2,..." or "z..,s..;z..,s..;...".
std::vector<Basepoint> parse_point_list(std::string_view text, int n, int d);

std::string bounds_to_json(int m, int big_n);
std::string bounds_to_human(int m, int big_n);
std::string codim_to_json(int n, int d, int k, int r);
std::string codim_to_human(int n, int d, int k, int r);

std::string trial_to_json(const TrialSummary& t);
std::string trial_to_human(const TrialSummary& t);

}  // namespace crnd
