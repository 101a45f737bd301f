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
#include <vector>

#include "crnd/invariants.hpp"
#include "crnd/jet.hpp"

namespace crnd {

/// splitmix64 finalizer; also used to derive per-task seeds.
std::uint64_t mix_seed(std::uint64_t x);
/// Seed of task `index` under a run seed.
std::uint64_t task_seed(std::uint64_t seed, std::uint64_t index);

/// Random nonharmonic jet. Every nonharmonic monomial up to order k gets a
/// nonzero coefficient with real and imaginary parts p/q, p in [-16, 16]
/// without 0, q in 1..8, and the conjugate monomial gets the conjugate.
/// Deterministic in (dims, seed).
DefiningJet sample_jet(const Dimensions& dims, std::uint64_t seed);

/// First component sum_{l < r} z_l zbar_l, the others 0. Rank A = r.
DefiningJet stratum_witness(const Dimensions& dims, int r);

struct ClosureRecord {
  int base_rank = 0;
  int target_rank = 0;
  std::vector<Rational> eps;
  std::vector<int> ranks;  // rank A(k-1) of psi + eps * witness(target)
  bool ok = false;         // every rank equals target_rank
};

/// The default schedule 1/2, 1/4, ..., 1/256.
std::vector<Rational> default_eps_schedule();

/// Perturbs psi (rank A = c with the last n - c columns of A zero) by
/// eps * (sum_{l < r} z_l zbar_l, 0, ..., 0). Throws PreconditionError when
/// psi is not in that position, InputError unless c <= r <= n.
ClosureRecord closure_perturb(const DefiningJet& psi, int target_rank,
                              const std::vector<Rational>& eps = default_eps_schedule());

struct Basepoint {
  std::vector<GaussianRational> z;
  std::vector<Rational> s;

  friend bool operator==(const Basepoint&, const Basepoint&) = default;
};

/// All points whose real coordinates (Re z, Im z, s) lie in `values`, in
/// lexicographic order of (Re z_1, Im z_1, ..., s_d).
std::vector<Basepoint> basepoint_lattice(int n, int d, const std::vector<Rational>& values);

/// Im w = base + t * direction, both exact polynomials with base.dims.
struct DeformationFamily {
  DefiningPolynomial base;
  std::vector<Series> direction;
  std::vector<Rational> t_grid;
  std::vector<Basepoint> basepoints;
};

struct SweepEntry {
  Rational t;
  Basepoint basepoint;
  bool is_base = false;  // t == 0
  bool chart_failure = false;
  std::string diagnostic;
  std::optional<InvariantProfile> profile;
};

struct SweepReport {
  Dimensions dims;
  std::vector<SweepEntry> entries;  // t-major, then basepoint order
  int degenerate = 0;               // no nondegeneracy order within k
  int non_strong_type = 0;          // no strong type within k
  int chart_failures = 0;
  std::size_t t_count = 0;
  std::size_t basepoint_count = 0;
};

/// Profiles of the recentred, normalized jets of every (t, basepoint) pair
/// at order k. `workers` = 0 uses the hardware concurrency; the report does
/// not depend on it.
SweepReport deform_sweep(const DeformationFamily& family, int k, unsigned workers = 0);

/// Rank at the origin of (x, y, s) -> (psi_{z zbar}, Re psi_{z^2 zbar},
/// Im psi_{z^2 zbar}) at the point (x + iy, s) of a hypersurface in C^2,
/// psi being the normalized 3-jet there. Throws InputError unless n = d = 1,
/// PreconditionError on chart failure at the origin.
int mu_transversality_rank(const DefiningPolynomial& phi);

struct TrialSummary {
  Dimensions dims;
  std::uint64_t seed = 0;
  int samples = 0;
  int degenerate = 0;       // r1(k-1) > 0
  int no_strong_type = 0;   // r2(k) > 0
  int bad = 0;              // either
};

/// sample_count jets sample_jet(dims, task_seed(seed, i)) and their profiles.
TrialSummary genericity_trial(const Dimensions& dims, int sample_count, std::uint64_t seed,
                              unsigned workers = 0);

}  // namespace crnd
