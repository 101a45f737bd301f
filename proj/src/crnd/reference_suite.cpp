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

#include "crnd/reference_suite.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "json.hpp"

#include "crnd/error.hpp"
#include "crnd/genericity.hpp"
#include "crnd/invariants.hpp"
#include "crnd/normalform.hpp"
#include "crnd/poly_parser.hpp"
#include "crnd/vforacle.hpp"

namespace crnd {

namespace {

DefiningPolynomial from_text(const Dimensions& dims, const std::vector<std::string>& comps) {
  DefiningPolynomial p{dims, {}};
  for (const auto& c : comps) p.components.push_back(parse_real_component(c, dims).exact);
  return p;
}

std::string seq(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

// Random real harmonic part: holomorphic monomials z^a s^c (a may be 0)
// and their conjugates, about half of them present.
DefiningJet harmonic_pollution(const Dimensions& dims, std::uint64_t seed) {
  std::mt19937_64 gen(mix_seed(seed));
  auto small = [&] {
    const long num = static_cast<long>(gen() % 9) - 4;
    const long den = 1 + static_cast<long>(gen() % 4);
    Rational q(num, den);
    q.canonicalize();
    return q;
  };
  std::vector<Jet> comps;
  for (int l = 0; l < dims.d; ++l) {
    Series s(dims.nvars(), dims.k);
    for (const auto& e : multi_indices(dims.nvars(), 1, dims.k)) {
      bool has_zb = false;
      for (int i = 0; i < dims.n; ++i) has_zb = has_zb || e[dims.zb(i)] != 0;
      if (has_zb || gen() % 2 == 0) continue;
      bool has_z = false;
      for (int i = 0; i < dims.n; ++i) has_z = has_z || e[dims.z(i)] != 0;
      const GaussianRational c = has_z ? GaussianRational(small(), small()) : GaussianRational(small());
      s.add_term(Monomial(e), c);
    }
    Jet j(dims, s);
    // Pure s terms already have real coefficients; doubling them is harmless.
    comps.push_back(j + j.conjugate());
  }
  return DefiningJet(std::move(comps));
}

struct Check {
  int id;
  std::string name;
  double limit_ms;
  std::function<bool(std::string&, std::string&)> body;  // (detail, note)
};

}  // namespace

DefiningPolynomial cubic_levi_example(int k) {
  return from_text(Dimensions{1, 1, k, 0}, {"2*Re(z1^3*zb1) + z1*zb1*s1"});
}

DefiningPolynomial quartic_example(int k) { return from_text(Dimensions{1, 1, k, 0}, {"z1^2*zb1^2"}); }

DefiningPolynomial null_quadric_example(int k) {
  return from_text(Dimensions{3, 2, k, 0}, {"z1*zb1 - z2*zb2", "2*Re(z1*zb3 + z2*zb3)"});
}

std::vector<CheckResult> run_reference_suite(unsigned workers) {
  std::vector<Check> checks;

  checks.push_back({1, "cubic Levi-degenerate hypersurface is 3-nondegenerate", 1000, [](std::string& detail, std::string&) {
    const DefiningJet phi = cubic_levi_example(4).jet_at_origin();
    const InvariantProfile m = invariant_profile(eliminate_harmonic(phi).psi);
    const InvariantProfile o = oracle_profile(phi);
    detail = "matrix r1 " + seq(m.r1) + ", oracle r1 " + seq(o.r1);
    return m.r1 == std::vector<int>{1, 1, 0} && o.r1 == m.r1 && m.nondeg_order == 3;
  }});

  checks.push_back({2, "transversality map has rank 3 at the origin", 5000, [](std::string& detail, std::string&) {
    const int r = mu_transversality_rank(cubic_levi_example(4));
    detail = "rank " + std::to_string(r);
    return r == 3;
  }});

  checks.push_back({3, "|z|^4: finite type 4, no strong type", 5000, [](std::string& detail, std::string&) {
    const DefiningJet phi = quartic_example(6).jet_at_origin();
    const auto ft = finite_type_oracle(phi);
    const InvariantProfile p = invariant_profile(eliminate_harmonic(phi).psi);
    detail = "finite type " + (ft ? std::to_string(*ft) : std::string("none")) + ", r1 " + seq(p.r1) + ", r2 " +
             seq(p.r2);
    return ft == 4 && p.r2 == std::vector<int>(6, 1) && p.r1 == std::vector<int>(5, 1);
  }});

  checks.push_back({4, "null quadric: rank A = 3, Levi pencil determinant = 0", 1000, [](std::string& detail, std::string&) {
    const DefiningJet phi = null_quadric_example(2).jet_at_origin();
    const DefiningJet psi = eliminate_harmonic(phi).psi;
    const int rank = rank_exact(build_matrix_A(psi, 1));
    const Series det = levi_pencil_determinant(psi);
    detail = "rank A " + std::to_string(rank) + ", det(b1 H1 + b2 H2) = " +
             det.to_string(std::vector<std::string>{"b1", "b2"});
    return rank == 3 && det.is_zero();
  }});

  checks.push_back({5, "bound constants k1, k2, k2'", 1000, [](std::string& detail, std::string&) {
    bool ok = bound_constants(3, 2).k1 == 3 && bound_constants(7, 5).k1 == 2;
    for (int big_n = 2; big_n <= 12; ++big_n) {
      for (int m = big_n + 2; m <= 2 * big_n - 3; ++m) {
        if (m == 7 && big_n == 5) continue;
        ok = ok && bound_constants(m, big_n).k1 == 1;
      }
    }
    std::string k2s, k2ps;
    for (int big_n = 2; big_n <= 10; ++big_n) {
      const BoundConstants b = bound_constants(2 * big_n - 1, big_n);
      const int want = big_n == 2 ? 4 : big_n == 3 ? 3 : 2;
      ok = ok && b.k2 == want && b.k2_prime == want;
      k2s += (k2s.empty() ? "" : ",") + std::to_string(b.k2);
      k2ps += (k2ps.empty() ? "" : ",") + std::to_string(b.k2_prime);
    }
    detail = "k1(3,2)=" + std::to_string(bound_constants(3, 2).k1) + ", k2(2N-1,N)=" + k2s + ", k2'(2N-1,N)=" + k2ps;
    return ok;
  }});

  checks.push_back({6, "codimension identities", 1000, [](std::string& detail, std::string&) {
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
      for (int d = 1; d <= 4; ++d) {
        for (int k = 2; k <= 6; ++k) {
          ok = ok && minuses(n, d, k) == codim_A_r(n, d, k, n - 1) && pluses(n, d, k) == codim_B_r(n, d, k, d - 1);
        }
      }
    }
    detail = "grid n,d in 1..4, k in 2..6; codim A_0(1,1,3) = " + std::to_string(codim_A_r(1, 1, 3, 0));
    return ok && codim_A_r(1, 1, 3, 0) == 3;
  }});

  checks.push_back({7, "matrix path equals vector-field oracle on random jets", 60000, [](std::string& detail, std::string&) {
    int count = 0, agree = 0;
    const int dims_list[4][2] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
    for (const auto& nd : dims_list) {
      for (int k = 2; k <= 4; ++k) {
        for (std::uint64_t s = 0; s < 3; ++s) {
          const DefiningJet psi = sample_jet(Dimensions{nd[0], nd[1], k, 0}, task_seed(0x07, count));
          const InvariantProfile m = invariant_profile(psi);
          const InvariantProfile o = oracle_profile(psi);
          ++count;
          agree += m.r1 == o.r1 && m.r2 == o.r2;
        }
      }
    }
    detail = std::to_string(agree) + "/" + std::to_string(count) + " agree";
    return agree == count && count >= 30;
  }});

  checks.push_back({8, "normal form certificates under harmonic pollution", 60000, [](std::string& detail, std::string&) {
    int count = 0, good = 0;
    const int dims_list[4][2] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
    for (const auto& nd : dims_list) {
      for (int k = 2; k <= 4; ++k) {
        for (int s = 0; s < 3; ++s) {
          const Dimensions dims{nd[0], nd[1], k, 0};
          const DefiningJet psi0 = sample_jet(dims, task_seed(0x08, count));
          const DefiningJet eta = harmonic_pollution(dims, task_seed(0x18, count));
          // The graph Im w = psi0 rewritten with harmonic part eta.
          const DefiningJet phi = reconstruct_phi(eta.components(), psi0);
          ++count;
          const NormalForm nf = eliminate_harmonic(phi);
          bool ok = is_nonharmonic(nf.psi) && nf.residual_zero && nf.psi == psi0;
          for (const auto& r : substitution_residual(phi, nf.h, nf.psi)) ok = ok && r.truncated(k).is_zero();
          // h(0, s) = s + i phi(0, 0, s).
          const int hv = dims.n + dims.d;
          std::vector<int> to_h(dims.nvars(), 0);
          for (int j = 0; j < dims.d; ++j) to_h[dims.s(j)] = dims.n + j;
          for (int l = 0; l < dims.d; ++l) {
            const Series axis = nf.h[l].filtered([&](const Monomial& m) {
              for (int i = 0; i < dims.n; ++i) {
                if (m.exp(i) != 0) return false;
              }
              return true;
            });
            const Series phi_axis = phi[l].series().filtered([&](const Monomial& m) {
              return z_degree(dims, m) == 0 && zb_degree(dims, m) == 0;
            });
            const Series want = (Series::variable(hv, k, dims.n + l) +
                                 GaussianRational::i() * phi_axis.remapped(hv, to_h)).truncated(k);
            ok = ok && axis == want;
          }
          ok = ok && invariant_profile(nf.psi) == invariant_profile(psi0);
          good += ok;
        }
      }
    }
    detail = std::to_string(good) + "/" + std::to_string(count) + " certified";
    return good == count && count >= 30;
  }});

  checks.push_back({9, "genericity trials have no degenerate samples", 60000, [workers](std::string& detail, std::string&) {
    const TrialSummary a = genericity_trial(Dimensions{1, 1, 2, 0}, 1000, 1, workers);
    const TrialSummary b = genericity_trial(Dimensions{2, 2, 2, 0}, 1000, 1, workers);
    detail = "(1,1,2): " + std::to_string(a.bad) + "/1000 bad, (2,2,2): " + std::to_string(b.bad) + "/1000 bad";
    return a.samples == 1000 && b.samples == 1000 && a.bad == 0 && b.bad == 0;
  }});

  checks.push_back({10, "deformation sweep of the flat graph by z zbar", 30000, [workers](std::string& detail, std::string&) {
    const Dimensions dims{1, 1, 3, 0};
    DeformationFamily fam;
    fam.base = DefiningPolynomial{dims, {Series(dims.nvars(), Series::kExact)}};
    fam.direction = from_text(dims, {"z1*zb1"}).components;
    fam.t_grid.emplace_back(0);
    for (int i = 1; i <= 8; ++i) {
      fam.t_grid.emplace_back(i, 3);
      fam.t_grid.emplace_back(-2 * i + 1, 5);
    }
    fam.basepoints = basepoint_lattice(1, 1, {Rational(-1, 4), Rational(0), Rational(1, 4)});
    const SweepReport rep = deform_sweep(fam, 3, workers);
    int good = 0;
    for (const auto& e : rep.entries) {
      if (e.chart_failure) continue;
      const InvariantProfile& p = *e.profile;
      if (e.is_base) {
        good += p.r1 == std::vector<int>(2, 1) && p.r2 == std::vector<int>(3, 1);
      } else {
        good += p.nondeg_order == 1 && p.strong_type == 2;
      }
    }
    detail = std::to_string(good) + "/" + std::to_string(rep.entries.size()) + " entries as expected (" +
             std::to_string(fam.t_grid.size()) + " t values x " + std::to_string(fam.basepoints.size()) + " points)";
    return rep.entries.size() == 17 * 27 && good == static_cast<int>(rep.entries.size());
  }});

  checks.push_back({11, "closure perturbations jump to the target rank", 10000, [](std::string& detail, std::string&) {
    int pairs = 0, good = 0;
    for (int n = 1; n <= 3; ++n) {
      for (int d = 1; d <= 2; ++d) {
        const Dimensions dims{n, d, 3, 0};
        for (int c = 0; c < n; ++c) {
          for (int r = c + 1; r <= n; ++r) {
            ++pairs;
            good += closure_perturb(stratum_witness(dims, c), r).ok;
          }
        }
      }
    }
    detail = std::to_string(good) + "/" + std::to_string(pairs) + " witness pairs, eps = 1/2..1/256";
    return good == pairs;
  }});

  checks.push_back({12, "independent conditions for A_0 at n = d = 1, k = 4", 1000, [](std::string& detail, std::string& note) {
    const int brute = brute_force_codim_A0(1, 1, 4);
    const auto formula = codim_A_r(1, 1, 4, 0);
    detail = "brute force " + std::to_string(brute) + ", formula " + std::to_string(formula);
    note = "published count is 6; unresolved discrepancy, not asserted";
    return brute == formula && formula == 5;
  }});

  std::vector<CheckResult> results;
  for (const auto& c : checks) {
    CheckResult r;
    r.id = c.id;
    r.name = c.name;
    r.limit_ms = c.limit_ms;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.passed = c.body(r.detail, r.note);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (r.elapsed_ms > r.limit_ms) {
      r.passed = false;
      r.detail += " (over time limit)";
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string suite_to_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["detail"] = r.detail;
    if (!r.note.empty()) j["note"] = r.note;
    j["elapsed_ms"] = r.elapsed_ms;
    j["limit_ms"] = r.limit_ms;
    arr.push_back(std::move(j));
    all = all && r.passed;
  }
  nlohmann::ordered_json out;
  out["passed"] = all;
  out["checks"] = std::move(arr);
  return out.dump(2) + "\n";
}

std::string suite_to_human(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  int passed = 0;
  for (const auto& r : results) {
    os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail << " ("
       << static_cast<long>(r.elapsed_ms + 0.5) << " ms)\n";
    if (!r.note.empty()) os << "     note: " << r.note << "\n";
    passed += r.passed;
  }
  os << passed << "/" << results.size() << " checks passed\n";
  return os.str();
}

}  // namespace crnd
