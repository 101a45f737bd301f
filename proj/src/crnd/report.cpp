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

#include "crnd/report.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"

#include "crnd/error.hpp"
#include "crnd/poly_parser.hpp"
#include "crnd/vforacle.hpp"

namespace crnd {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Json order_json(const std::optional<int>& v) { return v ? Json(*v) : Json("none"); }

std::optional<int> order_from_json(const Json& j, const char* key) {
  if (j.is_string() && j.get<std::string>() == "none") return std::nullopt;
  if (j.is_number_integer()) return j.get<int>();
  throw InputError(std::string("report: '") + key + "' must be an integer or \"none\"");
}

std::string order_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

std::string seq_text(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out.empty() ? "-" : out;
}

Json basepoint_json(const Basepoint& p) {
  Json z = Json::array(), s = Json::array();
  for (const auto& x : p.z) z.push_back(x.to_string());
  for (const auto& x : p.s) s.push_back(x.get_str());
  return Json{{"z", z}, {"s", s}};
}

Basepoint origin(int n, int d) {
  return Basepoint{std::vector<GaussianRational>(n), std::vector<Rational>(d)};
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("report: missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Analysis analyze(const ManifoldSpec& spec, const AnalysisOptions& options) {
  const auto t0 = Clock::now();
  DefiningPolynomial poly = spec.polynomial;
  if (options.order) {
    poly.dims.k = *options.order;
    poly.dims.validate();
  }
  const Dimensions dims = poly.dims;

  Analysis a;
  AnalysisReport& r = a.report;
  r.dims = dims;
  r.basepoint = options.at ? *options.at : spec.basepoint ? *spec.basepoint : origin(dims.n, dims.d);
  if (static_cast<int>(r.basepoint.z.size()) != dims.n || static_cast<int>(r.basepoint.s.size()) != dims.d) {
    throw InputError("basepoint has the wrong number of coordinates");
  }
  a.phi = recentre(poly, r.basepoint.z, r.basepoint.s);

  auto t = Clock::now();
  a.normal_form = eliminate_harmonic(a.phi);
  r.timings.normalize_ms = ms_since(t);
  r.normal_form_residual_zero = a.normal_form.residual_zero;

  t = Clock::now();
  const InvariantProfile matrix = invariant_profile(a.normal_form.psi);
  r.timings.invariants_ms = ms_since(t);
  r.r1 = matrix.r1;
  r.r2 = matrix.r2;
  r.nondeg_order = matrix.nondeg_order;
  r.strong_type = matrix.strong_type;

  if (options.run_oracle) {
    t = Clock::now();
    const InvariantProfile oracle = oracle_profile(a.phi);
    r.timings.oracle_ms = ms_since(t);
    r.finite_type = oracle.finite_type;
    r.oracle_agreement = oracle.r1 == matrix.r1 && oracle.r2 == matrix.r2;
  }
  r.timings.total_ms = ms_since(t0);
  return a;
}

std::string report_to_json(const AnalysisReport& r) {
  Json j;
  j["dims"] = Json{{"n", r.dims.n}, {"d", r.dims.d}, {"N", r.dims.N()}, {"m", r.dims.m()}, {"k", r.dims.k}};
  j["basepoint"] = basepoint_json(r.basepoint);
  j["r1"] = r.r1;
  j["r2"] = r.r2;
  j["nondeg_order"] = order_json(r.nondeg_order);
  j["strong_type"] = order_json(r.strong_type);
  j["finite_type"] = order_json(r.finite_type);
  j["certificates"] = Json{{"normal_form_residual_zero", r.normal_form_residual_zero},
                           {"oracle_agreement", r.oracle_agreement}};
  if (r.seed) j["seed"] = *r.seed;
  j["timings_ms"] = Json{{"normalize", r.timings.normalize_ms},
                         {"invariants", r.timings.invariants_ms},
                         {"oracle", r.timings.oracle_ms},
                         {"total", r.timings.total_ms}};
  return j.dump(2) + "\n";
}

AnalysisReport report_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("report: ") + e.what());
  }
  try {
    AnalysisReport r;
    const Json& dims = field(j, "dims");
    r.dims = Dimensions{field(dims, "n").get<int>(), field(dims, "d").get<int>(), field(dims, "k").get<int>(), 0};
    if (field(dims, "N").get<int>() != r.dims.N() || field(dims, "m").get<int>() != r.dims.m()) {
      throw InputError("report: inconsistent dims");
    }
    const Json& bp = field(j, "basepoint");
    for (const auto& z : field(bp, "z")) r.basepoint.z.push_back(parse_constant(z.get<std::string>()));
    for (const auto& s : field(bp, "s")) r.basepoint.s.push_back(parse_rational(s.get<std::string>()));
    r.r1 = field(j, "r1").get<std::vector<int>>();
    r.r2 = field(j, "r2").get<std::vector<int>>();
    r.nondeg_order = order_from_json(field(j, "nondeg_order"), "nondeg_order");
    r.strong_type = order_from_json(field(j, "strong_type"), "strong_type");
    r.finite_type = order_from_json(field(j, "finite_type"), "finite_type");
    const Json& cert = field(j, "certificates");
    r.normal_form_residual_zero = field(cert, "normal_form_residual_zero").get<bool>();
    r.oracle_agreement = field(cert, "oracle_agreement").get<bool>();
    if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
    const Json& tm = field(j, "timings_ms");
    r.timings.normalize_ms = field(tm, "normalize").get<double>();
    r.timings.invariants_ms = field(tm, "invariants").get<double>();
    r.timings.oracle_ms = field(tm, "oracle").get<double>();
    r.timings.total_ms = field(tm, "total").get<double>();
    return r;
  } catch (const Json::exception& e) {
    throw InputError(std::string("report: ") + e.what());
  }
}

std::string report_to_human(const AnalysisReport& r) {
  std::ostringstream os;
  os << "dimensions      n=" << r.dims.n << " d=" << r.dims.d << " N=" << r.dims.N() << " m=" << r.dims.m()
     << " k=" << r.dims.k << "\n"
     << "basepoint       " << format_point(r.basepoint) << "\n"
     << "r1              " << seq_text(r.r1) << "\n"
     << "r2              " << seq_text(r.r2) << "\n"
     << "nondegenerate   " << order_text(r.nondeg_order) << "\n"
     << "strong type     " << order_text(r.strong_type) << "\n"
     << "finite type     " << order_text(r.finite_type) << "\n"
     << "residual zero   " << (r.normal_form_residual_zero ? "yes" : "no") << "\n"
     << "oracle agrees   " << (r.oracle_agreement ? "yes" : "no") << "\n";
  if (r.seed) os << "seed            " << *r.seed << "\n";
  os << "time            " << static_cast<long>(r.timings.total_ms + 0.5) << " ms\n";
  return os.str();
}

namespace {

std::vector<std::string> h_names(const Dimensions& dims) {
  std::vector<std::string> names;
  for (int i = 0; i < dims.n; ++i) names.push_back("z" + std::to_string(i + 1));
  for (int j = 0; j < dims.d; ++j) names.push_back("w" + std::to_string(j + 1));
  return names;
}

}  // namespace

std::string normal_form_to_human(const Analysis& a) {
  const Dimensions& dims = a.phi.dims();
  const auto hn = h_names(dims);
  std::ostringstream os;
  for (int j = 0; j < dims.d; ++j) {
    os << "phi" << j + 1 << " = " << format_poly(a.phi[j].series(), dims) << "\n";
  }
  for (int j = 0; j < dims.d; ++j) {
    os << "psi" << j + 1 << " = " << format_poly(a.normal_form.psi[j].series(), dims) << "\n";
  }
  for (int j = 0; j < dims.d; ++j) os << "h" << j + 1 << " = " << a.normal_form.h[j].to_string(hn) << "\n";
  os << "residual zero through order " << dims.k << ": " << (a.normal_form.residual_zero ? "yes" : "no") << "\n";
  return os.str();
}

std::string normal_form_to_json(const Analysis& a) {
  const Dimensions& dims = a.phi.dims();
  const auto hn = h_names(dims);
  Json phi = Json::array(), psi = Json::array(), h = Json::array();
  for (int j = 0; j < dims.d; ++j) {
    phi.push_back(format_poly(a.phi[j].series(), dims));
    psi.push_back(format_poly(a.normal_form.psi[j].series(), dims));
    h.push_back(a.normal_form.h[j].to_string(hn));
  }
  Json j;
  j["dims"] = Json{{"n", dims.n}, {"d", dims.d}, {"N", dims.N()}, {"m", dims.m()}, {"k", dims.k}};
  j["basepoint"] = basepoint_json(a.report.basepoint);
  j["phi"] = phi;
  j["psi"] = psi;
  j["h"] = h;
  j["residual_zero"] = a.normal_form.residual_zero;
  return j.dump(2) + "\n";
}

std::string profile_to_human(const AnalysisReport& r) {
  std::ostringstream os;
  os << " j   r1(j)  r2(j)\n";
  for (int j = 1; j <= r.dims.k; ++j) {
    os << (j < 10 ? "  " : " ") << j << "   ";
    const std::string a = j - 1 < static_cast<int>(r.r1.size()) ? std::to_string(r.r1[j - 1]) : "-";
    const std::string b = j - 1 < static_cast<int>(r.r2.size()) ? std::to_string(r.r2[j - 1]) : "-";
    os << a << std::string(7 - a.size(), ' ') << b << "\n";
  }
  os << "nondegenerate " << order_text(r.nondeg_order) << ", strong type " << order_text(r.strong_type)
     << ", finite type " << order_text(r.finite_type) << "\n";
  return os.str();
}

SweepReport run_sweep(const ManifoldSpec& base, const ManifoldSpec& direction,
                      const std::vector<Rational>& t_grid, const std::vector<Basepoint>& points,
                      unsigned workers) {
  if (base.n != direction.n || base.d != direction.d) {
    throw InputError("sweep: direction must have the same n and d as the base");
  }
  DeformationFamily fam;
  fam.base = base.polynomial;
  fam.direction = direction.polynomial.components;
  fam.t_grid = t_grid;
  fam.basepoints = points;
  return deform_sweep(fam, base.k, workers);
}

std::string sweep_to_json(const SweepReport& s) {
  Json j;
  j["dims"] = Json{{"n", s.dims.n}, {"d", s.dims.d}, {"N", s.dims.N()}, {"m", s.dims.m()}, {"k", s.dims.k}};
  j["grid"] = Json{{"t_count", s.t_count}, {"basepoint_count", s.basepoint_count}};
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    Json x;
    x["t"] = e.t.get_str();
    x["basepoint"] = basepoint_json(e.basepoint);
    x["chart_failure"] = e.chart_failure;
    if (e.chart_failure) {
      x["diagnostic"] = e.diagnostic;
    } else {
      x["r1"] = e.profile->r1;
      x["r2"] = e.profile->r2;
      x["nondeg_order"] = order_json(e.profile->nondeg_order);
      x["strong_type"] = order_json(e.profile->strong_type);
    }
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  j["aggregates"] = Json{{"degenerate", s.degenerate},
                         {"non_strong_type", s.non_strong_type},
                         {"chart_failures", s.chart_failures}};
  return j.dump(2) + "\n";
}

std::string sweep_to_human(const SweepReport& s) {
  std::ostringstream os;
  os << "t, basepoint: nondegenerate / strong type\n";
  for (const auto& e : s.entries) {
    os << e.t.get_str() << ", " << format_point(e.basepoint) << ": ";
    if (e.chart_failure) {
      os << "chart failure (" << e.diagnostic << ")\n";
    } else {
      os << order_text(e.profile->nondeg_order) << " / " << order_text(e.profile->strong_type) << "\n";
    }
  }
  os << s.entries.size() << " entries, " << s.degenerate << " degenerate, " << s.non_strong_type
     << " without strong type, " << s.chart_failures << " chart failures\n";
  return os.str();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const GaussianRational v = parse_constant(text.substr(start, end - start));
    if (!v.is_real()) throw InputError("expected real values in '" + std::string(text) + "'");
    out.push_back(v.re());
    start = end + 1;
  }
  return out;
}

std::vector<Basepoint> parse_point_list(std::string_view text, int n, int d) {
  constexpr std::string_view kLattice = "lattice:";
  if (text.substr(0, kLattice.size()) == kLattice) {
    return basepoint_lattice(n, d, parse_rational_list(text.substr(kLattice.size())));
  }
  std::vector<Basepoint> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    out.push_back(parse_point(text.substr(start, end - start), n, d));
    start = end + 1;
  }
  return out;
}

std::string bounds_to_json(int m, int big_n) {
  const BoundConstants b = bound_constants(m, big_n);
  Json j{{"m", m}, {"N", big_n}, {"k1", b.k1}, {"k2", b.k2}, {"k2_prime", b.k2_prime}};
  return j.dump(2) + "\n";
}

std::string bounds_to_human(int m, int big_n) {
  const BoundConstants b = bound_constants(m, big_n);
  std::ostringstream os;
  os << "m=" << m << " N=" << big_n << ": k1=" << b.k1 << " k2=" << b.k2 << " k2'=" << b.k2_prime << "\n";
  return os.str();
}

namespace {

std::optional<std::int64_t> guarded(auto fn) {
  try {
    return fn();
  } catch (const InputError&) {
    return std::nullopt;
  }
}

}  // namespace

std::string codim_to_json(int n, int d, int k, int r) {
  auto opt = [](const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); };
  Json j{{"n", n}, {"d", d}, {"k", k}, {"r", r},
         {"codim_A_r", opt(guarded([&] { return codim_A_r(n, d, k, r); }))},
         {"codim_B_r", opt(guarded([&] { return codim_B_r(n, d, k, r); }))},
         {"minuses", opt(guarded([&] { return minuses(n, d, k); }))},
         {"pluses", opt(guarded([&] { return pluses(n, d, k); }))},
         {"k_double_prime", opt(guarded([&] { return k_double_prime(n, k); }))}};
  return j.dump(2) + "\n";
}

std::string codim_to_human(int n, int d, int k, int r) {
  auto txt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("n/a"); };
  std::ostringstream os;
  os << "n=" << n << " d=" << d << " k=" << k << " r=" << r << "\n"
     << "codim A_r   " << txt(guarded([&] { return codim_A_r(n, d, k, r); })) << "\n"
     << "codim B_r   " << txt(guarded([&] { return codim_B_r(n, d, k, r); })) << "\n"
     << "minuses     " << txt(guarded([&] { return minuses(n, d, k); })) << "\n"
     << "pluses      " << txt(guarded([&] { return pluses(n, d, k); })) << "\n"
     << "K''         " << txt(guarded([&] { return k_double_prime(n, k); })) << "\n";
  return os.str();
}

std::string trial_to_json(const TrialSummary& t) {
  Json j;
  j["dims"] = Json{{"n", t.dims.n}, {"d", t.dims.d}, {"N", t.dims.N()}, {"m", t.dims.m()}, {"k", t.dims.k}};
  j["seed"] = t.seed;
  j["samples"] = t.samples;
  j["degenerate"] = t.degenerate;
  j["no_strong_type"] = t.no_strong_type;
  j["bad"] = t.bad;
  j["bad_fraction"] = t.samples == 0 ? 0.0 : static_cast<double>(t.bad) / t.samples;
  return j.dump(2) + "\n";
}

std::string trial_to_human(const TrialSummary& t) {
  std::ostringstream os;
  os << "n=" << t.dims.n << " d=" << t.dims.d << " k=" << t.dims.k << " seed=" << t.seed << ": " << t.samples
     << " samples, " << t.degenerate << " degenerate, " << t.no_strong_type << " without strong type, " << t.bad
     << " bad\n";
  return os.str();
}

}  // namespace crnd
