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

#include "crnd.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "crnd/error.hpp"
#include "crnd/manifold_file.hpp"
#include "crnd/reference_suite.hpp"
#include "crnd/report.hpp"

struct crnd_manifold {
  crnd::ManifoldSpec spec;
};

struct crnd_report {
  crnd::AnalysisReport report;
};

namespace {

thread_local std::string g_last_error;

crnd_status fail(crnd_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <typename Fn>
crnd_status guard(Fn fn) {
  try {
    g_last_error.clear();
    fn();
    return CRND_OK;
  } catch (const crnd::Error& e) {
    switch (e.kind()) {
      case crnd::ErrorKind::kInput: return fail(CRND_INPUT_ERROR, e.what());
      case crnd::ErrorKind::kPrecondition: return fail(CRND_PRECONDITION_ERROR, e.what());
      case crnd::ErrorKind::kInternal: return fail(CRND_INTERNAL_ERROR, e.what());
    }
    return fail(CRND_INTERNAL_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CRND_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(CRND_INTERNAL_ERROR, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) throw crnd::InputError(std::string(what) + " must not be null");
}

bool json(crnd_format f) { return f == CRND_FORMAT_JSON; }

std::optional<crnd::Basepoint> point_arg(const crnd_manifold* m, const char* point) {
  if (!point) return std::nullopt;
  return crnd::parse_point(point, m->spec.n, m->spec.d);
}

}  // namespace

extern "C" {

const char* crnd_last_error(void) { return g_last_error.c_str(); }

void crnd_string_free(char* s) { std::free(s); }

const char* crnd_version(void) { return "0.1.0"; }

crnd_status crnd_manifold_load(const char* path, crnd_manifold** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    try {
      *out = new crnd_manifold{crnd::load_manifold(path)};
    } catch (const crnd::ParseError& e) {
      throw crnd::InputError(std::string(path) + ":" + e.what());
    }
  });
}

crnd_status crnd_manifold_parse(const char* text, crnd_manifold** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    *out = new crnd_manifold{crnd::parse_manifold(text)};
  });
}

void crnd_manifold_free(crnd_manifold* m) { delete m; }

crnd_status crnd_manifold_warnings(const crnd_manifold* m, char** out) {
  return guard([&] {
    require(m, "manifold");
    require(out, "out");
    std::string s;
    for (const auto& w : m->spec.warnings) s += w + "\n";
    *out = dup(s);
  });
}

crnd_status crnd_analyze(const crnd_manifold* m, const char* point, int order, crnd_report** out) {
  return guard([&] {
    require(m, "manifold");
    require(out, "out");
    *out = nullptr;
    crnd::AnalysisOptions opt;
    opt.at = point_arg(m, point);
    if (order > 0) opt.order = order;
    *out = new crnd_report{crnd::analyze(m->spec, opt).report};
  });
}

void crnd_report_free(crnd_report* r) { delete r; }

crnd_status crnd_report_render(const crnd_report* r, crnd_format format, char** out) {
  return guard([&] {
    require(r, "report");
    require(out, "out");
    *out = dup(json(format) ? crnd::report_to_json(r->report) : crnd::report_to_human(r->report));
  });
}

crnd_status crnd_report_profile_table(const crnd_report* r, char** out) {
  return guard([&] {
    require(r, "report");
    require(out, "out");
    *out = dup(crnd::profile_to_human(r->report));
  });
}

crnd_status crnd_report_write_json(const crnd_report* r, const char* path) {
  return guard([&] {
    require(r, "report");
    require(path, "path");
    crnd::write_file_atomic(path, crnd::report_to_json(r->report));
  });
}

crnd_status crnd_report_reformat(const char* text, crnd_format format, char** out) {
  return guard([&] {
    require(text, "json");
    require(out, "out");
    const crnd::AnalysisReport r = crnd::report_from_json(text);
    *out = dup(json(format) ? crnd::report_to_json(r) : crnd::report_to_human(r));
  });
}

crnd_status crnd_normalize(const crnd_manifold* m, const char* point, crnd_format format, char** out) {
  return guard([&] {
    require(m, "manifold");
    require(out, "out");
    crnd::AnalysisOptions opt;
    opt.at = point_arg(m, point);
    opt.run_oracle = false;
    const crnd::Analysis a = crnd::analyze(m->spec, opt);
    *out = dup(json(format) ? crnd::normal_form_to_json(a) : crnd::normal_form_to_human(a));
  });
}

crnd_status crnd_sweep(const crnd_manifold* base, const crnd_manifold* direction, const char* t_grid,
                       const char* points, unsigned workers, crnd_format format, char** out) {
  return guard([&] {
    require(base, "base");
    require(direction, "direction");
    require(t_grid, "t_grid");
    require(points, "points");
    require(out, "out");
    const auto ts = crnd::parse_rational_list(t_grid);
    const auto pts = crnd::parse_point_list(points, base->spec.n, base->spec.d);
    const crnd::SweepReport s = crnd::run_sweep(base->spec, direction->spec, ts, pts, workers);
    *out = dup(json(format) ? crnd::sweep_to_json(s) : crnd::sweep_to_human(s));
  });
}

crnd_status crnd_bounds(int m, int big_n, crnd_format format, char** out) {
  return guard([&] {
    require(out, "out");
    *out = dup(json(format) ? crnd::bounds_to_json(m, big_n) : crnd::bounds_to_human(m, big_n));
  });
}

crnd_status crnd_codim(int n, int d, int k, int r, crnd_format format, char** out) {
  return guard([&] {
    require(out, "out");
    crnd::Dimensions{n, d, k, 0}.validate();
    *out = dup(json(format) ? crnd::codim_to_json(n, d, k, r) : crnd::codim_to_human(n, d, k, r));
  });
}

crnd_status crnd_trial(int n, int d, int k, int samples, uint64_t seed, unsigned workers, crnd_format format,
                       char** out) {
  return guard([&] {
    require(out, "out");
    const crnd::TrialSummary t = crnd::genericity_trial(crnd::Dimensions{n, d, k, 0}, samples, seed, workers);
    *out = dup(json(format) ? crnd::trial_to_json(t) : crnd::trial_to_human(t));
  });
}

crnd_status crnd_verify_reference(unsigned workers, crnd_format format, char** out, int* all_passed) {
  return guard([&] {
    require(out, "out");
    require(all_passed, "all_passed");
    const auto results = crnd::run_reference_suite(workers);
    int ok = 1;
    for (const auto& r : results) ok = ok && r.passed;
    *all_passed = ok;
    *out = dup(json(format) ? crnd::suite_to_json(results) : crnd::suite_to_human(results));
  });
}

crnd_status crnd_write_file(const char* path, const char* text) {
  return guard([&] {
    require(path, "path");
    require(text, "text");
    crnd::write_file_atomic(path, text);
  });
}

}  // extern "C"
