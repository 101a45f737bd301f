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

// crnd: command-line front end over the C API.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "crnd.h"

namespace {

struct ManifoldDeleter {
  void operator()(crnd_manifold* m) const { crnd_manifold_free(m); }
};
struct ReportDeleter {
  void operator()(crnd_report* r) const { crnd_report_free(r); }
};
using Manifold = std::unique_ptr<crnd_manifold, ManifoldDeleter>;
using Report = std::unique_ptr<crnd_report, ReportDeleter>;

// Carries a failed status up to main.
struct Failure {
  crnd_status status;
};

void check(crnd_status s) {
  if (s != CRND_OK) {
    std::fprintf(stderr, "crnd: error: %s\n", crnd_last_error());
    throw Failure{s};
  }
}

std::string take(char* s) {
  std::string out = s ? s : "";
  crnd_string_free(s);
  return out;
}

Manifold load(const std::string& path) {
  crnd_manifold* m = nullptr;
  check(crnd_manifold_load(path.c_str(), &m));
  Manifold owned(m);
  char* w = nullptr;
  check(crnd_manifold_warnings(m, &w));
  const std::string warnings = take(w);
  std::size_t start = 0;
  while (start < warnings.size()) {
    const std::size_t end = warnings.find('\n', start);
    std::fprintf(stderr, "crnd: warning: %s: %s\n", path.c_str(), warnings.substr(start, end - start).c_str());
    start = end + 1;
  }
  return owned;
}

// Writes to stdout, or atomically to `path` when given.
void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
  } else {
    check(crnd_write_file(path.c_str(), text.c_str()));
  }
}

crnd_format format_of(const std::string& f) { return f == "json" ? CRND_FORMAT_JSON : CRND_FORMAT_HUMAN; }

const char* opt_cstr(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact CR nondegeneracy invariants of generic submanifolds Im w = phi(z, zbar, Re w)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(crnd_version()));

  std::string format = "human";
  std::string out_path;
  unsigned threads = 0;
  const auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));
  };

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Invariant profile of a manifold file");
  std::string file, at, json_path;
  int order = 0;
  analyze->add_option("FILE", file, "Manifold description")->required();
  analyze->add_option("--at", at, "Basepoint z1,..,zn,s1,..,sd");
  analyze->add_option("--json", json_path, "Also write the JSON report to PATH");
  analyze->add_option("--order", order, "Override the jet order k")->check(CLI::PositiveNumber);
  add_format(analyze);

  // normalize
  auto* normalize = app.add_subcommand("normalize", "Remove harmonic terms and print psi and h");
  normalize->add_option("FILE", file, "Manifold description")->required();
  normalize->add_option("--at", at, "Basepoint z1,..,zn,s1,..,sd");
  add_format(normalize);

  // profile
  auto* profile = app.add_subcommand("profile", "Table of r1(j), r2(j) up to a given order");
  int max_order = 0;
  profile->add_option("FILE", file, "Manifold description")->required();
  profile->add_option("--max-order", max_order, "Jet order K")->required()->check(CLI::PositiveNumber);
  profile->add_option("--at", at, "Basepoint z1,..,zn,s1,..,sd");
  add_format(profile);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Profiles of phi + t f over a grid of t and basepoints");
  std::string direction, t_grid, points;
  sweep->add_option("FILE", file, "Base manifold")->required();
  sweep->add_option("--direction", direction, "Manifold file whose phi is the direction f")->required();
  sweep->add_option("--t-grid", t_grid, "Comma-separated rationals")->required();
  sweep->add_option("--points", points, "lattice:v1,v2,.. or z..,s..;z..,s..")->required();
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");
  sweep->add_option("--out", out_path, "Write the output to PATH");
  add_format(sweep);

  // tables
  auto* tables = app.add_subcommand("tables", "Bound constants or codimension formulas");
  int m = 0, big_n = 0;
  std::vector<int> codim;
  auto* m_opt = tables->add_option("--m", m, "Real dimension m");
  auto* n_opt = tables->add_option("--N", big_n, "Complex dimension N");
  auto* codim_opt = tables->add_option("--codim", codim, "n d k r")->expected(4);
  m_opt->needs(n_opt);
  n_opt->needs(m_opt);
  codim_opt->excludes(m_opt)->excludes(n_opt);
  add_format(tables);

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "Run the built-in reference example suite");
  verify->add_option("--threads", threads, "Worker threads (0 = all cores)");
  verify->add_option("--out", out_path, "Write the output to PATH");
  add_format(verify);

  // trial
  auto* trial = app.add_subcommand("trial", "Genericity trial over seeded random jets");
  int tn = 1, td = 1, tk = 2, samples = 1000;
  std::uint64_t seed = 0;
  trial->add_option("--n", tn, "CR dimension")->check(CLI::PositiveNumber);
  trial->add_option("--d", td, "Codimension")->check(CLI::PositiveNumber);
  trial->add_option("--k", tk, "Jet order")->check(CLI::PositiveNumber);
  trial->add_option("--samples", samples, "Sample count")->check(CLI::NonNegativeNumber);
  trial->add_option("--seed", seed, "Run seed")->required();
  trial->add_option("--threads", threads, "Worker threads (0 = all cores)");
  add_format(trial);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return CRND_INPUT_ERROR;
  }

  const crnd_format fmt = format_of(format);
  try {
    char* out = nullptr;
    if (analyze->parsed() || profile->parsed()) {
      const Manifold mf = load(file);
      crnd_report* r = nullptr;
      check(crnd_analyze(mf.get(), opt_cstr(at), analyze->parsed() ? order : max_order, &r));
      const Report report(r);
      if (profile->parsed() && fmt == CRND_FORMAT_HUMAN) {
        check(crnd_report_profile_table(report.get(), &out));
      } else {
        check(crnd_report_render(report.get(), fmt, &out));
      }
      const std::string text = take(out);
      if (!json_path.empty()) check(crnd_report_write_json(report.get(), json_path.c_str()));
      emit(text, "");
    } else if (normalize->parsed()) {
      const Manifold mf = load(file);
      check(crnd_normalize(mf.get(), opt_cstr(at), fmt, &out));
      emit(take(out), "");
    } else if (sweep->parsed()) {
      const Manifold base = load(file);
      const Manifold dir = load(direction);
      check(crnd_sweep(base.get(), dir.get(), t_grid.c_str(), points.c_str(), threads, fmt, &out));
      emit(take(out), out_path);
    } else if (tables->parsed()) {
      if (!codim.empty()) {
        check(crnd_codim(codim[0], codim[1], codim[2], codim[3], fmt, &out));
      } else if (m_opt->count() > 0) {
        check(crnd_bounds(m, big_n, fmt, &out));
      } else {
        std::fprintf(stderr, "crnd: error: tables needs --m M --N N or --codim n d k r\n");
        return CRND_INPUT_ERROR;
      }
      emit(take(out), "");
    } else if (verify->parsed()) {
      int all = 0;
      check(crnd_verify_reference(threads, fmt, &out, &all));
      emit(take(out), out_path);
      if (!all) {
        std::fprintf(stderr, "crnd: error: reference suite reported a mismatch\n");
        return CRND_INTERNAL_ERROR;
      }
    } else if (trial->parsed()) {
      check(crnd_trial(tn, td, tk, samples, seed, threads, fmt, &out));
      emit(take(out), "");
    }
  } catch (const Failure& f) {
    return f.status;
  }
  return CRND_OK;
}
