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

// Exercises the shared library through its C header only.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "crnd.h"
#include "doctest.h"

namespace {

const char* kCubic =
    "[manifold]\nn = 1\nd = 1\nk = 4\n"
    "phi = [\"z1^3*zb1 + z1*zb1^3 + z1*zb1*s1\"]\n";

std::string take(char* s) {
  std::string out = s ? s : "";
  crnd_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("C API: analyze and render") {
  crnd_manifold* m = nullptr;
  REQUIRE(crnd_manifold_parse(kCubic, &m) == CRND_OK);
  crnd_report* r = nullptr;
  REQUIRE(crnd_analyze(m, nullptr, 0, &r) == CRND_OK);

  char* out = nullptr;
  REQUIRE(crnd_report_render(r, CRND_FORMAT_JSON, &out) == CRND_OK);
  const std::string json = take(out);
  CHECK(json.find("\"nondeg_order\": 3") != std::string::npos);
  CHECK(json.find("\"strong_type\": 4") != std::string::npos);

  // JSON -> report -> JSON is the identity.
  REQUIRE(crnd_report_reformat(json.c_str(), CRND_FORMAT_JSON, &out) == CRND_OK);
  CHECK(take(out) == json);
  REQUIRE(crnd_report_reformat(json.c_str(), CRND_FORMAT_HUMAN, &out) == CRND_OK);
  CHECK(take(out).find("strong type     4") != std::string::npos);

  REQUIRE(crnd_report_profile_table(r, &out) == CRND_OK);
  CHECK_FALSE(take(out).empty());

  const auto path = std::filesystem::temp_directory_path() / "crnd_capi_report.json";
  REQUIRE(crnd_report_write_json(r, path.string().c_str()) == CRND_OK);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == json);
  std::filesystem::remove(path);

  crnd_report_free(r);
  crnd_manifold_free(m);
}

TEST_CASE("C API: status codes") {
  crnd_manifold* m = nullptr;
  CHECK(crnd_manifold_parse("[manifold]\nn = 1\n", &m) == CRND_INPUT_ERROR);
  CHECK(m == nullptr);
  CHECK(std::string(crnd_last_error()).size() > 0);

  CHECK(crnd_manifold_load("/nonexistent/file.toml", &m) == CRND_INPUT_ERROR);
  CHECK(crnd_manifold_parse(nullptr, &m) == CRND_INPUT_ERROR);

  REQUIRE(crnd_manifold_parse("[manifold]\nn = 1\nd = 2\nk = 2\nphi = [\"s2\", \"-s1\"]\n", &m) == CRND_OK);
  crnd_report* r = nullptr;
  CHECK(crnd_analyze(m, nullptr, 0, &r) == CRND_PRECONDITION_ERROR);
  CHECK(r == nullptr);
  // Wrong arity for n = 1, d = 2.
  CHECK(crnd_analyze(m, "1,2", 0, &r) == CRND_INPUT_ERROR);
  crnd_manifold_free(m);

  char* out = nullptr;
  CHECK(crnd_report_reformat("not json", CRND_FORMAT_HUMAN, &out) == CRND_INPUT_ERROR);
  CHECK(crnd_codim(0, 1, 2, 0, CRND_FORMAT_HUMAN, &out) == CRND_INPUT_ERROR);
  CHECK(crnd_trial(1, 1, 0, 10, 1, 1, CRND_FORMAT_HUMAN, &out) == CRND_INPUT_ERROR);

  REQUIRE(crnd_codim(1, 1, 3, 0, CRND_FORMAT_HUMAN, &out) == CRND_OK);
  CHECK(crnd_last_error()[0] == '\0');
  crnd_string_free(out);
}

TEST_CASE("C API: warnings, bounds, trial, sweep") {
  crnd_manifold* m = nullptr;
  REQUIRE(crnd_manifold_parse("[manifold]\nn = 1\nd = 1\nk = 2\nphi = [\"z1*zb1 + z1^2*zb1^2\"]\n", &m) == CRND_OK);
  char* out = nullptr;
  REQUIRE(crnd_manifold_warnings(m, &out) == CRND_OK);
  CHECK(take(out) == "phi1: dropped 1 term(s) above order 2\n");

  REQUIRE(crnd_bounds(3, 2, CRND_FORMAT_HUMAN, &out) == CRND_OK);
  CHECK(take(out).find("k1=3 k2=4 k2'=4") != std::string::npos);

  REQUIRE(crnd_trial(1, 1, 2, 50, 9, 2, CRND_FORMAT_JSON, &out) == CRND_OK);
  const std::string a = take(out);
  REQUIRE(crnd_trial(1, 1, 2, 50, 9, 1, CRND_FORMAT_JSON, &out) == CRND_OK);
  CHECK(take(out) == a);

  crnd_manifold* flat = nullptr;
  REQUIRE(crnd_manifold_parse("[manifold]\nn = 1\nd = 1\nk = 3\nphi = [\"0\"]\n", &flat) == CRND_OK);
  REQUIRE(crnd_sweep(flat, m, "0,1", "lattice:0,1", 2, CRND_FORMAT_JSON, &out) == CRND_OK);
  CHECK_FALSE(take(out).empty());
  CHECK(crnd_sweep(flat, m, "0,x", "lattice:0", 1, CRND_FORMAT_JSON, &out) == CRND_INPUT_ERROR);
  crnd_manifold_free(flat);
  crnd_manifold_free(m);
}
