// Copyright 2026 The loewner developers
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "loewner/cli.hpp"
#include "loewner/matrix_io.hpp"
#include "test_support.hpp"

using namespace loewner;
using namespace loewner::testing;

namespace {

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("demo subcommand reproduces every case") {
  CHECK(run_cli({"demo", "--case", "moore-penrose"}) == 0);
  CHECK(run_cli({"demo", "--case", "det-shift"}) == 0);
  CHECK(run_cli({"demo", "--case", "det-shift", "--alpha", "0"}) == 0);
  CHECK(run_cli({"demo", "--case", "transpose"}) == 0);
  CHECK(run_cli({"demo", "--case", "bogus"}) == 2);
}

TEST_CASE("verify subcommand runs and reports") {
  const std::string report = temp_path("loewner_cli_report.json");
  CHECK(run_cli({"verify", "--suite", "hua-classical", "--trials", "50", "--seed", "9",
                 "--report", report}) == 0);
  const std::string text = slurp(report);
  CHECK(text.find("\"suite_id\": \"hua-classical\"") != std::string::npos);
  CHECK(text.find("\"master_seed\": 9") != std::string::npos);
  std::remove(report.c_str());

  CHECK(run_cli({"verify", "--suite", "not-a-suite", "--trials", "1"}) == 2);
  CHECK(run_cli({"verify", "--suite", "cdj", "--trials", "10", "--serial"}) == 0);
}

TEST_CASE("LOEWNER_SEED provides the default seed") {
  setenv("LOEWNER_SEED", "777", 1);
  const std::string report = temp_path("loewner_cli_seed.json");
  CHECK(run_cli({"verify", "--suite", "hua-classical", "--trials", "5", "--report", report}) ==
        0);
  unsetenv("LOEWNER_SEED");
  CHECK(slurp(report).find("\"master_seed\": 777") != std::string::npos);
  std::remove(report.c_str());
}

TEST_CASE("falsify subcommand expectation semantics") {
  CHECK(run_cli({"falsify", "--map", "moore-penrose", "--grade", "weak2", "--trials", "5"}) ==
        0);
  CHECK(run_cli({"falsify", "--map", "transpose", "--grade", "two", "--trials", "5"}) == 0);
  // A completely positive map yields no witness: --expect none flips exit 0.
  CHECK(run_cli({"falsify", "--map", "pinching:1|2", "--grade", "two", "--trials", "50",
                 "--expect", "none"}) == 0);
  CHECK(run_cli({"falsify", "--map", "pinching:1|2", "--grade", "two", "--trials", "50"}) ==
        1);
  CHECK(run_cli({"falsify", "--map", "pinching:1|2", "--grade", "nope", "--trials", "5"}) ==
        2);
  CHECK(run_cli({"falsify", "--map", "unknown-map", "--trials", "5"}) == 2);
}

TEST_CASE("mean subcommand computes and writes") {
  const std::string a = temp_path("loewner_cli_a.json");
  const std::string b = temp_path("loewner_cli_b.json");
  const std::string out = temp_path("loewner_cli_mean.json");
  write_matrix(a, mat(2, 2, {1, 0, 0, 4}));
  write_matrix(b, mat(2, 2, {4, 0, 0, 1}));
  CHECK(run_cli({"mean", "--kind", "geometric", a, b, "-o", out}) == 0);
  CHECK(abs_diff(read_matrix(out), 2.0 * ComplexMatrix::identity(2)) < 1e-12);
  CHECK(run_cli({"mean", "--kind", "harmonic", a, b, "-o", out}) == 0);
  CHECK(abs_diff(read_matrix(out), 1.6 * ComplexMatrix::identity(2)) < 1e-12);

  // Non-PSD operand is a runtime failure, not a usage error.
  write_matrix(a, mat(2, 2, {-1, 0, 0, 1}));
  CHECK(run_cli({"mean", "--kind", "geometric", a, b, "-o", out}) == 1);
  CHECK(run_cli({"mean", "--kind", "sideways", a, b, "-o", out}) == 2);
  std::remove(a.c_str());
  std::remove(b.c_str());
  std::remove(out.c_str());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({}) == 2);
  CHECK(run_cli({"frobnicate"}) == 2);
  CHECK(run_cli({"falsify"}) == 2);  // --map is required
}

TEST_CASE("parse_map_descriptor address forms") {
  const MapDescriptor shift = parse_map_descriptor("det-shift:0.5", 3);
  CHECK(shift.kind == MapDescriptor::Kind::det_shift);
  CHECK(shift.alpha == doctest::Approx(0.5));
  CHECK(shift.input_dim == 3);

  const MapDescriptor pinch = parse_map_descriptor("pinching:1,2|3,4", 0);
  CHECK(pinch.input_dim == 4);
  CHECK(pinch.partition.size() == 2);
  CHECK(pinch.partition[1] == std::vector<std::size_t>{2, 3});

  const MapDescriptor state = parse_map_descriptor("vector-state", 3);
  CHECK(state.state_vector.size() == 3);
  CHECK(state.state_vector[0] == Complex(1, 0));

  const std::string kfile = temp_path("loewner_cli_kraus.json");
  write_matrix(kfile, ComplexMatrix::identity(2));
  const MapDescriptor kraus = parse_map_descriptor("kraus:@" + kfile + ",@" + kfile, 2);
  CHECK(kraus.kraus_ops.size() == 2);
  std::remove(kfile.c_str());

  CHECK_THROWS_AS(parse_map_descriptor("wat", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_map_descriptor("kraus:notafile", 2), std::invalid_argument);
}
