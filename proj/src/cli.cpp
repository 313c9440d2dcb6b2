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

#include "loewner/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "loewner/demos.hpp"
#include "loewner/generators.hpp"
#include "loewner/linalg.hpp"
#include "loewner/matrix_io.hpp"
#include "loewner/means.hpp"
#include "loewner/suite.hpp"

namespace loewner {

namespace {

std::string format_complex(const Complex& z) {
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof(buf), "%.17g", z.real());
  } else {
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
  }
  return buf;
}

void print_matrix(std::ostream& os, const ComplexMatrix& m, const std::string& label) {
  os << label << " (" << m.rows() << "x" << m.cols() << "):\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << format_complex(m(i, j));
    }
    os << "]\n";
  }
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const unsigned long v = std::stoul(item);
    if (v < 1) throw CLI::ValidationError("--dims", "dimensions must be >= 1");
    dims.push_back(static_cast<std::size_t>(v));
  }
  if (dims.empty()) throw CLI::ValidationError("--dims", "need at least one dimension");
  return dims;
}

int run_verify(const std::string& suite, std::uint64_t seed, std::size_t trials,
               const std::string& dims_text, double tol_margin, const std::string& report_path,
               bool serial) {
  Tolerances tol;
  tol.tol_margin = tol_margin;
  const std::vector<std::size_t> dims = parse_dims(dims_text);
  const RunPolicy policy = serial ? RunPolicy::serial : RunPolicy::parallel;

  std::vector<std::string> ids;
  if (suite == "all") {
    ids = known_suite_ids();
  } else if (is_known_suite(suite)) {
    ids = {suite};
  } else {
    throw CLI::ValidationError("--suite", "unknown suite id: " + suite);
  }

  std::vector<SuiteReport> reports;
  reports.reserve(ids.size());
  for (const auto& id : ids) {
    SuiteReport report = run_suite(id, seed, trials, dims, tol, policy);
    std::printf("suite %-14s trials %zu x %zu dims  min_margin % .3e  %s\n", id.c_str(),
                report.trials, report.dims.size(), report.min_margin,
                report.passed() ? "PASS" : "FAIL");
    for (const auto& f : report.failures) {
      std::printf("  failure trial %zu digest %s margin % .3e\n", f.trial_index,
                  f.instance_digest.c_str(), f.margin);
    }
    reports.push_back(std::move(report));
  }
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "cannot write report to " << report_path << "\n";
      return 1;
    }
    out << reports_to_json(reports) << "\n";
  }
  return exit_code_for(reports);
}

int run_falsify(const std::string& map_address, const std::string& grade_name,
                std::size_t trials, std::uint64_t seed, std::size_t dim,
                const std::string& expect) {
  const MapDescriptor phi = parse_map_descriptor(map_address, dim);
  PositivityGrade grade;
  if (grade_name == "weak2") {
    grade = PositivityGrade::weakly_2_positive;
  } else if (grade_name == "two") {
    grade = PositivityGrade::two_positive;
  } else {
    throw CLI::ValidationError("--grade", "expected weak2 or two");
  }
  const FalsificationResult result = falsify_grade(phi, grade, trials, seed);
  std::cout << "map " << phi.name() << " grade " << grade_name << " trials " << trials
            << "\n";
  if (result.found) {
    std::cout << "witness found: ampliated min eigenvalue "
              << format_complex(Complex(result.min_eig, 0.0)) << "\n";
    print_matrix(std::cout, result.witness->assembled, "witness block");
    print_matrix(std::cout, ampliate2(phi, *result.witness).assembled, "ampliated image");
  } else {
    std::cout << "no witness found (inconclusive); most negative min eigenvalue seen "
              << format_complex(Complex(result.min_eig, 0.0)) << "\n";
  }
  const bool met = expect == "witness" ? result.found : !result.found;
  return met ? 0 : 1;
}

int run_demo(const std::string& case_name, double alpha) {
  const DemoResult demo = demo_paper(case_name, alpha);
  print_matrix(std::cout, demo.input_block.assembled, "input block");
  print_matrix(std::cout, demo.image, "ampliated image");
  EigResult eig = hermitian_eig(HermitianView(demo.image));
  std::cout << "image eigenvalues:";
  for (double v : eig.eigenvalues) std::cout << " " << format_complex(Complex(v, 0.0));
  std::cout << "\nmin eigenvalue: " << format_complex(Complex(demo.min_eig, 0.0)) << "\n";
  if (demo.determinant) {
    std::cout << "determinant: " << format_complex(Complex(*demo.determinant, 0.0)) << "\n";
  }
  std::cout << (demo.report.passed() ? "reproduced" : "NOT reproduced") << "\n";
  return demo.report.passed() ? 0 : 1;
}

int run_mean(const std::string& kind, const std::string& a_path, const std::string& b_path,
             const std::string& out_path) {
  const HermitianView a(read_matrix(a_path));
  const HermitianView b(read_matrix(b_path));
  ComplexMatrix result;
  if (kind == "geometric") {
    result = geometric_mean(a, b);
  } else if (kind == "harmonic") {
    result = harmonic_mean(a, b);
  } else {
    throw CLI::ValidationError("--kind", "expected geometric or harmonic");
  }
  write_matrix(out_path, result);
  std::cout << "wrote " << kind << " mean (" << result.rows() << "x" << result.cols()
            << ") to " << out_path << "\n";
  return 0;
}

}  // namespace

MapDescriptor parse_map_descriptor(const std::string& address, std::size_t ambient_dim) {
  const auto colon = address.find(':');
  const std::string head = address.substr(0, colon);
  const std::string params = colon == std::string::npos ? "" : address.substr(colon + 1);

  auto matrix_param = [](const std::string& p) {
    if (p.empty() || p[0] != '@') {
      throw std::invalid_argument("map parameter must be @file.json, got: " + p);
    }
    return read_matrix(p.substr(1));
  };

  if (head == "transpose") return MapDescriptor::transpose_map(ambient_dim);
  if (head == "moore-penrose") return MapDescriptor::moore_penrose_map(ambient_dim);
  if (head == "normalized-trace") return MapDescriptor::normalized_trace_map(ambient_dim);
  if (head == "det-shift") {
    const double alpha = params.empty() ? 1.0 : std::stod(params);
    return MapDescriptor::det_shift_map(alpha, ambient_dim);
  }
  if (head == "vector-state") {
    if (params.empty()) {
      ComplexVector e(ambient_dim, Complex(0.0, 0.0));
      e[0] = Complex(1.0, 0.0);
      return MapDescriptor::vector_state_map(std::move(e));
    }
    const ComplexMatrix m = matrix_param(params);
    if (m.rows() != 1 && m.cols() != 1) {
      throw std::invalid_argument("vector-state: file must hold a row or column vector");
    }
    return MapDescriptor::vector_state_map(m.entries());
  }
  if (head == "compression") return MapDescriptor::compression_map(matrix_param(params));
  if (head == "pinching") {
    std::vector<std::vector<std::size_t>> blocks;
    std::stringstream groups(params);
    std::string group;
    std::size_t count = 0;
    while (std::getline(groups, group, '|')) {
      std::vector<std::size_t> block;
      std::stringstream items(group);
      std::string item;
      while (std::getline(items, item, ',')) {
        const unsigned long v = std::stoul(item);
        if (v < 1) throw std::invalid_argument("pinching: indices are 1-based");
        block.push_back(static_cast<std::size_t>(v - 1));
        ++count;
      }
      blocks.push_back(std::move(block));
    }
    return MapDescriptor::pinching_map(count, std::move(blocks));
  }
  if (head == "kraus") {
    std::vector<ComplexMatrix> ks;
    std::stringstream items(params);
    std::string item;
    while (std::getline(items, item, ',')) ks.push_back(matrix_param(item));
    return MapDescriptor::kraus_map(std::move(ks));
  }
  throw std::invalid_argument("unknown map: " + head);
}

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Operator-inequality verification harness"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run seeded inequality suites");
  std::string suite = "all";
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  std::string dims_text = "2,3,4,6";
  double tol_margin = 1e-8;
  std::string report_path;
  bool serial = false;
  verify->add_option("--suite", suite, "Suite id or 'all'")->capture_default_str();
  verify->add_option("--seed", seed, "Master seed")->envname("LOEWNER_SEED")
      ->capture_default_str();
  verify->add_option("--trials", trials, "Trials per dimension")->capture_default_str();
  verify->add_option("--dims", dims_text, "Comma-separated dimensions")
      ->capture_default_str();
  verify->add_option("--tol", tol_margin, "Margin tolerance (relative)")
      ->capture_default_str();
  verify->add_option("--report", report_path, "Write a JSON report here");
  verify->add_flag("--serial", serial, "Use the serial reference runner");

  // falsify
  auto* falsify = app.add_subcommand("falsify", "Search for positivity-grade witnesses");
  std::string map_address;
  std::string grade = "weak2";
  std::size_t f_trials = 1000;
  std::uint64_t f_seed = 42;
  std::size_t dim = 2;
  std::string expect = "witness";
  falsify->add_option("--map", map_address, "Map address, e.g. det-shift:0.5")->required();
  falsify->add_option("--grade", grade, "weak2 or two")->capture_default_str();
  falsify->add_option("--trials", f_trials, "Random blocks to try")->capture_default_str();
  falsify->add_option("--seed", f_seed, "Search seed")->envname("LOEWNER_SEED")
      ->capture_default_str();
  falsify->add_option("--dim", dim, "Ambient dimension for dimension-free maps")
      ->capture_default_str();
  falsify->add_option("--expect", expect, "witness or none: what exit 0 means")
      ->capture_default_str();

  // demo
  auto* demo = app.add_subcommand("demo", "Reproduce a fixed counterexample");
  std::string case_name;
  double alpha = 1.0;
  demo->add_option("--case", case_name, "moore-penrose, det-shift or transpose")->required();
  demo->add_option("--alpha", alpha, "det-shift parameter")->capture_default_str();

  // mean
  auto* mean = app.add_subcommand("mean", "Compute an operator mean of two PSD matrices");
  std::string kind, a_path, b_path, out_path;
  mean->add_option("--kind", kind, "geometric or harmonic")->required();
  mean->add_option("a", a_path, "First operand (matrix JSON)")->required();
  mean->add_option("b", b_path, "Second operand (matrix JSON)")->required();
  mean->add_option("-o,--out", out_path, "Output file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      return run_verify(suite, seed, trials, dims_text, tol_margin, report_path, serial);
    }
    if (falsify->parsed()) {
      if (expect != "witness" && expect != "none") {
        std::cerr << "--expect must be witness or none\n";
        return 2;
      }
      return run_falsify(map_address, grade, f_trials, f_seed, dim, expect);
    }
    if (demo->parsed()) return run_demo(case_name, alpha);
    if (mean->parsed()) return run_mean(kind, a_path, b_path, out_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace loewner
