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

#include "loewner/demos.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "loewner/linalg.hpp"
#include "loewner/maps.hpp"

namespace loewner {

namespace {

double min_eig_of(const ComplexMatrix& hermitian, const Tolerances& tol) {
  EigResult eig = hermitian_eig(HermitianView(hermitian), tol);
  return eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
}

BlockTwo rank_factor_block() {
  const ComplexMatrix a(2, 2, {1, 0, 0, 0});
  const ComplexMatrix b(2, 2, {2, 2, 2, 2});
  const ComplexMatrix c(2, 2, {1, 1, 0, 0});
  return BlockTwo::hermitian_form(a, c, b);
}

}  // namespace

DemoResult demo_paper(const std::string& case_name, double alpha, const Tolerances& tol) {
  const auto start = std::chrono::steady_clock::now();
  DemoResult out;
  out.report.suite_id = "demo-" + case_name;
  out.report.trials = 1;
  out.report.tolerance = 1e-12;

  bool reproduced = false;
  if (case_name == "moore-penrose") {
    const ComplexMatrix id = ComplexMatrix::identity(2);
    out.input_block = BlockTwo::weak_form(2.0 * id, id, 2.0 * id);
    const BlockTwo image = ampliate2(MapDescriptor::moore_penrose_map(2), out.input_block, tol);
    out.image = image.assembled;
    out.min_eig = min_eig_of(out.image, tol);
    reproduced = std::abs(out.min_eig - (-0.5)) <= 1e-12;
  } else if (case_name == "det-shift" || case_name == "transpose") {
    out.input_block = rank_factor_block();
    const MapDescriptor phi = case_name == "det-shift"
                                  ? MapDescriptor::det_shift_map(alpha, 2)
                                  : MapDescriptor::transpose_map(2);
    const BlockTwo image = ampliate2(phi, out.input_block, tol);
    out.image = image.assembled;
    out.min_eig = min_eig_of(symmetrize(out.image), tol);
    out.determinant = lu_determinant(out.image).real();
    reproduced = std::abs(*out.determinant - (-2.0)) <= 1e-12 && out.min_eig < 0.0;
  } else {
    throw std::invalid_argument("demo_paper: unknown case " + case_name +
                                " (expected moore-penrose, det-shift or transpose)");
  }

  out.report.min_margin = out.min_eig;
  if (!reproduced) {
    out.report.failures.push_back({0, "demo-" + case_name, out.min_eig});
  }
  out.report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace loewner
