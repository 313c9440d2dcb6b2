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

#ifndef LOEWNER_DEMOS_HPP
#define LOEWNER_DEMOS_HPP

#include <optional>
#include <string>

#include "loewner/positivity.hpp"
#include "loewner/suite.hpp"

namespace loewner {

// One fixed counterexample instance, reproduced exactly:
//   moore-penrose  [2I, I; I, 2I] maps to [I/2, I; I, I/2]; min eigenvalue -1/2
//   det-shift      the PSD block built from A = diag(1, 0), B = all-twos,
//                  C = [[1,1],[0,0]] maps to a 4x4 with determinant -2
//   transpose      the same block under the transpose map; same 4x4 witness
struct DemoResult {
  SuiteReport report;          // suite_id "demo-<case>"; failures empty iff reproduced
  BlockTwo input_block;        // the block fed to the map
  ComplexMatrix image;         // the ampliated image
  double min_eig = 0.0;        // of the image
  std::optional<double> determinant;  // of the image (det-shift / transpose cases)
};

DemoResult demo_paper(const std::string& case_name, double alpha = 1.0,
                      const Tolerances& tol = {});

}  // namespace loewner

#endif  // LOEWNER_DEMOS_HPP
