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

#ifndef LOEWNER_TESTS_TEST_SUPPORT_HPP
#define LOEWNER_TESTS_TEST_SUPPORT_HPP

#include <initializer_list>

#include "loewner/matrix.hpp"

namespace loewner::testing {

inline ComplexMatrix mat(std::size_t rows, std::size_t cols,
                         std::initializer_list<double> entries) {
  return ComplexMatrix(rows, cols, entries);
}

inline double abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return frobenius_norm(a - b);
}

inline double rel_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return frobenius_norm(a - b) / std::max(1.0, frobenius_norm(a));
}

// The two-positivity counterexample trio: A = diag(1, 0), B = all-twos,
// C = A^{1/2} B^{1/2} = [[1, 1], [0, 0]].
inline ComplexMatrix example_a() { return mat(2, 2, {1, 0, 0, 0}); }
inline ComplexMatrix example_b() { return mat(2, 2, {2, 2, 2, 2}); }
inline ComplexMatrix example_c() { return mat(2, 2, {1, 1, 0, 0}); }

}  // namespace loewner::testing

#endif  // LOEWNER_TESTS_TEST_SUPPORT_HPP
