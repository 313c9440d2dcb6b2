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

#ifndef LOEWNER_POSITIVITY_HPP
#define LOEWNER_POSITIVITY_HPP

#include "loewner/linalg.hpp"
#include "loewner/matrix.hpp"
#include "loewner/types.hpp"

namespace loewner {

struct PsdVerdict {
  bool verdict;
  double min_eig;
};

struct OrderVerdict {
  bool verdict;
  double margin;  // min eigenvalue of B - A
};

// A 2x2 operator block matrix with equally sized square blocks.
struct BlockTwo {
  ComplexMatrix top_left;
  ComplexMatrix top_right;
  ComplexMatrix bottom_left;
  ComplexMatrix bottom_right;
  ComplexMatrix assembled;
  std::size_t block_dim = 0;

  // [a, c_top; c_bottom, b]
  static BlockTwo general(const ComplexMatrix& a, const ComplexMatrix& c_top,
                          const ComplexMatrix& c_bottom, const ComplexMatrix& b);
  // [a, c; c*, b]
  static BlockTwo hermitian_form(const ComplexMatrix& a, const ComplexMatrix& c,
                                 const ComplexMatrix& b);
  // [a, c; c, b] with c Hermitian within tol_herm.
  static BlockTwo weak_form(const ComplexMatrix& a, const ComplexMatrix& c,
                            const ComplexMatrix& b, const Tolerances& tol = {});
  static BlockTwo from_assembled(const ComplexMatrix& m);
};

// The minimal-norm contraction W with C = A^{1/2} W B^{1/2}, extracted via
// pseudoinverses of the square roots. The reconstruction error encodes the
// range conditions: the block [A, C; C*, B] is PSD iff norm <= 1 + tol and
// the reconstruction error is within tol.
struct ContractionWitness {
  ComplexMatrix w;
  double norm;
  double reconstruction_error;  // ||A^{1/2} w B^{1/2} - C|| / max(1, ||C||)

  bool factorizable(const Tolerances& tol = {}) const {
    return reconstruction_error <= tol.tol_recon;
  }
  bool certifies_psd(const Tolerances& tol = {}) const {
    return factorizable(tol) && norm <= 1.0 + tol.tol_margin;
  }
};

// verdict is true iff the minimum eigenvalue is >= -tol_psd * max(1, ||M||).
PsdVerdict is_psd(const HermitianView& m, const Tolerances& tol = {});
// A <= B in the Loewner order, within tolerance.
OrderVerdict loewner_leq(const HermitianView& a, const HermitianView& b,
                         const Tolerances& tol = {});
ContractionWitness contraction_witness(const HermitianView& a, const HermitianView& b,
                                       const ComplexMatrix& c, const Tolerances& tol = {});

}  // namespace loewner

#endif  // LOEWNER_POSITIVITY_HPP
