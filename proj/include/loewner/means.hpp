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

#ifndef LOEWNER_MEANS_HPP
#define LOEWNER_MEANS_HPP

#include "loewner/check_outcome.hpp"
#include "loewner/matrix.hpp"
#include "loewner/types.hpp"

namespace loewner {

enum class MeanKind { geometric, harmonic, parallel_sum };

// A # B. Invertible operands go through A^{1/2}(A^{-1/2} B A^{-1/2})^{1/2}
// A^{1/2}; rank-deficient operands are compressed exactly onto the
// intersection of their ranges, where the mean equals the mean of the
// shorted operators (Schur complements). Throws NumericalError for non-PSD
// operands.
ComplexMatrix geometric_mean(const HermitianView& a, const HermitianView& b,
                             const Tolerances& tol = {});

// A ! B = 2 (A : B).
ComplexMatrix harmonic_mean(const HermitianView& a, const HermitianView& b,
                            const Tolerances& tol = {});

// A : B = A (A + B)^dagger B. The pseudoinverse route is accepted only when
// A (A+B)^dagger (A+B) reproduces A within tol_recon; otherwise the
// regularized limit is used.
ComplexMatrix parallel_sum(const HermitianView& a, const HermitianView& b,
                           const Tolerances& tol = {});

// Block characterizations: geometric holds iff [A, X; X, B] >= 0; harmonic
// iff [2A, 0; 0, 2B] >= [X, X; X, X]; parallel_sum is the harmonic
// characterization of 2X. The outcome margin is the minimum eigenvalue of the
// asserted-nonnegative block difference.
CheckOutcome variational_check(MeanKind kind, const HermitianView& a, const HermitianView& b,
                               const HermitianView& x, const Tolerances& tol = {});

}  // namespace loewner

#endif  // LOEWNER_MEANS_HPP
