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

#ifndef LOEWNER_INEQUALITIES_HPP
#define LOEWNER_INEQUALITIES_HPP

#include <vector>

#include "loewner/check_outcome.hpp"
#include "loewner/functions.hpp"
#include "loewner/maps.hpp"
#include "loewner/matrix.hpp"
#include "loewner/means.hpp"
#include "loewner/types.hpp"

namespace loewner {

// One classical Hua instance: positive delta and alpha, real x_1..x_n.
struct HuaInstance {
  double delta;
  double alpha;
  std::vector<double> xs;
};

enum class SchwarzVariant { i, ii, remark };
enum class PolarBoundVariant { i, ii };

// Positivity of the polar block [|A|, A*; A, |A*|] and of the congruence
// block [X*|A|X, X*A*Y; Y*AX, Y*|A*|Y]; the margin is the lesser of the two
// minimum eigenvalues.
CheckOutcome check_schwarz_block(const ComplexMatrix& a, const ComplexMatrix& x,
                                 const ComplexMatrix& y, const Tolerances& tol = {});

// Cauchy-Schwarz through the geometric mean:
//   i      (weakly 2-positive Phi):
//          Phi(|X*A*Y|) <= Phi(V* X*|A|X V) # Phi(Y*|A*|Y)
//   ii     (2-positive *-map):
//          |Phi(X*A*Y)| <= U* Phi(X*|A|X) U # Phi(Y*|A*|Y)
//   remark (weakly 2-positive *-map; forces A Hermitian and Y = X):
//          |Phi(X*AX)|  <= U* Phi(X*|A|X) U # Phi(X*|A|X)
// V and U come from the polar decompositions of X*A*Y and Phi(X*A*Y).
CheckOutcome check_thm_2_1(SchwarzVariant variant, const MapDescriptor& phi,
                           const ComplexMatrix& a, const ComplexMatrix& x,
                           const ComplexMatrix& y, const Tolerances& tol = {});

// |<Ax, y>|^2 <= <|A|x, x> <|A*|y, y>.
CheckOutcome check_cor_2_3(const ComplexMatrix& a, const ComplexVector& x,
                           const ComplexVector& y, const Tolerances& tol = {});

// tr(|X*A*Y|)^2 <= tr(X*|A|X) tr(Y*|A*|Y).
CheckOutcome check_cor_2_4(const ComplexMatrix& a, const ComplexMatrix& x,
                           const ComplexMatrix& y, const Tolerances& tol = {});

// Single-operator bounds from the polar decomposition:
//   i  (weakly 2-positive): Phi(|X|) <= Phi(V*|X*|V) # Phi(|X|)
//   ii (2-positive *-map):  |Phi(X)| <= U* Phi(|X*|^{1/2}) U # Phi(|X|^{3/2})
CheckOutcome check_cor_2_5(PolarBoundVariant variant, const MapDescriptor& phi,
                           const ComplexMatrix& x, const Tolerances& tol = {});

// Phi(A # B) <= Phi(A) # Phi(B) for weakly 2-positive Phi; the harmonic kind
// additionally requires Phi linear.
CheckOutcome check_mean_subpreservation(MeanKind kind, const MapDescriptor& phi,
                                        const HermitianView& a, const HermitianView& b,
                                        const Tolerances& tol = {});

// (delta - sum x_i)^2 + alpha sum x_i^2 >= alpha/(n + alpha) delta^2.
CheckOutcome check_hua_classical(const HuaInstance& inst, const Tolerances& tol = {});

// For a state phi and contractions A, B:
// (1 - |phi(B*A)|)^2 >= (1 - sqrt(phi(A*A) phi(B*B)))^2 >= phi(I-A*A) phi(I-B*B).
// Both gaps are reported as residuals; the margin is their minimum.
CheckOutcome check_eq_3_1(const MapDescriptor& phi, const ComplexMatrix& a,
                          const ComplexMatrix& b, const Tolerances& tol = {});

// For a 2-positive *-map with Phi(X*|A|X) and Phi(Y*|A*|Y) contractions:
// I - |Phi(X*A*Y)| >= U*(I - Phi(X*|A|X))U # (I - Phi(Y*|A*|Y)).
CheckOutcome check_thm_3_1(const MapDescriptor& phi, const ComplexMatrix& a,
                           const ComplexMatrix& x, const ComplexMatrix& y,
                           const Tolerances& tol = {});

// Operator-convexity form: f(sum X_i* A_i X_i) <= sum X_i* f(A_i) X_i with
// sum X_i* X_i = I.
CheckOutcome check_jensen_subunital(
    const FunctionDescriptor& f,
    const std::vector<std::pair<HermitianView, ComplexMatrix>>& pairs,
    const Tolerances& tol = {});

// f(Phi(A)) <= Phi(f(A)) for unital positive linear Phi.
CheckOutcome check_cdj(const MapDescriptor& phi, const FunctionDescriptor& f,
                       const HermitianView& a, const Tolerances& tol = {});

// For the pinching conditional expectation Phi onto the partition's
// subalgebra, invertible C in the subalgebra and self-adjoint B with
// sp(I - Phi(B)), sp((I + C*C)^{-1}), sp(C*^{-1} B C^{-1}) in the domain:
// f(I - Phi(B)) + C* Phi(f(C*^{-1} B C^{-1})) C >= f((I + C*C)^{-1})(I + C*C).
CheckOutcome check_thm_3_2(const std::vector<std::vector<std::size_t>>& partition,
                           const FunctionDescriptor& f, const HermitianView& b,
                           const ComplexMatrix& c, const Tolerances& tol = {});

// Scalar form: f(1 - phi(B)) + gamma phi(f(B/gamma)) >= (1+gamma) f(1/(1+gamma)).
CheckOutcome check_cor_3_3(const MapDescriptor& phi, const FunctionDescriptor& f,
                           const HermitianView& b, double gamma, const Tolerances& tol = {});

}  // namespace loewner

#endif  // LOEWNER_INEQUALITIES_HPP
