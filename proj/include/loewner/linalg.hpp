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

#ifndef LOEWNER_LINALG_HPP
#define LOEWNER_LINALG_HPP

#include <optional>
#include <vector>

#include "loewner/functions.hpp"
#include "loewner/matrix.hpp"
#include "loewner/types.hpp"

namespace loewner {

// M = Q diag(eigenvalues) Q*, eigenvalues ascending, Q unitary.
struct EigResult {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

// M = U diag(singular_values) V*, singular values descending, U/V with
// orthonormal columns.
struct SvdResult {
  ComplexMatrix u;
  std::vector<double> singular_values;
  ComplexMatrix v;
};

// M = isometry_part * positive_part; the partial isometry vanishes on the
// kernel of the positive factor (columns matching zero singular values are
// zeroed), so rank(U) = rank(|M|) = rank.
struct PolarDecomposition {
  ComplexMatrix isometry_part;
  ComplexMatrix positive_part;
  std::size_t rank;
};

struct AbsPair {
  ComplexMatrix abs;          // |M| = (M*M)^{1/2}
  ComplexMatrix abs_adjoint;  // |M*| = (MM*)^{1/2}
};

struct MatrixScalars {
  Complex trace;
  Complex determinant;
  double operator_norm;
  std::optional<double> min_hermitian_eig;       // present only for Hermitian input
  std::optional<std::vector<double>> spectrum;   // ascending, Hermitian input only
};

EigResult hermitian_eig(const HermitianView& m, const Tolerances& tol = {});
SvdResult singular_value_decompose(const ComplexMatrix& m);

ComplexMatrix psd_sqrt(const HermitianView& m, const Tolerances& tol = {});
AbsPair operator_abs(const ComplexMatrix& m);
ComplexMatrix pseudo_inverse(const ComplexMatrix& m, const Tolerances& tol = {});
PolarDecomposition polar_decompose(const ComplexMatrix& m, const Tolerances& tol = {});

// Q f(Lambda) Q* for the eigendecomposition of m. Eigenvalues may overshoot a
// closed domain endpoint by at most tol_spec * scale and are clamped; anything
// further out (or past an open endpoint) raises NumericalError.
ComplexMatrix apply_function(const FunctionDescriptor& f, const HermitianView& m,
                             const Tolerances& tol = {});

// (x (x) conj(y)): the matrix sending z to <z, y> x; entry (i, j) = x_i conj(y_j).
ComplexMatrix rank_one(const ComplexVector& x, const ComplexVector& y);

// Trace, determinant (LU with partial pivoting), operator norm (largest
// singular value); spectral data only when the input is Hermitian within
// tol_herm. Requires square input.
MatrixScalars matrix_scalars(const ComplexMatrix& m, const Tolerances& tol = {});

double operator_norm(const ComplexMatrix& m);
Complex lu_determinant(const ComplexMatrix& m);
// Inverse of a full-rank square matrix via SVD; throws if rank-deficient
// relative to tol_rank.
ComplexMatrix inverse(const ComplexMatrix& m, const Tolerances& tol = {});

}  // namespace loewner

#endif  // LOEWNER_LINALG_HPP
