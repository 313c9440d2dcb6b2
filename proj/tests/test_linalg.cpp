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

#include <cmath>

#include "loewner/generators.hpp"
#include "loewner/linalg.hpp"
#include "loewner/rng.hpp"
#include "test_support.hpp"

using namespace loewner;
using namespace loewner::testing;

namespace {

ComplexMatrix reassemble(const EigResult& eig) {
  const std::size_t n = eig.eigenvalues.size();
  ComplexMatrix lambda = ComplexMatrix::diagonal(eig.eigenvalues);
  return eig.eigenvectors * lambda * eig.eigenvectors.adjoint();
}

ComplexMatrix reassemble(const SvdResult& svd, std::size_t rows, std::size_t cols) {
  ComplexMatrix sigma(svd.u.cols(), svd.v.cols());
  for (std::size_t i = 0; i < svd.singular_values.size() && i < std::min(rows, cols); ++i) {
    sigma(i, i) = Complex(svd.singular_values[i], 0.0);
  }
  return svd.u * sigma * svd.v.adjoint();
}

}  // namespace

TEST_CASE("hermitian_eig on fixed cases") {
  SUBCASE("diagonal") {
    EigResult eig = hermitian_eig(HermitianView(mat(2, 2, {2, 0, 0, 1})));
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(2.0));
    // Eigenvectors form a permutation of the identity.
    for (std::size_t j = 0; j < 2; ++j) {
      double top = 0.0;
      for (std::size_t i = 0; i < 2; ++i) top = std::max(top, std::abs(eig.eigenvectors(i, j)));
      CHECK(top == doctest::Approx(1.0));
    }
  }
  SUBCASE("off-diagonal involution") {
    EigResult eig = hermitian_eig(HermitianView(mat(2, 2, {0, 1, 1, 0})));
    CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0));
  }
  SUBCASE("shifted involution") {
    EigResult eig = hermitian_eig(HermitianView(mat(2, 2, {0.5, 1, 1, 0.5})));
    CHECK(eig.eigenvalues[0] == doctest::Approx(-0.5));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.5));
  }
  SUBCASE("rejects non-Hermitian input") {
    Tolerances tol;
    CHECK_THROWS_AS(hermitian_eig(HermitianView(mat(2, 2, {0, 1, 0, 0})), tol),
                    NumericalError);
  }
}

TEST_CASE("singular values on fixed cases") {
  CHECK(singular_value_decompose(ComplexMatrix::identity(2)).singular_values ==
        std::vector<double>{1.0, 1.0});
  SvdResult nilpotent = singular_value_decompose(mat(2, 2, {0, 1, 0, 0}));
  CHECK(nilpotent.singular_values[0] == doctest::Approx(1.0));
  CHECK(nilpotent.singular_values[1] == doctest::Approx(0.0));
  SvdResult rank_one_case = singular_value_decompose(example_c());
  CHECK(rank_one_case.singular_values[0] == doctest::Approx(std::sqrt(2.0)));
  CHECK(rank_one_case.singular_values[1] == doctest::Approx(0.0));
}

TEST_CASE("psd_sqrt fixed cases") {
  CHECK(abs_diff(psd_sqrt(HermitianView(mat(2, 2, {4, 0, 0, 9}))), mat(2, 2, {2, 0, 0, 3})) <
        1e-14);
  // The rank-one pair: sqrt(A) = A and sqrt(B) = B/2.
  CHECK(abs_diff(psd_sqrt(HermitianView(example_a())), example_a()) < 1e-14);
  CHECK(abs_diff(psd_sqrt(HermitianView(example_b())), 0.5 * example_b()) < 1e-13);
  CHECK_THROWS_AS(psd_sqrt(HermitianView(mat(2, 2, {1, 0, 0, -1}))), NumericalError);
}

TEST_CASE("operator_abs fixed cases") {
  SUBCASE("normal diagonal") {
    AbsPair p = operator_abs(mat(2, 2, {-1, 0, 0, 2}));
    CHECK(abs_diff(p.abs, mat(2, 2, {1, 0, 0, 2})) < 1e-14);
    CHECK(abs_diff(p.abs_adjoint, mat(2, 2, {1, 0, 0, 2})) < 1e-14);
  }
  SUBCASE("nilpotent") {
    AbsPair p = operator_abs(mat(2, 2, {0, 1, 0, 0}));
    CHECK(abs_diff(p.abs, mat(2, 2, {0, 0, 0, 1})) < 1e-14);
    CHECK(abs_diff(p.abs_adjoint, mat(2, 2, {1, 0, 0, 0})) < 1e-14);
  }
  SUBCASE("unitary") {
    Rng rng(7);
    const ComplexMatrix u = haar_unitary(rng, 3);
    AbsPair p = operator_abs(u);
    CHECK(abs_diff(p.abs, ComplexMatrix::identity(3)) < 1e-12);
    CHECK(abs_diff(p.abs_adjoint, ComplexMatrix::identity(3)) < 1e-12);
  }
}

TEST_CASE("pseudo_inverse fixed cases and identities") {
  CHECK(abs_diff(pseudo_inverse(mat(2, 2, {2, 0, 0, 0})), mat(2, 2, {0.5, 0, 0, 0})) < 1e-14);
  CHECK(abs_diff(pseudo_inverse(2.0 * ComplexMatrix::identity(3)),
                 0.5 * ComplexMatrix::identity(3)) < 1e-14);
  CHECK(abs_diff(pseudo_inverse(mat(2, 2, {1, 1, 1, 1})),
                 0.25 * mat(2, 2, {1, 1, 1, 1})) < 1e-14);

  // All four defining identities, including rank-deficient inputs built from
  // thin factors.
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.index(4);
    ComplexMatrix m;
    if (trial % 2 == 0) {
      m = ginibre(rng, n, n);
    } else {
      const std::size_t r = 1 + rng.index(n);
      m = ginibre(rng, n, r) * ginibre(rng, r, n);
    }
    const ComplexMatrix p = pseudo_inverse(m);
    const double scale = std::max(1.0, frobenius_norm(m));
    CHECK(frobenius_norm(m * p * m - m) / scale < 1e-10);
    CHECK(frobenius_norm(p * m * p - p) / std::max(1.0, frobenius_norm(p)) < 1e-10);
    CHECK(hermiticity_defect(m * p) < 1e-10);
    CHECK(hermiticity_defect(p * m) < 1e-10);
  }
}

TEST_CASE("polar_decompose fixed cases") {
  SUBCASE("positive definite input") {
    const ComplexMatrix m = mat(2, 2, {2, 1, 1, 2});
    PolarDecomposition polar = polar_decompose(m);
    CHECK(abs_diff(polar.isometry_part, ComplexMatrix::identity(2)) < 1e-12);
    CHECK(abs_diff(polar.positive_part, m) < 1e-12);
    CHECK(polar.rank == 2);
  }
  SUBCASE("nilpotent keeps the kernel condition") {
    PolarDecomposition polar = polar_decompose(mat(2, 2, {0, 1, 0, 0}));
    CHECK(abs_diff(polar.isometry_part, mat(2, 2, {0, 1, 0, 0})) < 1e-14);
    CHECK(abs_diff(polar.positive_part, mat(2, 2, {0, 0, 0, 1})) < 1e-14);
    CHECK(polar.rank == 1);
  }
  SUBCASE("unitary input") {
    Rng rng(3);
    const ComplexMatrix u = haar_unitary(rng, 4);
    PolarDecomposition polar = polar_decompose(u);
    CHECK(abs_diff(polar.isometry_part, u) < 1e-12);
    CHECK(abs_diff(polar.positive_part, ComplexMatrix::identity(4)) < 1e-12);
  }
}

TEST_CASE("apply_function fixed cases") {
  CHECK(abs_diff(apply_function(opconvex::square(), HermitianView(mat(2, 2, {1, 0, 0, 3}))),
                 mat(2, 2, {1, 0, 0, 9})) < 1e-13);
  CHECK(abs_diff(apply_function(opconvex::inverse(), HermitianView(mat(2, 2, {2, 1, 1, 1}))),
                 mat(2, 2, {1, -1, -1, 2})) < 1e-12);
  CHECK(frobenius_norm(apply_function(opconvex::neg_log(),
                                      HermitianView(ComplexMatrix::identity(3)))) < 1e-14);
  // Spectrum outside an open endpoint refuses.
  CHECK_THROWS_AS(
      apply_function(opconvex::inverse(), HermitianView(mat(2, 2, {-1, 0, 0, 1}))),
      NumericalError);
  // A tiny overshoot of a closed endpoint is clamped instead.
  CHECK_NOTHROW(
      apply_function(opconvex::neg_sqrt(), HermitianView(mat(2, 2, {-1e-12, 0, 0, 1}))));
}

TEST_CASE("rank_one fixed cases") {
  const ComplexVector e1 = {Complex(1, 0), Complex(0, 0)};
  const ComplexVector e2 = {Complex(0, 0), Complex(1, 0)};
  CHECK(abs_diff(rank_one(e1, e1), mat(2, 2, {1, 0, 0, 0})) == 0.0);
  CHECK(abs_diff(rank_one(e1, e2), mat(2, 2, {0, 1, 0, 0})) == 0.0);
  CHECK(frobenius_norm(rank_one(ComplexVector(2, Complex(0, 0)), e1)) == 0.0);
  CHECK_THROWS_AS(rank_one(e1, ComplexVector(3, Complex(0, 0))), std::invalid_argument);
  // (x (x) conj(y)) z = <z, y> x.
  Rng rng(5);
  const ComplexVector x = unit_vector(rng, 3), y = unit_vector(rng, 3),
                      z = unit_vector(rng, 3);
  const ComplexVector lhs = rank_one(x, y) * z;
  const Complex coeff = inner(z, y);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(lhs[i] - coeff * x[i]) < 1e-14);
}

TEST_CASE("matrix_scalars fixed cases") {
  SUBCASE("identity") {
    MatrixScalars s = matrix_scalars(ComplexMatrix::identity(4));
    CHECK(s.trace == Complex(4, 0));
    CHECK(std::abs(s.determinant - Complex(1, 0)) < 1e-14);
    CHECK(s.operator_norm == doctest::Approx(1.0));
    CHECK(s.min_hermitian_eig.has_value());
    CHECK(*s.min_hermitian_eig == doctest::Approx(1.0));
  }
  SUBCASE("the 4x4 witness determinant") {
    const ComplexMatrix w = mat(4, 4, {1, 0, 1, 0, 0, 0, 1, 0, 1, 1, 2, 2, 0, 0, 2, 2});
    MatrixScalars s = matrix_scalars(w);
    CHECK(std::abs(s.determinant - Complex(-2, 0)) < 1e-12);
  }
  SUBCASE("min Hermitian eigenvalue") {
    MatrixScalars s = matrix_scalars(mat(2, 2, {0.5, 1, 1, 0.5}));
    CHECK(*s.min_hermitian_eig == doctest::Approx(-0.5));
    CHECK(s.spectrum->size() == 2);
  }
  SUBCASE("non-Hermitian input omits spectral data") {
    MatrixScalars s = matrix_scalars(mat(2, 2, {0, 1, 0, 0}));
    CHECK(!s.min_hermitian_eig.has_value());
    CHECK(!s.spectrum.has_value());
    CHECK(s.operator_norm == doctest::Approx(1.0));
  }
  SUBCASE("determinant of non-Hermitian input") {
    const ComplexMatrix m(2, 2, {Complex(0, 1), Complex(2, 0), Complex(0, 0), Complex(0, -1)});
    CHECK(std::abs(matrix_scalars(m).determinant - Complex(1, 0)) < 1e-14);
  }
}

TEST_CASE("reconstruction properties on seeded random matrices") {
  const Tolerances tol;
  for (std::size_t n : {2, 3, 4, 8}) {
    Rng rng(1000 + n);
    for (int trial = 0; trial < 500; ++trial) {
      const ComplexMatrix g = ginibre(rng, n, n);
      const double scale = std::max(1.0, frobenius_norm(g));

      SvdResult svd = singular_value_decompose(g);
      CHECK(frobenius_norm(reassemble(svd, n, n) - g) / scale < tol.tol_recon);
      CHECK(frobenius_norm(svd.u.adjoint() * svd.u - ComplexMatrix::identity(n)) < 1e-12);
      CHECK(frobenius_norm(svd.v.adjoint() * svd.v - ComplexMatrix::identity(n)) < 1e-12);

      const HermitianView h(symmetrize(g));
      EigResult eig = hermitian_eig(h);
      CHECK(frobenius_norm(reassemble(eig) - h.matrix()) /
                std::max(1.0, frobenius_norm(h.matrix())) <
            tol.tol_recon);
      CHECK(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));

      PolarDecomposition polar = polar_decompose(g);
      CHECK(frobenius_norm(polar.isometry_part * polar.positive_part - g) / scale <
            tol.tol_recon);
      const ComplexMatrix& u = polar.isometry_part;
      CHECK(frobenius_norm(u * u.adjoint() * u - u) < 1e-11);
    }
  }
}

TEST_CASE("spectral calculus agrees with direct multiplication") {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.index(4);
    const HermitianView h(symmetrize(ginibre(rng, n, n)));
    const ComplexMatrix via_calculus = apply_function(opconvex::square(), h);
    const ComplexMatrix direct = h.matrix() * h.matrix();
    CHECK(frobenius_norm(via_calculus - direct) / std::max(1.0, frobenius_norm(direct)) <
          1e-10);
  }
}

TEST_CASE("operator_abs agrees with the polar positive factor") {
  Rng rng(88);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.index(4);
    const ComplexMatrix g = ginibre(rng, n, n);
    CHECK(rel_diff(operator_abs(g).abs, polar_decompose(g).positive_part) < 1e-11);
    // Generic square Ginibre matrices are invertible: U is then unitary.
    const ComplexMatrix u = polar_decompose(g).isometry_part;
    CHECK(frobenius_norm(u.adjoint() * u - ComplexMatrix::identity(n)) < 1e-10);
  }
}

TEST_CASE("psd_sqrt is the identity on Hermitian projections") {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.index(4);
    const ComplexMatrix q = haar_unitary(rng, n);
    std::vector<double> bits(n);
    for (double& b : bits) b = rng.index(2) ? 1.0 : 0.0;
    const ComplexMatrix p =
        symmetrize(q * ComplexMatrix::diagonal(bits) * q.adjoint());
    CHECK(abs_diff(psd_sqrt(HermitianView(p)), p) < 1e-11);
  }
}

TEST_CASE("inverse requires full rank") {
  CHECK_THROWS_AS(inverse(mat(2, 2, {1, 0, 0, 0})), NumericalError);
  const ComplexMatrix m = mat(2, 2, {2, 1, 1, 1});
  CHECK(abs_diff(inverse(m) * m, ComplexMatrix::identity(2)) < 1e-13);
}
