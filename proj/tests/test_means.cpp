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
#include "loewner/means.hpp"
#include "loewner/positivity.hpp"
#include "test_support.hpp"

using namespace loewner;
using namespace loewner::testing;

namespace {

HermitianView view(const ComplexMatrix& m) { return HermitianView(m); }

ComplexMatrix scalar1(double v) { return mat(1, 1, {v}); }

}  // namespace

TEST_CASE("scalar oracles at 1e-12") {
  CHECK(std::abs(geometric_mean(view(scalar1(4)), view(scalar1(9)))(0, 0).real() - 6.0) <
        1e-12);
  CHECK(std::abs(harmonic_mean(view(scalar1(3)), view(scalar1(6)))(0, 0).real() - 4.0) <
        1e-12);

  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = rng.uniform(0.01, 10.0);
    const double b = rng.uniform(0.01, 10.0);
    const double geo = geometric_mean(view(scalar1(a)), view(scalar1(b)))(0, 0).real();
    const double har = harmonic_mean(view(scalar1(a)), view(scalar1(b)))(0, 0).real();
    CHECK(std::abs(geo - std::sqrt(a * b)) <= 1e-12 * std::max(1.0, std::sqrt(a * b)));
    CHECK(std::abs(har - 2.0 * a * b / (a + b)) <=
          1e-12 * std::max(1.0, 2.0 * a * b / (a + b)));
  }
}

TEST_CASE("commuting pairs reduce to the entrywise oracle") {
  CHECK(abs_diff(geometric_mean(view(mat(2, 2, {1, 0, 0, 4})), view(mat(2, 2, {4, 0, 0, 1}))),
                 2.0 * ComplexMatrix::identity(2)) < 1e-12);

  Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix q = haar_unitary(rng, 4);
    std::vector<double> d1(4), d2(4);
    for (auto& v : d1) v = rng.uniform(0.1, 3.0);
    for (auto& v : d2) v = rng.uniform(0.1, 3.0);
    const ComplexMatrix a = symmetrize(q * ComplexMatrix::diagonal(d1) * q.adjoint());
    const ComplexMatrix b = symmetrize(q * ComplexMatrix::diagonal(d2) * q.adjoint());
    std::vector<double> root(4);
    for (int i = 0; i < 4; ++i) root[i] = std::sqrt(d1[i] * d2[i]);
    const ComplexMatrix expected =
        symmetrize(q * ComplexMatrix::diagonal(root) * q.adjoint());
    CHECK(abs_diff(geometric_mean(view(a), view(b)), expected) < 1e-9);
  }
}

TEST_CASE("idempotence and the zero operand") {
  Rng rng(23);
  const ComplexMatrix a = psd_wishart(rng, 3);
  CHECK(rel_diff(geometric_mean(view(a), view(a)), a) < 1e-10);
  CHECK(rel_diff(harmonic_mean(view(a), view(a)), a) < 1e-10);

  const ComplexMatrix zero = ComplexMatrix::zero(3, 3);
  CHECK(frobenius_norm(geometric_mean(view(a), view(zero))) == 0.0);
  CHECK(frobenius_norm(geometric_mean(view(zero), view(a))) == 0.0);
  CHECK(frobenius_norm(harmonic_mean(view(a), view(zero))) < 1e-12);
}

TEST_CASE("harmonic mean matches the inverse formula for invertible operands") {
  const Tolerances tol;
  Rng rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng.index(3);
    const ComplexMatrix a =
        psd_wishart(rng, n) + 0.3 * ComplexMatrix::identity(n);
    const ComplexMatrix b =
        psd_wishart(rng, n) + 0.3 * ComplexMatrix::identity(n);
    const ComplexMatrix direct = harmonic_mean(view(a), view(b), tol);
    const ComplexMatrix via_inverses =
        2.0 * inverse(inverse(a, tol) + inverse(b, tol), tol);
    CHECK(rel_diff(direct, via_inverses) < tol.tol_recon * 10);
  }
}

TEST_CASE("geometric mean is symmetric") {
  Rng rng(25);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng.index(3);
    const ComplexMatrix a = psd_wishart(rng, n);
    const ComplexMatrix b = psd_wishart(rng, n);
    CHECK(rel_diff(geometric_mean(view(a), view(b)), geometric_mean(view(b), view(a))) <
          1e-9);
  }
}

TEST_CASE("non-PSD operands refuse") {
  CHECK_THROWS_AS(geometric_mean(view(mat(2, 2, {-1, 0, 0, 1})), view(ComplexMatrix::identity(2))),
                  NumericalError);
  CHECK_THROWS_AS(harmonic_mean(view(mat(2, 2, {-1, 0, 0, 1})), view(ComplexMatrix::identity(2))),
                  NumericalError);
}

TEST_CASE("variational characterizations hold at the mean and fail above it") {
  const Tolerances tol;
  Rng rng(26);
  for (int instance = 0; instance < 10; ++instance) {
    const std::size_t n = 2 + rng.index(3);
    const ComplexMatrix a = psd_wishart(rng, n);
    const ComplexMatrix b = psd_wishart(rng, n);
    const ComplexMatrix geo = geometric_mean(view(a), view(b), tol);
    const ComplexMatrix har = harmonic_mean(view(a), view(b), tol);

    CHECK(variational_check(MeanKind::geometric, view(a), view(b), view(geo), tol).holds);
    CHECK(variational_check(MeanKind::harmonic, view(a), view(b), view(har), tol).holds);
    CHECK(variational_check(MeanKind::parallel_sum, view(a), view(b), view(0.5 * har), tol)
              .holds);

    // Sampled maximality: any PD bump above the mean leaves the feasible set.
    for (int bump = 0; bump < 50; ++bump) {
      const ComplexMatrix p =
          psd_wishart(rng, n) + 0.05 * ComplexMatrix::identity(n);
      CHECK(!variational_check(MeanKind::geometric, view(a), view(b), view(geo + 0.1 * p), tol)
                 .holds);
      CHECK(!variational_check(MeanKind::harmonic, view(a), view(b), view(har + 0.1 * p), tol)
                 .holds);
    }
  }
}

TEST_CASE("monotonicity in both operands") {
  const Tolerances tol;
  Rng rng(27);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.index(3);
    const ComplexMatrix a = psd_wishart(rng, n);
    const ComplexMatrix b = psd_wishart(rng, n);
    const ComplexMatrix a2 = a + psd_wishart(rng, n);
    const ComplexMatrix b2 = b + psd_wishart(rng, n);
    const ComplexMatrix g = geometric_mean(view(a), view(b), tol);
    const ComplexMatrix g2 = geometric_mean(view(a2), view(b2), tol);
    const OrderVerdict cmp = loewner_leq(view(g), view(g2), tol);
    CHECK(cmp.margin >= -tol.tol_margin * std::max(1.0, frobenius_norm(g2)));
  }
}

TEST_CASE("subadditivity of the geometric mean") {
  const Tolerances tol;
  Rng rng(28);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.index(3);
    const ComplexMatrix a = psd_wishart(rng, n), b = psd_wishart(rng, n);
    const ComplexMatrix c = psd_wishart(rng, n), d = psd_wishart(rng, n);
    const ComplexMatrix lhs = geometric_mean(view(a), view(b), tol) +
                              geometric_mean(view(c), view(d), tol);
    const ComplexMatrix rhs = geometric_mean(view(a + c), view(b + d), tol);
    const OrderVerdict cmp = loewner_leq(view(lhs), view(rhs), tol);
    CHECK(cmp.margin >= -tol.tol_margin * std::max(1.0, frobenius_norm(rhs)));
  }
}

TEST_CASE("harmonic-geometric-arithmetic chain") {
  const Tolerances tol;
  Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.index(3);
    const ComplexMatrix a = psd_wishart(rng, n), b = psd_wishart(rng, n);
    const ComplexMatrix har = harmonic_mean(view(a), view(b), tol);
    const ComplexMatrix geo = geometric_mean(view(a), view(b), tol);
    const ComplexMatrix am = 0.5 * (a + b);
    const double scale = std::max(1.0, frobenius_norm(am));
    CHECK(loewner_leq(view(har), view(geo), tol).margin >= -tol.tol_margin * scale);
    CHECK(loewner_leq(view(geo), view(am), tol).margin >= -tol.tol_margin * scale);
  }
}

TEST_CASE("singular operands with overlapping ranges stay feasible") {
  const Tolerances tol;
  Rng rng(30);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng.index(2);
    const std::size_t r = n - 1;  // rank n-1 each: ranges overlap generically
    const ComplexMatrix ga = ginibre(rng, n, r);
    const ComplexMatrix gb = ginibre(rng, n, r);
    const ComplexMatrix a = symmetrize(ga * ga.adjoint());
    const ComplexMatrix b = symmetrize(gb * gb.adjoint());
    const ComplexMatrix g = geometric_mean(view(a), view(b), tol);
    const CheckOutcome outcome =
        variational_check(MeanKind::geometric, view(a), view(b), view(g), tol);
    CHECK(outcome.margin >= -tol.tol_margin * outcome.scale);
  }
}

TEST_CASE("singular geometric mean against a hand-computed compression oracle") {
  const Tolerances tol;
  // A = 2 uu* with u = (1,1,0)/sqrt(2) (rank 1), B = diag(1,1,0) (rank 2).
  // The common range is span(u); the compressed operands there are 2 and 1,
  // so A # B = sqrt(2) uu*.
  const ComplexMatrix a = mat(3, 3, {1, 1, 0, 1, 1, 0, 0, 0, 0});
  const ComplexMatrix b = mat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0});
  const double w = std::sqrt(2.0) / 2.0;
  const ComplexMatrix expected = mat(3, 3, {w, w, 0, w, w, 0, 0, 0, 0});
  CHECK(abs_diff(geometric_mean(view(a), view(b), tol), expected) < 1e-12);

  // Complementary rank-one ranges meet only at zero.
  const ComplexMatrix c = mat(2, 2, {1, 1, 1, 1});
  const ComplexMatrix d = mat(2, 2, {1, 0, 0, 0});
  CHECK(frobenius_norm(geometric_mean(view(c), view(d), tol)) < 1e-12);
}

TEST_CASE("parallel sum handles rank-deficient range-compatible operands") {
  const Tolerances tol;
  Rng rng(31);
  const ComplexMatrix p = mat(2, 2, {1, 0, 0, 0});
  // A = B = the same projection: A : B = P/2 exactly.
  CHECK(abs_diff(parallel_sum(view(p), view(p), tol), 0.5 * p) < 1e-12);
  // Orthogonal ranges: the parallel sum vanishes.
  const ComplexMatrix q = mat(2, 2, {0, 0, 0, 1});
  CHECK(frobenius_norm(parallel_sum(view(p), view(q), tol)) < 1e-10);
}
