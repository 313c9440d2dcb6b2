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

#include "loewner/means.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "loewner/digest.hpp"
#include "loewner/linalg.hpp"
#include "loewner/positivity.hpp"

namespace loewner {

namespace {

// Condition-number gate for the direct geometric-mean formula: the measured
// error grows like 3e-16 * kappa^0.85, so 1e7 keeps it near 1e-9.
constexpr double kDirectConditionLimit = 1e7;
// Eigenvalues of P_ran(A) + P_ran(B) above 2 - gap span the common range.
constexpr double kIntersectionGap = 1e-6;
constexpr int kEpsSteps = 7;
constexpr double kEpsConvergence = 1e-8;

struct SpectralOperand {
  EigResult eig;
  double min_eig = 0.0;
  double max_eig = 0.0;  // largest |eigenvalue|
};

SpectralOperand analyze(const HermitianView& m, const char* who, const Tolerances& tol) {
  SpectralOperand out;
  out.eig = hermitian_eig(m, tol);
  if (out.eig.eigenvalues.empty()) return out;
  out.min_eig = out.eig.eigenvalues.front();
  out.max_eig = std::max(std::abs(out.eig.eigenvalues.front()),
                         std::abs(out.eig.eigenvalues.back()));
  const double scale = std::max(1.0, out.max_eig);
  if (out.min_eig < -tol.tol_psd * scale) {
    throw NumericalError(std::string(who) + ": operand is not PSD (min eigenvalue " +
                         std::to_string(out.min_eig) + ")");
  }
  return out;
}

ComplexMatrix spectral_power(const SpectralOperand& op, double p) {
  const std::size_t n = op.eig.eigenvectors.rows();
  ComplexMatrix scaled(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = std::max(0.0, op.eig.eigenvalues[j]);
      scaled(i, j) = op.eig.eigenvectors(i, j) * std::pow(v, p);
    }
  return symmetrize(scaled * op.eig.eigenvectors.adjoint());
}

// A^{1/2} (A^{-1/2} B A^{-1/2})^{1/2} A^{1/2} for positive definite A.
ComplexMatrix geometric_direct(const SpectralOperand& a, const ComplexMatrix& b,
                               const Tolerances& tol) {
  const ComplexMatrix root = spectral_power(a, 0.5);
  const ComplexMatrix inv_root = spectral_power(a, -0.5);
  const HermitianView inner(inv_root * b * inv_root);
  const SpectralOperand mid = [&] {
    SpectralOperand out;
    out.eig = hermitian_eig(inner, tol);
    return out;
  }();
  return symmetrize(root * spectral_power(mid, 0.5) * root);
}

bool usable_direct(const SpectralOperand& op) {
  return op.min_eig > 0.0 && op.max_eig <= kDirectConditionLimit * op.min_eig;
}

ComplexMatrix shift(const ComplexMatrix& m, double eps) {
  ComplexMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) += eps;
  return out;
}

bool effectively_zero(const SpectralOperand& op) { return op.max_eig == 0.0; }

std::size_t numeric_rank(const SpectralOperand& op, const Tolerances& tol) {
  std::size_t rank = 0;
  for (double v : op.eig.eigenvalues) {
    if (v > tol.tol_rank * std::max(1e-300, op.max_eig)) ++rank;
  }
  return rank;
}

ComplexMatrix range_projector(const SpectralOperand& op, const Tolerances& tol) {
  const std::size_t n = op.eig.eigenvectors.rows();
  ComplexMatrix p(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (op.eig.eigenvalues[j] <= tol.tol_rank * std::max(1e-300, op.max_eig)) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        p(i, k) += op.eig.eigenvectors(i, j) * std::conj(op.eig.eigenvectors(k, j));
  }
  return symmetrize(p);
}

ComplexMatrix geometric_mean_impl(const HermitianView& a, const HermitianView& b,
                                  const Tolerances& tol, int depth);

// Rank-deficient operands: the mean is supported on R = ran(A) n ran(B) and
// there equals the mean of the shorted operators (Schur complements onto R).
// The compression is exact, so no regularized limit is needed; the recursion
// shrinks the space until the compressed operands are invertible.
ComplexMatrix geometric_shorted(const HermitianView& a, const HermitianView& b,
                                const SpectralOperand& sa, const SpectralOperand& sb,
                                const Tolerances& tol, int depth) {
  const std::size_t n = a.dim();
  const ComplexMatrix projector_sum = range_projector(sa, tol) + range_projector(sb, tol);
  EigResult common = hermitian_eig(HermitianView(projector_sum), tol);
  std::vector<std::size_t> inside, outside;
  for (std::size_t j = 0; j < n; ++j) {
    (common.eigenvalues[j] > 2.0 - kIntersectionGap ? inside : outside).push_back(j);
  }
  const std::size_t r = inside.size();
  if (r == 0) return ComplexMatrix::zero(n, n);

  ComplexMatrix u(n, r), c(n, n - r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) u(i, j) = common.eigenvectors(i, inside[j]);
  for (std::size_t j = 0; j + r < n; ++j)
    for (std::size_t i = 0; i < n; ++i) c(i, j) = common.eigenvectors(i, outside[j]);

  const auto shorted = [&](const ComplexMatrix& m) {
    const ComplexMatrix m11 = u.adjoint() * m * u;
    if (r == n) return symmetrize(m11);
    const ComplexMatrix m12 = u.adjoint() * m * c;
    const ComplexMatrix m22 = c.adjoint() * m * c;
    return symmetrize(m11 - m12 * pseudo_inverse(m22, tol) * m12.adjoint());
  };
  const ComplexMatrix mean_r = geometric_mean_impl(HermitianView(shorted(a.matrix())),
                                                   HermitianView(shorted(b.matrix())), tol,
                                                   depth + 1);
  return symmetrize(u * mean_r * u.adjoint());
}

ComplexMatrix geometric_mean_impl(const HermitianView& a, const HermitianView& b,
                                  const Tolerances& tol, int depth) {
  if (a.dim() != b.dim()) throw std::invalid_argument("geometric_mean: dimension mismatch");
  if (depth > 64) throw NumericalError("geometric_mean: range reduction did not terminate");
  const SpectralOperand sa = analyze(a, "geometric_mean", tol);
  const SpectralOperand sb = analyze(b, "geometric_mean", tol);
  // A # 0 = 0 # B = 0 exactly.
  if (effectively_zero(sa) || effectively_zero(sb)) {
    return ComplexMatrix::zero(a.dim(), a.dim());
  }
  // Only one operand is inverted, so one well-conditioned operand suffices.
  if (usable_direct(sa)) return geometric_direct(sa, b.matrix(), tol);
  if (usable_direct(sb)) return geometric_direct(sb, a.matrix(), tol);
  const std::size_t n = a.dim();
  if (numeric_rank(sa, tol) == n && numeric_rank(sb, tol) == n) {
    // Full-rank but ill-conditioned on both sides: no exact reduction exists,
    // so invert the better-conditioned operand and accept the degraded
    // accuracy (about 3e-16 * kappa^0.85).
    const double cond_a = sa.max_eig / std::max(sa.min_eig, 1e-300);
    const double cond_b = sb.max_eig / std::max(sb.min_eig, 1e-300);
    return cond_a <= cond_b ? geometric_direct(sa, b.matrix(), tol)
                            : geometric_direct(sb, a.matrix(), tol);
  }
  return geometric_shorted(a, b, sa, sb, tol, depth);
}

ComplexMatrix parallel_sum_regularized(const HermitianView& a, const HermitianView& b,
                                       const Tolerances& tol) {
  const double scale = std::max({1.0, operator_norm(a.matrix()), operator_norm(b.matrix())});
  ComplexMatrix prev;
  bool have_prev = false;
  for (int k = 1; k <= kEpsSteps; ++k) {
    const double eps = std::pow(10.0, -2.0 * k) * scale;
    const ComplexMatrix sum = shift(a.matrix() + b.matrix(), 2.0 * eps);
    const ComplexMatrix iterate =
        symmetrize(shift(a.matrix(), eps) * inverse(sum, tol) * shift(b.matrix(), eps));
    if (have_prev) {
      const double diff =
          frobenius_norm(iterate - prev) / std::max(1.0, frobenius_norm(iterate));
      if (diff < kEpsConvergence) return iterate;
    }
    prev = iterate;
    have_prev = true;
  }
  throw NumericalError("parallel_sum: regularized schedule did not converge");
}

}  // namespace

ComplexMatrix geometric_mean(const HermitianView& a, const HermitianView& b,
                             const Tolerances& tol) {
  return geometric_mean_impl(a, b, tol, 0);
}

ComplexMatrix parallel_sum(const HermitianView& a, const HermitianView& b,
                           const Tolerances& tol) {
  if (a.dim() != b.dim()) throw std::invalid_argument("parallel_sum: dimension mismatch");
  analyze(a, "parallel_sum", tol);
  analyze(b, "parallel_sum", tol);
  const ComplexMatrix sum = a.matrix() + b.matrix();
  const ComplexMatrix dagger = pseudo_inverse(sum, tol);
  // Range-compatibility self-check: A (A+B)^dagger (A+B) must reproduce A.
  const double self_err = frobenius_norm(a.matrix() * dagger * sum - a.matrix()) /
                          std::max(1.0, frobenius_norm(a.matrix()));
  if (self_err <= tol.tol_recon) {
    return symmetrize(a.matrix() * dagger * b.matrix());
  }
  return parallel_sum_regularized(a, b, tol);
}

ComplexMatrix harmonic_mean(const HermitianView& a, const HermitianView& b,
                            const Tolerances& tol) {
  return 2.0 * parallel_sum(a, b, tol);
}

CheckOutcome variational_check(MeanKind kind, const HermitianView& a, const HermitianView& b,
                               const HermitianView& x, const Tolerances& tol) {
  if (a.dim() != b.dim() || a.dim() != x.dim()) {
    throw std::invalid_argument("variational_check: dimension mismatch");
  }
  x.require_hermitian(tol.tol_herm);
  CheckOutcome out;
  const ComplexMatrix candidate =
      kind == MeanKind::parallel_sum ? ComplexMatrix(2.0 * x.matrix()) : x.matrix();
  if (kind == MeanKind::geometric) {
    out.inequality_id = "variational-geometric";
    const BlockTwo block = BlockTwo::weak_form(a.matrix(), candidate, b.matrix(), tol);
    PsdVerdict v = is_psd(HermitianView(block.assembled), tol);
    out.margin = v.min_eig;
    out.holds = v.verdict;
    out.scale = std::max(1.0, frobenius_norm(block.assembled));
  } else {
    out.inequality_id =
        kind == MeanKind::harmonic ? "variational-harmonic" : "variational-parallel-sum";
    const ComplexMatrix lhs = BlockTwo::general(candidate, candidate, candidate, candidate)
                                  .assembled;
    const ComplexMatrix rhs =
        direct_sum(2.0 * a.matrix(), 2.0 * b.matrix());
    OrderVerdict v = loewner_leq(HermitianView(lhs), HermitianView(rhs), tol);
    out.margin = v.margin;
    out.holds = v.verdict;
    out.scale = std::max(1.0, std::max(frobenius_norm(lhs), frobenius_norm(rhs)));
  }
  out.holds = out.margin >= -tol.tol_margin * out.scale;
  out.residuals.emplace_back("scale", out.scale);
  InstanceDigest digest;
  digest.absorb(out.inequality_id)
      .absorb(a.matrix())
      .absorb(b.matrix())
      .absorb(x.matrix());
  out.instance_digest = digest.hex();
  out.hypothesis_report.emplace_back("x_hermitian", true);
  return out;
}

}  // namespace loewner
