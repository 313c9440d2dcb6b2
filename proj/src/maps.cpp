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

#include "loewner/maps.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "loewner/digest.hpp"
#include "loewner/linalg.hpp"
#include "loewner/means.hpp"

namespace loewner {

namespace {

void require_input_dim(const MapDescriptor& phi, const ComplexMatrix& x) {
  if (x.rows() != phi.input_dim || x.cols() != phi.input_dim) {
    throw std::invalid_argument("apply_map(" + phi.name() + "): expected " +
                                std::to_string(phi.input_dim) + "x" +
                                std::to_string(phi.input_dim) + " input, got " +
                                std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
}

ComplexMatrix pinch(const ComplexMatrix& x,
                    const std::vector<std::vector<std::size_t>>& blocks) {
  ComplexMatrix out(x.rows(), x.cols());
  for (const auto& block : blocks)
    for (std::size_t i : block)
      for (std::size_t j : block) out(i, j) = x(i, j);
  return out;
}

double min_eig_of(const ComplexMatrix& hermitian, const Tolerances& tol) {
  EigResult eig = hermitian_eig(HermitianView(hermitian), tol);
  return eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
}

// The two-sided counterexample matrices: A = diag(1, 0), B = all-twos,
// C = [[1, 1], [0, 0]] satisfy C = A^{1/2} B^{1/2} so [A, C; C*, B] >= 0.
BlockTwo canonical_two_positive_block() {
  const ComplexMatrix a(2, 2, {1, 0, 0, 0});
  const ComplexMatrix b(2, 2, {2, 2, 2, 2});
  const ComplexMatrix c(2, 2, {1, 1, 0, 0});
  return BlockTwo::hermitian_form(a, c, b);
}

BlockTwo canonical_weak_block(std::size_t n) {
  const ComplexMatrix id = ComplexMatrix::identity(n);
  return BlockTwo::weak_form(2.0 * id, id, 2.0 * id);
}

}  // namespace

std::string grade_name(PositivityGrade g) {
  switch (g) {
    case PositivityGrade::positive: return "positive";
    case PositivityGrade::weakly_2_positive: return "weakly-2-positive";
    case PositivityGrade::two_positive: return "2-positive";
    case PositivityGrade::completely_positive: return "completely-positive";
  }
  return "?";
}

std::string MapDescriptor::name() const {
  switch (kind) {
    case Kind::transpose: return "transpose";
    case Kind::moore_penrose: return "moore-penrose";
    case Kind::det_shift: {
      std::ostringstream os;
      os << "det-shift:" << alpha;
      return os.str();
    }
    case Kind::vector_state: return "vector-state";
    case Kind::normalized_trace: return "normalized-trace";
    case Kind::compression: return "compression";
    case Kind::pinching: {
      std::ostringstream os;
      os << "pinching:";
      for (std::size_t b = 0; b < partition.size(); ++b) {
        if (b) os << "|";
        for (std::size_t k = 0; k < partition[b].size(); ++k) {
          if (k) os << ",";
          os << partition[b][k] + 1;
        }
      }
      return os.str();
    }
    case Kind::kraus: return "kraus[" + std::to_string(kraus_ops.size()) + "]";
  }
  return "?";
}

MapDescriptor MapDescriptor::transpose_map(std::size_t n) {
  MapDescriptor d;
  d.kind = Kind::transpose;
  d.input_dim = d.output_dim = n;
  d.claimed_grade = PositivityGrade::weakly_2_positive;
  d.is_linear = true;
  return d;
}

MapDescriptor MapDescriptor::moore_penrose_map(std::size_t n) {
  MapDescriptor d;
  d.kind = Kind::moore_penrose;
  d.input_dim = d.output_dim = n;
  d.claimed_grade = PositivityGrade::positive;
  d.is_linear = false;
  return d;
}

MapDescriptor MapDescriptor::det_shift_map(double alpha, std::size_t n) {
  if (alpha < 0.0) throw std::invalid_argument("det_shift_map: alpha must be >= 0");
  MapDescriptor d;
  d.kind = Kind::det_shift;
  d.input_dim = d.output_dim = n;
  d.claimed_grade = PositivityGrade::weakly_2_positive;
  d.is_linear = false;
  d.alpha = alpha;
  return d;
}

MapDescriptor MapDescriptor::vector_state_map(ComplexVector e) {
  const double norm = vector_norm(e);
  if (norm == 0.0) throw std::invalid_argument("vector_state_map: zero vector");
  for (Complex& z : e) z /= norm;
  MapDescriptor d;
  d.kind = Kind::vector_state;
  d.input_dim = e.size();
  d.output_dim = 1;
  d.claimed_grade = PositivityGrade::completely_positive;
  d.is_linear = true;
  d.state_vector = std::move(e);
  return d;
}

MapDescriptor MapDescriptor::normalized_trace_map(std::size_t n) {
  MapDescriptor d;
  d.kind = Kind::normalized_trace;
  d.input_dim = n;
  d.output_dim = 1;
  d.claimed_grade = PositivityGrade::completely_positive;
  d.is_linear = true;
  return d;
}

MapDescriptor MapDescriptor::compression_map(ComplexMatrix v) {
  const std::size_t n = v.rows(), k = v.cols();
  if (k == 0 || n < k) throw std::invalid_argument("compression_map: need n x k with k <= n");
  const double defect =
      frobenius_norm(v.adjoint() * v - ComplexMatrix::identity(k));
  if (defect > 1e-8) {
    throw std::invalid_argument("compression_map: columns are not an isometry (defect " +
                                std::to_string(defect) + ")");
  }
  MapDescriptor d;
  d.kind = Kind::compression;
  d.input_dim = n;
  d.output_dim = k;
  d.claimed_grade = PositivityGrade::completely_positive;
  d.is_linear = true;
  d.isometry = std::move(v);
  return d;
}

MapDescriptor MapDescriptor::pinching_map(std::size_t n,
                                          std::vector<std::vector<std::size_t>> blocks) {
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (const auto& block : blocks) {
    for (std::size_t i : block) {
      if (i >= n || seen[i]) {
        throw std::invalid_argument("pinching_map: blocks must partition the index set");
      }
      seen[i] = true;
      ++covered;
    }
  }
  if (covered != n) {
    throw std::invalid_argument("pinching_map: blocks must partition the index set");
  }
  MapDescriptor d;
  d.kind = Kind::pinching;
  d.input_dim = d.output_dim = n;
  d.claimed_grade = PositivityGrade::completely_positive;
  d.is_linear = true;
  d.partition = std::move(blocks);
  return d;
}

MapDescriptor MapDescriptor::kraus_map(std::vector<ComplexMatrix> ks) {
  if (ks.empty()) throw std::invalid_argument("kraus_map: need at least one operator");
  const std::size_t n = ks.front().rows(), m = ks.front().cols();
  for (const auto& k : ks) {
    if (k.rows() != n || k.cols() != m) {
      throw std::invalid_argument("kraus_map: operators must share a shape");
    }
  }
  MapDescriptor d;
  d.kind = Kind::kraus;
  d.input_dim = n;
  d.output_dim = m;
  d.claimed_grade = PositivityGrade::completely_positive;
  d.is_linear = true;
  d.kraus_ops = std::move(ks);
  return d;
}

void absorb_descriptor(InstanceDigest& digest, const MapDescriptor& phi) {
  digest.absorb(phi.name());
  digest.absorb(static_cast<std::uint64_t>(phi.input_dim));
  digest.absorb(static_cast<std::uint64_t>(phi.output_dim));
  digest.absorb(phi.alpha);
  digest.absorb(phi.state_vector);
  if (!phi.isometry.empty()) digest.absorb(phi.isometry);
  for (const auto& k : phi.kraus_ops) digest.absorb(k);
}

ComplexMatrix apply_map(const MapDescriptor& phi, const ComplexMatrix& x,
                        const Tolerances& tol) {
  require_input_dim(phi, x);
  switch (phi.kind) {
    case MapDescriptor::Kind::transpose:
      return x.transpose();
    case MapDescriptor::Kind::moore_penrose:
      return pseudo_inverse(x, tol);
    case MapDescriptor::Kind::det_shift: {
      ComplexMatrix out = x.adjoint();
      const Complex shift = phi.alpha * lu_determinant(x);
      for (std::size_t i = 0; i < out.rows(); ++i) out(i, i) += shift;
      return out;
    }
    case MapDescriptor::Kind::vector_state: {
      ComplexMatrix out(1, 1);
      out(0, 0) = inner(x * phi.state_vector, phi.state_vector);
      return out;
    }
    case MapDescriptor::Kind::normalized_trace: {
      ComplexMatrix out(1, 1);
      out(0, 0) = x.trace() / static_cast<double>(phi.input_dim);
      return out;
    }
    case MapDescriptor::Kind::compression:
      return phi.isometry.adjoint() * x * phi.isometry;
    case MapDescriptor::Kind::pinching:
      return pinch(x, phi.partition);
    case MapDescriptor::Kind::kraus: {
      ComplexMatrix out(phi.output_dim, phi.output_dim);
      for (const auto& k : phi.kraus_ops) out += k.adjoint() * x * k;
      return out;
    }
  }
  throw std::logic_error("apply_map: unhandled kind");
}

BlockTwo ampliate2(const MapDescriptor& phi, const BlockTwo& block, const Tolerances& tol) {
  return BlockTwo::general(apply_map(phi, block.top_left, tol),
                           apply_map(phi, block.top_right, tol),
                           apply_map(phi, block.bottom_left, tol),
                           apply_map(phi, block.bottom_right, tol));
}

ComplexMatrix choi_matrix(const MapDescriptor& phi) {
  if (!phi.is_linear) {
    throw std::invalid_argument("choi_matrix: map " + phi.name() + " is not linear");
  }
  const std::size_t n = phi.input_dim, m = phi.output_dim;
  ComplexMatrix out(n * m, n * m);
  ComplexMatrix unit(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      unit(i, j) = Complex(1.0, 0.0);
      const ComplexMatrix image = apply_map(phi, unit);
      unit(i, j) = Complex(0.0, 0.0);
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) out(i * m + k, j * m + l) = image(k, l);
    }
  return out;
}

ComplexMatrix sample_ginibre(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rng.complex_normal();
  return out;
}

ComplexMatrix sample_psd_wishart(Rng& rng, std::size_t n) {
  const ComplexMatrix g = sample_ginibre(rng, n, n);
  ComplexMatrix w = symmetrize(g.adjoint() * g);
  const double norm = operator_norm(w);
  if (norm > 0.0) w *= Complex(1.0 / norm, 0.0);
  return w;
}

ComplexMatrix sample_unitary(Rng& rng, std::size_t n) {
  Eigen::MatrixXcd g(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phases so the distribution is Haar rather than QR-convention
  // dependent.
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    const Complex phase = a > 0.0 ? d / a : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return out;
}

BlockTwo sample_weak_psd_block(Rng& rng, std::size_t n, const Tolerances& tol) {
  const ComplexMatrix a = sample_psd_wishart(rng, n);
  const ComplexMatrix b = sample_psd_wishart(rng, n);
  if (rng.uniform01() < 0.5) {
    const ComplexMatrix g = geometric_mean(HermitianView(a), HermitianView(b), tol);
    const double t = rng.uniform(-1.0, 1.0);
    return BlockTwo::weak_form(a, t * g, b, tol);
  }
  // Arbitrary Hermitian direction, scaled to the last t with
  // [A, tC; tC, B] >= 0 by bisection on the minimum eigenvalue.
  const ComplexMatrix c = symmetrize(sample_ginibre(rng, n, n));
  double lo = 0.0, hi = 1.0;
  while (min_eig_of(BlockTwo::weak_form(a, hi * c, b, tol).assembled, tol) >= 0.0 &&
         hi < 1e6) {
    lo = hi;
    hi *= 2.0;
  }
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (min_eig_of(BlockTwo::weak_form(a, mid * c, b, tol).assembled, tol) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // Mix boundary and interior instances.
  const double t = lo * (rng.uniform01() < 0.5 ? 1.0 : rng.uniform01());
  return BlockTwo::weak_form(a, t * c, b, tol);
}

BlockTwo sample_psd_block(Rng& rng, std::size_t n) {
  const ComplexMatrix g = sample_ginibre(rng, 2 * n, 2 * n);
  ComplexMatrix w = symmetrize(g.adjoint() * g);
  const double norm = operator_norm(w);
  if (norm > 0.0) w *= Complex(1.0 / norm, 0.0);
  return BlockTwo::from_assembled(w);
}

FalsificationResult falsify_grade(const MapDescriptor& phi, PositivityGrade grade,
                                  std::size_t trials, std::uint64_t seed,
                                  const Tolerances& tol) {
  if (grade != PositivityGrade::weakly_2_positive && grade != PositivityGrade::two_positive) {
    throw std::invalid_argument("falsify_grade: grade must be weakly-2-positive or 2-positive");
  }
  if (trials < 1) throw std::invalid_argument("falsify_grade: need at least one trial");
  const bool weak = grade == PositivityGrade::weakly_2_positive;

  FalsificationResult result;
  result.min_eig = std::numeric_limits<double>::infinity();

  auto try_block = [&](const BlockTwo& block) -> bool {
    const BlockTwo amp = ampliate2(phi, block, tol);
    const HermitianView view(amp.assembled);
    const double min_eig = min_eig_of(view.matrix(), tol);
    result.min_eig = std::min(result.min_eig, min_eig);
    const double scale = std::max(1.0, frobenius_norm(view.matrix()));
    if (min_eig < -tol.tol_psd * scale) {
      result.found = true;
      result.witness = block;
      result.min_eig = min_eig;
      return true;
    }
    return false;
  };

  // Canonical instances first.
  if (try_block(canonical_weak_block(phi.input_dim))) return result;
  if (!weak && phi.input_dim == 2 && try_block(canonical_two_positive_block())) return result;

  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, "falsify:" + phi.name() + ":" + grade_name(grade), t);
    const BlockTwo block = weak ? sample_weak_psd_block(rng, phi.input_dim, tol)
                                : sample_psd_block(rng, phi.input_dim);
    if (try_block(block)) return result;
  }
  return result;
}

CheckOutcome check_bimodule(const MapDescriptor& pinching, const ComplexMatrix& a,
                            const ComplexMatrix& x, const ComplexMatrix& b,
                            const Tolerances& tol) {
  if (pinching.kind != MapDescriptor::Kind::pinching) {
    throw std::invalid_argument("check_bimodule: map must be a pinching");
  }
  require_input_dim(pinching, x);
  auto membership_defect = [&](const ComplexMatrix& m) {
    return frobenius_norm(m - pinch(m, pinching.partition)) /
           std::max(1.0, frobenius_norm(m));
  };
  const double defect_a = membership_defect(a);
  const double defect_b = membership_defect(b);
  if (defect_a > tol.tol_herm || defect_b > tol.tol_herm) {
    throw HypothesisError("subalgebra_membership",
                          "check_bimodule: A or B is not block-diagonal for the partition");
  }
  const ComplexMatrix lhs = apply_map(pinching, a * x * b, tol);
  const ComplexMatrix rhs = a * apply_map(pinching, x, tol) * b;
  const double scale = std::max(1.0, std::max(frobenius_norm(lhs), frobenius_norm(rhs)));
  const double residual = frobenius_norm(lhs - rhs);

  CheckOutcome out;
  out.inequality_id = "bimodule";
  out.margin = -residual;
  out.scale = scale;
  out.holds = residual <= tol.tol_margin * scale;
  out.residuals.emplace_back("residual", residual);
  out.residuals.emplace_back("scale", scale);
  out.hypothesis_report.emplace_back("a_in_subalgebra", true);
  out.hypothesis_report.emplace_back("b_in_subalgebra", true);
  InstanceDigest digest;
  digest.absorb(out.inequality_id).absorb(a).absorb(x).absorb(b);
  out.instance_digest = digest.hex();
  return out;
}

}  // namespace loewner
