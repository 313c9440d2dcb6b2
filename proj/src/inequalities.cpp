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

#include "loewner/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "loewner/digest.hpp"
#include "loewner/linalg.hpp"

namespace loewner {

namespace {

using Hypotheses = std::vector<std::pair<std::string, bool>>;
using Residuals = std::vector<std::pair<std::string, double>>;

double min_eig(const ComplexMatrix& hermitian, const Tolerances& tol) {
  EigResult eig = hermitian_eig(HermitianView(hermitian), tol);
  return eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
}

CheckOutcome finalize(std::string id, double margin, double scale, const Tolerances& tol,
                      const InstanceDigest& digest, Hypotheses hyps,
                      Residuals residuals = {}) {
  CheckOutcome out;
  out.inequality_id = std::move(id);
  out.margin = margin;
  out.scale = scale;
  out.holds = margin >= -tol.tol_margin * scale;
  out.residuals = std::move(residuals);
  out.residuals.emplace_back("scale", scale);
  out.instance_digest = digest.hex();
  out.hypothesis_report = std::move(hyps);
  return out;
}

// Margin of lhs <= rhs in the Loewner order, plus the shared scale.
std::pair<double, double> order_margin(const ComplexMatrix& lhs, const ComplexMatrix& rhs,
                                       const Tolerances& tol) {
  const double margin = min_eig(symmetrize(rhs - lhs), tol);
  const double scale = std::max(1.0, std::max(frobenius_norm(lhs), frobenius_norm(rhs)));
  return {margin, scale};
}

void require_square_dim(const ComplexMatrix& m, std::size_t n, const char* who) {
  if (!m.is_square() || m.rows() != n) {
    throw std::invalid_argument(std::string(who) + ": expected a square matrix of dimension " +
                                std::to_string(n));
  }
}

void require_grade(const MapDescriptor& phi, PositivityGrade need, const char* who) {
  if (!grade_at_least(phi.claimed_grade, need)) {
    throw HypothesisError("map_grade", std::string(who) + ": map " + phi.name() +
                                           " is registered as " +
                                           grade_name(phi.claimed_grade) + ", need " +
                                           grade_name(need));
  }
}

void require_star(const MapDescriptor& phi, const char* who) {
  if (!phi.is_star_map) {
    throw HypothesisError("star_map", std::string(who) + ": map must be a *-map");
  }
}

// Spectrum-in-domain test with the apply_function clamping rule: closed
// endpoints admit a tol_spec * scale overshoot, open endpoints are strict.
bool spectrum_in_domain(const std::vector<double>& eigenvalues, const Interval& domain,
                        const Tolerances& tol) {
  double top = 0.0;
  for (double v : eigenvalues) top = std::max(top, std::abs(v));
  const double slack = tol.tol_spec * std::max(1.0, top);
  for (double t : eigenvalues) {
    if (domain.contains(t)) continue;
    const bool low_ok = domain.lower_closed && t < domain.lower && domain.lower - t <= slack;
    const bool high_ok = domain.upper_closed && t > domain.upper && t - domain.upper <= slack;
    if (!low_ok && !high_ok) return false;
  }
  return true;
}

bool scalar_in_domain(double t, const Interval& domain, const Tolerances& tol) {
  return spectrum_in_domain({t}, domain, tol);
}

double real_scalar(const MapDescriptor& phi, const ComplexMatrix& x, const Tolerances& tol) {
  return apply_map(phi, x, tol)(0, 0).real();
}

void require_state(const MapDescriptor& phi, const Tolerances& tol, const char* who,
                   Hypotheses& hyps) {
  if (phi.output_dim != 1 || !phi.is_linear) {
    throw HypothesisError("state", std::string(who) + ": map must be a scalar-valued state");
  }
  const double unit =
      std::abs(apply_map(phi, ComplexMatrix::identity(phi.input_dim), tol)(0, 0) -
               Complex(1.0, 0.0));
  if (unit > tol.tol_recon) {
    throw HypothesisError("state_unital", std::string(who) + ": phi(I) != 1");
  }
  hyps.emplace_back("state", true);
  hyps.emplace_back("state_unital", true);
}

}  // namespace

CheckOutcome check_schwarz_block(const ComplexMatrix& a, const ComplexMatrix& x,
                                 const ComplexMatrix& y, const Tolerances& tol) {
  const std::size_t n = a.rows();
  require_square_dim(a, n, "check_schwarz_block");
  require_square_dim(x, n, "check_schwarz_block");
  require_square_dim(y, n, "check_schwarz_block");
  const AbsPair abs = operator_abs(a);
  const BlockTwo polar_block =
      BlockTwo::general(abs.abs, a.adjoint(), a, abs.abs_adjoint);
  const BlockTwo congruence_block = BlockTwo::general(
      symmetrize(x.adjoint() * abs.abs * x), x.adjoint() * a.adjoint() * y,
      y.adjoint() * a * x, symmetrize(y.adjoint() * abs.abs_adjoint * y));
  const double m1 = min_eig(symmetrize(polar_block.assembled), tol);
  const double m2 = min_eig(symmetrize(congruence_block.assembled), tol);
  const double scale = std::max(1.0, std::max(frobenius_norm(polar_block.assembled),
                                              frobenius_norm(congruence_block.assembled)));
  InstanceDigest digest;
  digest.absorb("schwarz-block").absorb(a).absorb(x).absorb(y);
  return finalize("schwarz-block", std::min(m1, m2), scale, tol, digest, {},
                  {{"polar_block_min_eig", m1}, {"congruence_block_min_eig", m2}});
}

CheckOutcome check_thm_2_1(SchwarzVariant variant, const MapDescriptor& phi,
                           const ComplexMatrix& a, const ComplexMatrix& x,
                           const ComplexMatrix& y, const Tolerances& tol) {
  const std::size_t n = phi.input_dim;
  require_square_dim(a, n, "check_thm_2_1");
  require_square_dim(x, n, "check_thm_2_1");
  require_square_dim(y, n, "check_thm_2_1");

  Hypotheses hyps;
  std::string id;
  ComplexMatrix a_eff = a;
  ComplexMatrix y_eff = y;
  switch (variant) {
    case SchwarzVariant::i:
      id = "thm-2-1-i";
      require_grade(phi, PositivityGrade::weakly_2_positive, "check_thm_2_1(i)");
      hyps.emplace_back("weakly_2_positive", true);
      break;
    case SchwarzVariant::ii:
      id = "thm-2-1-ii";
      require_grade(phi, PositivityGrade::two_positive, "check_thm_2_1(ii)");
      require_star(phi, "check_thm_2_1(ii)");
      hyps.emplace_back("two_positive", true);
      hyps.emplace_back("star_map", true);
      break;
    case SchwarzVariant::remark:
      id = "rmk-2-2";
      require_grade(phi, PositivityGrade::weakly_2_positive, "check_thm_2_1(remark)");
      require_star(phi, "check_thm_2_1(remark)");
      hyps.emplace_back("weakly_2_positive", true);
      hyps.emplace_back("star_map", true);
      a_eff = symmetrize(a);
      y_eff = x;
      break;
  }

  const AbsPair abs = operator_abs(a_eff);
  const ComplexMatrix k = symmetrize(x.adjoint() * abs.abs * x);
  const ComplexMatrix l = symmetrize(y_eff.adjoint() * abs.abs_adjoint * y_eff);
  const ComplexMatrix m = x.adjoint() * a_eff.adjoint() * y_eff;

  ComplexMatrix lhs, rhs;
  if (variant == SchwarzVariant::i) {
    const PolarDecomposition polar = polar_decompose(m, tol);
    const ComplexMatrix& v = polar.isometry_part;
    lhs = apply_map(phi, polar.positive_part, tol);
    rhs = geometric_mean(HermitianView(apply_map(phi, symmetrize(v.adjoint() * k * v), tol)),
                         HermitianView(apply_map(phi, l, tol)), tol);
  } else {
    const ComplexMatrix phi_m = apply_map(phi, m, tol);
    const PolarDecomposition polar = polar_decompose(phi_m, tol);
    const ComplexMatrix& u = polar.isometry_part;
    lhs = polar.positive_part;
    const ComplexMatrix left = symmetrize(u.adjoint() * apply_map(phi, k, tol) * u);
    const ComplexMatrix right =
        variant == SchwarzVariant::remark ? apply_map(phi, k, tol) : apply_map(phi, l, tol);
    rhs = geometric_mean(HermitianView(left), HermitianView(right), tol);
  }
  lhs = symmetrize(lhs);

  auto [margin, scale] = order_margin(lhs, rhs, tol);
  InstanceDigest digest;
  digest.absorb(id);
  absorb_descriptor(digest, phi);
  digest.absorb(a_eff).absorb(x).absorb(y_eff);
  return finalize(id, margin, scale, tol, digest, std::move(hyps));
}

CheckOutcome check_cor_2_3(const ComplexMatrix& a, const ComplexVector& x,
                           const ComplexVector& y, const Tolerances& tol) {
  if (!a.is_square() || a.rows() != x.size() || x.size() != y.size()) {
    throw std::invalid_argument("check_cor_2_3: dimension mismatch");
  }
  const AbsPair abs = operator_abs(a);
  const double lhs = std::norm(inner(a * x, y));
  const double rx = inner(abs.abs * x, x).real();
  const double ry = inner(abs.abs_adjoint * y, y).real();
  const double rhs = rx * ry;
  const double scale = std::max(1.0, std::max(lhs, rhs));
  InstanceDigest digest;
  digest.absorb("cor-2-3").absorb(a).absorb(x).absorb(y);
  return finalize("cor-2-3", rhs - lhs, scale, tol, digest, {},
                  {{"abs_pairing_x", rx}, {"abs_pairing_y", ry}, {"cross_term", lhs}});
}

CheckOutcome check_cor_2_4(const ComplexMatrix& a, const ComplexMatrix& x,
                           const ComplexMatrix& y, const Tolerances& tol) {
  const std::size_t n = a.rows();
  require_square_dim(a, n, "check_cor_2_4");
  require_square_dim(x, n, "check_cor_2_4");
  require_square_dim(y, n, "check_cor_2_4");
  const AbsPair abs = operator_abs(a);
  const double tx = (x.adjoint() * abs.abs * x).trace().real();
  const double ty = (y.adjoint() * abs.abs_adjoint * y).trace().real();
  const ComplexMatrix m = x.adjoint() * a.adjoint() * y;
  const double tm = operator_abs(m).abs.trace().real();
  const double lhs = tm * tm;
  const double rhs = tx * ty;
  const double scale = std::max(1.0, std::max(lhs, rhs));
  InstanceDigest digest;
  digest.absorb("cor-2-4").absorb(a).absorb(x).absorb(y);
  return finalize("cor-2-4", rhs - lhs, scale, tol, digest, {},
                  {{"trace_x", tx}, {"trace_y", ty}, {"trace_cross", tm}});
}

CheckOutcome check_cor_2_5(PolarBoundVariant variant, const MapDescriptor& phi,
                           const ComplexMatrix& x, const Tolerances& tol) {
  require_square_dim(x, phi.input_dim, "check_cor_2_5");
  Hypotheses hyps;
  const AbsPair abs = operator_abs(x);
  ComplexMatrix lhs, rhs;
  std::string id;
  if (variant == PolarBoundVariant::i) {
    id = "cor-2-5-i";
    require_grade(phi, PositivityGrade::weakly_2_positive, "check_cor_2_5(i)");
    hyps.emplace_back("weakly_2_positive", true);
    const PolarDecomposition polar = polar_decompose(x, tol);
    const ComplexMatrix& v = polar.isometry_part;
    lhs = symmetrize(apply_map(phi, polar.positive_part, tol));
    rhs = geometric_mean(
        HermitianView(apply_map(phi, symmetrize(v.adjoint() * abs.abs_adjoint * v), tol)),
        HermitianView(apply_map(phi, abs.abs, tol)), tol);
  } else {
    id = "cor-2-5-ii";
    require_grade(phi, PositivityGrade::two_positive, "check_cor_2_5(ii)");
    require_star(phi, "check_cor_2_5(ii)");
    hyps.emplace_back("two_positive", true);
    hyps.emplace_back("star_map", true);
    const ComplexMatrix phi_x = apply_map(phi, x, tol);
    const PolarDecomposition polar = polar_decompose(phi_x, tol);
    const ComplexMatrix& u = polar.isometry_part;
    lhs = polar.positive_part;
    const ComplexMatrix half_abs_adj =
        apply_function(power_function(0.5), HermitianView(abs.abs_adjoint), tol);
    const ComplexMatrix three_half_abs =
        apply_function(power_function(1.5), HermitianView(abs.abs), tol);
    rhs = geometric_mean(
        HermitianView(symmetrize(u.adjoint() * apply_map(phi, half_abs_adj, tol) * u)),
        HermitianView(apply_map(phi, three_half_abs, tol)), tol);
  }
  auto [margin, scale] = order_margin(lhs, rhs, tol);
  InstanceDigest digest;
  digest.absorb(id);
  absorb_descriptor(digest, phi);
  digest.absorb(x);
  return finalize(id, margin, scale, tol, digest, std::move(hyps));
}

CheckOutcome check_mean_subpreservation(MeanKind kind, const MapDescriptor& phi,
                                        const HermitianView& a, const HermitianView& b,
                                        const Tolerances& tol) {
  if (kind == MeanKind::parallel_sum) {
    throw std::invalid_argument("check_mean_subpreservation: kind must be geometric or harmonic");
  }
  if (a.dim() != phi.input_dim || b.dim() != phi.input_dim) {
    throw std::invalid_argument("check_mean_subpreservation: dimension mismatch");
  }
  Hypotheses hyps;
  require_grade(phi, PositivityGrade::weakly_2_positive, "check_mean_subpreservation");
  hyps.emplace_back("weakly_2_positive", true);
  const bool geo = kind == MeanKind::geometric;
  if (!geo) {
    if (!phi.is_linear) {
      throw HypothesisError("linear",
                            "check_mean_subpreservation: harmonic kind needs a linear map");
    }
    hyps.emplace_back("linear", true);
  }
  auto mean = [&](const HermitianView& p, const HermitianView& q) {
    return geo ? geometric_mean(p, q, tol) : harmonic_mean(p, q, tol);
  };
  const ComplexMatrix lhs = symmetrize(apply_map(phi, mean(a, b), tol));
  const ComplexMatrix rhs = mean(HermitianView(apply_map(phi, a.matrix(), tol)),
                                 HermitianView(apply_map(phi, b.matrix(), tol)));
  auto [margin, scale] = order_margin(lhs, rhs, tol);
  const std::string id = geo ? "mean-sub-geo" : "mean-sub-har";
  InstanceDigest digest;
  digest.absorb(id);
  absorb_descriptor(digest, phi);
  digest.absorb(a.matrix()).absorb(b.matrix());
  return finalize(id, margin, scale, tol, digest, std::move(hyps));
}

CheckOutcome check_hua_classical(const HuaInstance& inst, const Tolerances& tol) {
  if (!(inst.delta > 0.0) || !(inst.alpha > 0.0) || inst.xs.empty()) {
    throw HypothesisError("hua_instance",
                          "check_hua_classical: need delta > 0, alpha > 0, nonempty xs");
  }
  const double n = static_cast<double>(inst.xs.size());
  double sum = 0.0, sum_sq = 0.0;
  for (double v : inst.xs) {
    sum += v;
    sum_sq += v * v;
  }
  const double lhs = (inst.delta - sum) * (inst.delta - sum) + inst.alpha * sum_sq;
  const double rhs = inst.alpha / (n + inst.alpha) * inst.delta * inst.delta;
  const double scale = std::max(1.0, std::max(lhs, rhs));
  InstanceDigest digest;
  digest.absorb("hua-classical").absorb(inst.delta).absorb(inst.alpha);
  for (double v : inst.xs) digest.absorb(v);
  return finalize("hua-classical", lhs - rhs, scale, tol, digest,
                  {{"hua_instance", true}}, {{"lhs", lhs}, {"rhs", rhs}});
}

CheckOutcome check_eq_3_1(const MapDescriptor& phi, const ComplexMatrix& a,
                          const ComplexMatrix& b, const Tolerances& tol) {
  require_square_dim(a, phi.input_dim, "check_eq_3_1");
  require_square_dim(b, phi.input_dim, "check_eq_3_1");
  Hypotheses hyps;
  require_state(phi, tol, "check_eq_3_1", hyps);
  const double norm_a = operator_norm(a);
  const double norm_b = operator_norm(b);
  if (norm_a > 1.0 + tol.tol_margin || norm_b > 1.0 + tol.tol_margin) {
    throw HypothesisError("contraction", "check_eq_3_1: A and B must be contractions");
  }
  hyps.emplace_back("a_contraction", true);
  hyps.emplace_back("b_contraction", true);

  const ComplexMatrix id = ComplexMatrix::identity(phi.input_dim);
  const double cross = std::abs(apply_map(phi, b.adjoint() * a, tol)(0, 0));
  const double paa = real_scalar(phi, symmetrize(a.adjoint() * a), tol);
  const double pbb = real_scalar(phi, symmetrize(b.adjoint() * b), tol);
  const double pia = real_scalar(phi, symmetrize(id - a.adjoint() * a), tol);
  const double pib = real_scalar(phi, symmetrize(id - b.adjoint() * b), tol);
  const double t = 1.0 - cross;
  const double s = 1.0 - std::sqrt(std::max(0.0, paa * pbb));
  const double gap1 = t * t - s * s;
  const double gap2 = s * s - pia * pib;
  const double scale = std::max(1.0, std::max(t * t, s * s));
  InstanceDigest digest;
  digest.absorb("eq-3-1");
  absorb_descriptor(digest, phi);
  digest.absorb(a).absorb(b);
  return finalize("eq-3-1", std::min(gap1, gap2), scale, tol, digest, std::move(hyps),
                  {{"gap_first", gap1}, {"gap_second", gap2}});
}

CheckOutcome check_thm_3_1(const MapDescriptor& phi, const ComplexMatrix& a,
                           const ComplexMatrix& x, const ComplexMatrix& y,
                           const Tolerances& tol) {
  const std::size_t n = phi.input_dim;
  require_square_dim(a, n, "check_thm_3_1");
  require_square_dim(x, n, "check_thm_3_1");
  require_square_dim(y, n, "check_thm_3_1");
  Hypotheses hyps;
  require_grade(phi, PositivityGrade::two_positive, "check_thm_3_1");
  require_star(phi, "check_thm_3_1");
  hyps.emplace_back("two_positive", true);
  hyps.emplace_back("star_map", true);

  const AbsPair abs = operator_abs(a);
  const ComplexMatrix k = symmetrize(apply_map(phi, symmetrize(x.adjoint() * abs.abs * x), tol));
  const ComplexMatrix l =
      symmetrize(apply_map(phi, symmetrize(y.adjoint() * abs.abs_adjoint * y), tol));
  const double norm_k = operator_norm(k);
  const double norm_l = operator_norm(l);
  if (norm_k > 1.0 + tol.tol_margin || norm_l > 1.0 + tol.tol_margin) {
    throw HypothesisError("contraction_images",
                          "check_thm_3_1: Phi(X*|A|X) and Phi(Y*|A*|Y) must be contractions");
  }
  hyps.emplace_back("phi_x_contraction", true);
  hyps.emplace_back("phi_y_contraction", true);

  const ComplexMatrix phi_m = apply_map(phi, x.adjoint() * a.adjoint() * y, tol);
  const PolarDecomposition polar = polar_decompose(phi_m, tol);
  const ComplexMatrix& u = polar.isometry_part;
  const ComplexMatrix id = ComplexMatrix::identity(phi.output_dim);
  const ComplexMatrix lhs = symmetrize(id - polar.positive_part);
  const ComplexMatrix rhs =
      geometric_mean(HermitianView(symmetrize(u.adjoint() * (id - k) * u)),
                     HermitianView(id - l), tol);
  // The assertion runs downhill here: rhs <= lhs.
  auto [margin, scale] = order_margin(rhs, lhs, tol);
  InstanceDigest digest;
  digest.absorb("thm-3-1");
  absorb_descriptor(digest, phi);
  digest.absorb(a).absorb(x).absorb(y);
  return finalize("thm-3-1", margin, scale, tol, digest, std::move(hyps),
                  {{"norm_phi_x", norm_k}, {"norm_phi_y", norm_l}});
}

CheckOutcome check_jensen_subunital(
    const FunctionDescriptor& f,
    const std::vector<std::pair<HermitianView, ComplexMatrix>>& pairs,
    const Tolerances& tol) {
  if (pairs.empty()) throw std::invalid_argument("check_jensen_subunital: no pairs");
  const std::size_t n = pairs.front().first.dim();
  Hypotheses hyps;

  ComplexMatrix s(n, n);
  for (const auto& [ai, xi] : pairs) {
    if (ai.dim() != n || xi.rows() != n || xi.cols() != n) {
      throw std::invalid_argument("check_jensen_subunital: dimension mismatch");
    }
    s += xi.adjoint() * xi;
  }
  const double normalization =
      frobenius_norm(s - ComplexMatrix::identity(n)) / std::sqrt(static_cast<double>(n));
  if (normalization > tol.tol_recon) {
    throw HypothesisError("normalization",
                          "check_jensen_subunital: sum X_i* X_i is not the identity");
  }
  hyps.emplace_back("normalization", true);

  for (const auto& [ai, xi] : pairs) {
    (void)xi;
    if (!spectrum_in_domain(hermitian_eig(ai, tol).eigenvalues, f.domain, tol)) {
      throw HypothesisError("spectra_in_domain",
                            "check_jensen_subunital: sp(A_i) not contained in the domain");
    }
  }
  hyps.emplace_back("spectra_in_domain", true);

  ComplexMatrix argument(n, n);
  ComplexMatrix rhs(n, n);
  for (const auto& [ai, xi] : pairs) {
    argument += xi.adjoint() * ai.matrix() * xi;
    rhs += xi.adjoint() * apply_function(f, ai, tol) * xi;
  }

  const ComplexMatrix lhs = apply_function(f, HermitianView(argument), tol);
  rhs = symmetrize(rhs);
  auto [margin, scale] = order_margin(lhs, rhs, tol);
  InstanceDigest digest;
  digest.absorb("eq-3-3").absorb(f.name);
  for (const auto& [ai, xi] : pairs) digest.absorb(ai.matrix()).absorb(xi);
  return finalize("eq-3-3", margin, scale, tol, digest, std::move(hyps));
}

CheckOutcome check_cdj(const MapDescriptor& phi, const FunctionDescriptor& f,
                       const HermitianView& a, const Tolerances& tol) {
  if (a.dim() != phi.input_dim) throw std::invalid_argument("check_cdj: dimension mismatch");
  Hypotheses hyps;
  if (!phi.is_linear) {
    throw HypothesisError("linear", "check_cdj: map must be linear");
  }
  const ComplexMatrix unit_image =
      apply_map(phi, ComplexMatrix::identity(phi.input_dim), tol);
  if (frobenius_norm(unit_image - ComplexMatrix::identity(phi.output_dim)) >
      tol.tol_recon * std::sqrt(static_cast<double>(phi.output_dim))) {
    throw HypothesisError("unital", "check_cdj: map is not unital");
  }
  hyps.emplace_back("linear", true);
  hyps.emplace_back("unital", true);
  if (!spectrum_in_domain(hermitian_eig(a, tol).eigenvalues, f.domain, tol)) {
    throw HypothesisError("spectrum_in_domain", "check_cdj: sp(A) not contained in the domain");
  }
  hyps.emplace_back("spectrum_in_domain", true);

  const ComplexMatrix lhs =
      apply_function(f, HermitianView(apply_map(phi, a.matrix(), tol)), tol);
  const ComplexMatrix rhs = symmetrize(apply_map(phi, apply_function(f, a, tol), tol));
  auto [margin, scale] = order_margin(lhs, rhs, tol);
  InstanceDigest digest;
  digest.absorb("cdj");
  absorb_descriptor(digest, phi);
  digest.absorb(f.name).absorb(a.matrix());
  return finalize("cdj", margin, scale, tol, digest, std::move(hyps));
}

CheckOutcome check_thm_3_2(const std::vector<std::vector<std::size_t>>& partition,
                           const FunctionDescriptor& f, const HermitianView& b,
                           const ComplexMatrix& c, const Tolerances& tol) {
  const std::size_t n = b.dim();
  require_square_dim(c, n, "check_thm_3_2");
  const MapDescriptor phi = MapDescriptor::pinching_map(n, partition);
  Hypotheses hyps;

  const double c_defect = frobenius_norm(c - apply_map(phi, c, tol)) /
                          std::max(1.0, frobenius_norm(c));
  if (c_defect > tol.tol_herm) {
    throw HypothesisError("c_in_subalgebra",
                          "check_thm_3_2: C is not block-diagonal for the partition");
  }
  hyps.emplace_back("c_in_subalgebra", true);

  const SvdResult c_svd = singular_value_decompose(c);
  const double smax = c_svd.singular_values.empty() ? 0.0 : c_svd.singular_values.front();
  if (c_svd.singular_values.empty() || c_svd.singular_values.back() <= tol.tol_rank * smax) {
    throw HypothesisError("c_invertible", "check_thm_3_2: C must be invertible");
  }
  hyps.emplace_back("c_invertible", true);

  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexMatrix c_inv = inverse(c, tol);
  const ComplexMatrix phi_b = symmetrize(apply_map(phi, b.matrix(), tol));
  const ComplexMatrix one_minus = symmetrize(id - phi_b);
  const ComplexMatrix conjugated = symmetrize(c_inv.adjoint() * b.matrix() * c_inv);
  const ComplexMatrix gram = symmetrize(id + c.adjoint() * c);
  const ComplexMatrix gram_inv = symmetrize(inverse(gram, tol));

  const auto spectrum_of = [&](const ComplexMatrix& m) {
    return hermitian_eig(HermitianView(m), tol).eigenvalues;
  };
  if (!spectrum_in_domain(spectrum_of(one_minus), f.domain, tol) ||
      !spectrum_in_domain(spectrum_of(gram_inv), f.domain, tol) ||
      !spectrum_in_domain(spectrum_of(conjugated), f.domain, tol)) {
    throw HypothesisError("spectra_in_domain",
                          "check_thm_3_2: a required spectrum leaves the domain");
  }
  hyps.emplace_back("spectra_in_domain", true);

  const ComplexMatrix lhs =
      symmetrize(apply_function(f, HermitianView(one_minus), tol) +
                 c.adjoint() *
                     apply_map(phi, apply_function(f, HermitianView(conjugated), tol), tol) *
                     c);
  const ComplexMatrix rhs =
      symmetrize(apply_function(f, HermitianView(gram_inv), tol) * gram);
  auto [margin, scale] = order_margin(rhs, lhs, tol);
  InstanceDigest digest;
  digest.absorb("thm-3-2").absorb(phi.name()).absorb(f.name).absorb(b.matrix()).absorb(c);
  return finalize("thm-3-2", margin, scale, tol, digest, std::move(hyps));
}

CheckOutcome check_cor_3_3(const MapDescriptor& phi, const FunctionDescriptor& f,
                           const HermitianView& b, double gamma, const Tolerances& tol) {
  if (b.dim() != phi.input_dim) throw std::invalid_argument("check_cor_3_3: dimension mismatch");
  Hypotheses hyps;
  require_state(phi, tol, "check_cor_3_3", hyps);
  if (!(gamma > 0.0)) {
    throw HypothesisError("gamma_positive", "check_cor_3_3: gamma must be positive");
  }
  hyps.emplace_back("gamma_positive", true);

  const double u = 1.0 - real_scalar(phi, b.matrix(), tol);
  const double v = 1.0 / (1.0 + gamma);
  const HermitianView scaled(Complex(1.0 / gamma, 0.0) * b.matrix());
  if (!scalar_in_domain(u, f.domain, tol) || !scalar_in_domain(v, f.domain, tol) ||
      !spectrum_in_domain(hermitian_eig(scaled, tol).eigenvalues, f.domain, tol)) {
    throw HypothesisError("domain_membership",
                          "check_cor_3_3: an evaluation point leaves the domain");
  }
  hyps.emplace_back("domain_membership", true);

  const double mean_term =
      real_scalar(phi, apply_function(f, scaled, tol), tol);
  const double lhs = f.eval(f.domain.clamp(u)) + gamma * mean_term;
  const double rhs = (1.0 + gamma) * f.eval(v);
  const double scale = std::max(1.0, std::max(std::abs(lhs), std::abs(rhs)));
  InstanceDigest digest;
  digest.absorb("cor-3-3");
  absorb_descriptor(digest, phi);
  digest.absorb(f.name).absorb(b.matrix()).absorb(gamma);
  return finalize("cor-3-3", lhs - rhs, scale, tol, digest, std::move(hyps),
                  {{"lhs", lhs}, {"rhs", rhs}});
}

}  // namespace loewner
