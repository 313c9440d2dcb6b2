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

#include "loewner/suite.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>

#include "loewner/generators.hpp"
#include "loewner/inequalities.hpp"
#include "loewner/linalg.hpp"

namespace loewner {

namespace {

// ---------------------------------------------------------------------------
// per-trial map pools
// ---------------------------------------------------------------------------

std::vector<std::vector<std::size_t>> half_partition(std::size_t n) {
  const std::size_t split = (n + 1) / 2;
  std::vector<std::size_t> first, second;
  for (std::size_t i = 0; i < n; ++i) (i < split ? first : second).push_back(i);
  if (second.empty()) return {first};
  return {first, second};
}

MapDescriptor pick_cp_map(Rng& rng, std::size_t n) {
  switch (rng.index(5)) {
    case 0: return MapDescriptor::pinching_map(n, half_partition(n));
    case 1: return MapDescriptor::compression_map(isometry_columns(rng, n, std::max<std::size_t>(1, n - 1)));
    case 2: return MapDescriptor::normalized_trace_map(n);
    case 3: return MapDescriptor::vector_state_map(unit_vector(rng, n));
    default: {
      std::vector<ComplexMatrix> ks;
      ks.push_back(0.5 * ginibre(rng, n, n));
      ks.push_back(0.5 * ginibre(rng, n, n));
      return MapDescriptor::kraus_map(std::move(ks));
    }
  }
}

// Weakly 2-positive or better; includes the nonlinear det-shift map.
MapDescriptor pick_w2p_map(Rng& rng, std::size_t n) {
  switch (rng.index(6)) {
    case 0: return MapDescriptor::transpose_map(n);
    case 1: return MapDescriptor::det_shift_map(rng.uniform(0.0, 2.0), n);
    default: return pick_cp_map(rng, n);
  }
}

// Linear weakly 2-positive.
MapDescriptor pick_linear_w2p_map(Rng& rng, std::size_t n) {
  if (rng.index(5) == 0) return MapDescriptor::transpose_map(n);
  return pick_cp_map(rng, n);
}

MapDescriptor pick_unital_map(Rng& rng, std::size_t n) {
  switch (rng.index(5)) {
    case 0: return MapDescriptor::pinching_map(n, half_partition(n));
    case 1: return MapDescriptor::compression_map(isometry_columns(rng, n, std::max<std::size_t>(1, n - 1)));
    case 2: return MapDescriptor::normalized_trace_map(n);
    case 3: return MapDescriptor::vector_state_map(unit_vector(rng, n));
    default: return MapDescriptor::transpose_map(n);
  }
}

MapDescriptor pick_state(Rng& rng, std::size_t n) {
  if (rng.index(2) == 0) return MapDescriptor::vector_state_map(unit_vector(rng, n));
  return MapDescriptor::normalized_trace_map(n);
}

FunctionDescriptor pick_function(Rng& rng) {
  const auto& entries = opconvex::catalog();
  return entries[rng.index(entries.size())];
}

// Spectra are drawn strictly inside the function's domain.
Interval sample_interval(const FunctionDescriptor& f) {
  if (f.name == "square") return Interval::open(-1.0, 1.0);
  if (f.name == "neg_sqrt") return Interval::open(0.01, 2.0);
  return Interval::open(0.1, 2.0);
}

ComplexVector random_vector(Rng& rng, std::size_t n) {
  ComplexVector v(n);
  for (Complex& z : v) z = rng.complex_normal();
  return v;
}

// Block-diagonal invertible C for the partition, with singular values in
// [0.5, 1.5] per block.
ComplexMatrix block_diagonal_conditioned(Rng& rng, std::size_t n,
                                         const std::vector<std::vector<std::size_t>>& blocks) {
  ComplexMatrix c(n, n);
  for (const auto& block : blocks) {
    const std::size_t k = block.size();
    const ComplexMatrix u = haar_unitary(rng, k);
    const ComplexMatrix v = haar_unitary(rng, k);
    std::vector<double> s(k);
    for (double& x : s) x = rng.uniform(0.5, 1.5);
    const ComplexMatrix small = u * ComplexMatrix::diagonal(s) * v.adjoint();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) c(block[i], block[j]) = small(i, j);
  }
  return c;
}

// ---------------------------------------------------------------------------
// suite registry
// ---------------------------------------------------------------------------

CheckOutcome trial_schwarz_block(Rng& rng, std::size_t n, const Tolerances& tol) {
  return check_schwarz_block(ginibre(rng, n, n), ginibre(rng, n, n), ginibre(rng, n, n), tol);
}

CheckOutcome trial_thm_2_1(SchwarzVariant variant, Rng& rng, std::size_t n,
                           const Tolerances& tol) {
  MapDescriptor phi = variant == SchwarzVariant::ii ? pick_cp_map(rng, n) : pick_w2p_map(rng, n);
  const ComplexMatrix a = ginibre(rng, n, n);
  const ComplexMatrix x = ginibre(rng, n, n);
  const ComplexMatrix y = ginibre(rng, n, n);
  return check_thm_2_1(variant, phi, a, x, y, tol);
}

CheckOutcome trial_cor_2_3(Rng& rng, std::size_t n, const Tolerances& tol) {
  return check_cor_2_3(ginibre(rng, n, n), random_vector(rng, n), random_vector(rng, n), tol);
}

CheckOutcome trial_cor_2_4(Rng& rng, std::size_t n, const Tolerances& tol) {
  return check_cor_2_4(ginibre(rng, n, n), ginibre(rng, n, n), ginibre(rng, n, n), tol);
}

CheckOutcome trial_cor_2_5(PolarBoundVariant variant, Rng& rng, std::size_t n,
                           const Tolerances& tol) {
  MapDescriptor phi =
      variant == PolarBoundVariant::ii ? pick_cp_map(rng, n) : pick_w2p_map(rng, n);
  return check_cor_2_5(variant, phi, ginibre(rng, n, n), tol);
}

CheckOutcome trial_mean_sub(MeanKind kind, Rng& rng, std::size_t n, const Tolerances& tol) {
  MapDescriptor phi =
      kind == MeanKind::geometric ? pick_w2p_map(rng, n) : pick_linear_w2p_map(rng, n);
  return check_mean_subpreservation(kind, phi, HermitianView(psd_wishart(rng, n)),
                                    HermitianView(psd_wishart(rng, n)), tol);
}

CheckOutcome trial_hua_classical(Rng& rng, std::size_t n, const Tolerances& tol) {
  HuaInstance inst;
  inst.delta = rng.uniform(0.1, 10.0);
  inst.alpha = rng.uniform(0.1, 10.0);
  inst.xs.resize(n);
  const double spread = rng.uniform(0.0, 2.0);
  for (double& x : inst.xs) x = spread * rng.normal();
  return check_hua_classical(inst, tol);
}

CheckOutcome trial_eq_3_1(Rng& rng, std::size_t n, const Tolerances& tol) {
  MapDescriptor phi = pick_state(rng, n);
  return check_eq_3_1(phi, contraction(rng, n), contraction(rng, n), tol);
}

CheckOutcome trial_thm_3_1(Rng& rng, std::size_t n, const Tolerances& tol) {
  MapDescriptor phi = pick_cp_map(rng, n);
  const ComplexMatrix a = ginibre(rng, n, n);
  ComplexMatrix x = ginibre(rng, n, n);
  ComplexMatrix y = ginibre(rng, n, n);
  // Pull the instance inside the contraction hypothesis: Phi is linear, so
  // scaling X by sqrt(0.9 / ||Phi(X*|A|X)||) lands the image norm at 0.9.
  const AbsPair abs = operator_abs(a);
  const auto rescale = [&](ComplexMatrix& m, const ComplexMatrix& weight) {
    const double norm =
        operator_norm(apply_map(phi, symmetrize(m.adjoint() * weight * m), tol));
    if (norm > 0.9) m *= Complex(std::sqrt(0.9 / norm), 0.0);
  };
  rescale(x, abs.abs);
  rescale(y, abs.abs_adjoint);
  return check_thm_3_1(phi, a, x, y, tol);
}

CheckOutcome trial_eq_3_3(Rng& rng, std::size_t n, const Tolerances& tol) {
  const FunctionDescriptor f = pick_function(rng);
  const Interval box = sample_interval(f);
  std::vector<ComplexMatrix> raw = {ginibre(rng, n, n), ginibre(rng, n, n)};
  ComplexMatrix s(n, n);
  for (const auto& x : raw) s += x.adjoint() * x;
  // Normalize through S^{-1/2} so the weights sum to the identity exactly.
  EigResult eig = hermitian_eig(HermitianView(s), tol);
  ComplexMatrix scaled(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      scaled(i, j) = eig.eigenvectors(i, j) / std::sqrt(eig.eigenvalues[j]);
  const ComplexMatrix s_inv_root = symmetrize(scaled * eig.eigenvectors.adjoint());
  std::vector<std::pair<HermitianView, ComplexMatrix>> pairs;
  for (auto& x : raw) {
    pairs.emplace_back(HermitianView(hermitian_in_interval(rng, n, box)), x * s_inv_root);
  }
  return check_jensen_subunital(f, pairs, tol);
}

CheckOutcome trial_cdj(Rng& rng, std::size_t n, const Tolerances& tol) {
  MapDescriptor phi = pick_unital_map(rng, n);
  const FunctionDescriptor f = pick_function(rng);
  return check_cdj(phi, f, HermitianView(hermitian_in_interval(rng, n, sample_interval(f))),
                   tol);
}

CheckOutcome trial_thm_3_2(Rng& rng, std::size_t n, const Tolerances& tol) {
  const auto partition = half_partition(n);
  const FunctionDescriptor f = pick_function(rng);
  const ComplexMatrix c = block_diagonal_conditioned(rng, n, partition);
  const ComplexMatrix d = hermitian_in_interval(rng, n, Interval::open(0.05, 0.95));
  ComplexMatrix b = symmetrize(c.adjoint() * d * c);
  const double norm = operator_norm(b);
  if (norm > 0.9) b *= Complex(0.9 / norm, 0.0);
  return check_thm_3_2(partition, f, HermitianView(b), c, tol);
}

CheckOutcome trial_cor_3_3(Rng& rng, std::size_t n, const Tolerances& tol) {
  MapDescriptor phi = pick_state(rng, n);
  const FunctionDescriptor f = pick_function(rng);
  const double gamma = rng.uniform(0.2, 2.0);
  const ComplexMatrix d = hermitian_in_interval(rng, n, Interval::open(0.05, 0.95));
  const double s = std::min(gamma, 0.9);
  return check_cor_3_3(phi, f, HermitianView(s * d), gamma, tol);
}

TrialFn trial_fn_for(const std::string& suite_id) {
  if (suite_id == "schwarz-block") return trial_schwarz_block;
  if (suite_id == "thm-2-1-i")
    return [](Rng& r, std::size_t n, const Tolerances& t) {
      return trial_thm_2_1(SchwarzVariant::i, r, n, t);
    };
  if (suite_id == "thm-2-1-ii")
    return [](Rng& r, std::size_t n, const Tolerances& t) {
      return trial_thm_2_1(SchwarzVariant::ii, r, n, t);
    };
  if (suite_id == "rmk-2-2")
    return [](Rng& r, std::size_t n, const Tolerances& t) {
      return trial_thm_2_1(SchwarzVariant::remark, r, n, t);
    };
  if (suite_id == "cor-2-3") return trial_cor_2_3;
  if (suite_id == "cor-2-4") return trial_cor_2_4;
  if (suite_id == "cor-2-5-i")
    return [](Rng& r, std::size_t n, const Tolerances& t) {
      return trial_cor_2_5(PolarBoundVariant::i, r, n, t);
    };
  if (suite_id == "cor-2-5-ii")
    return [](Rng& r, std::size_t n, const Tolerances& t) {
      return trial_cor_2_5(PolarBoundVariant::ii, r, n, t);
    };
  if (suite_id == "mean-sub-geo")
    return [](Rng& r, std::size_t n, const Tolerances& t) {
      return trial_mean_sub(MeanKind::geometric, r, n, t);
    };
  if (suite_id == "mean-sub-har")
    return [](Rng& r, std::size_t n, const Tolerances& t) {
      return trial_mean_sub(MeanKind::harmonic, r, n, t);
    };
  if (suite_id == "hua-classical") return trial_hua_classical;
  if (suite_id == "eq-3-1") return trial_eq_3_1;
  if (suite_id == "thm-3-1") return trial_thm_3_1;
  if (suite_id == "eq-3-3") return trial_eq_3_3;
  if (suite_id == "cdj") return trial_cdj;
  if (suite_id == "thm-3-2") return trial_thm_3_2;
  if (suite_id == "cor-3-3") return trial_cor_3_3;
  throw std::invalid_argument("unknown suite id: " + suite_id);
}

struct TrialSlot {
  double normalized_margin = 0.0;
  bool holds = true;
  std::string digest;
  std::exception_ptr error;
};

}  // namespace

const std::vector<std::string>& known_suite_ids() {
  static const std::vector<std::string> ids = {
      "schwarz-block", "thm-2-1-i", "thm-2-1-ii", "rmk-2-2",   "cor-2-3",  "cor-2-4",
      "cor-2-5-i",     "cor-2-5-ii", "mean-sub-geo", "mean-sub-har", "hua-classical",
      "eq-3-1",        "thm-3-1",   "eq-3-3",     "cdj",       "thm-3-2",  "cor-3-3"};
  return ids;
}

bool is_known_suite(const std::string& suite_id) {
  for (const auto& id : known_suite_ids()) {
    if (id == suite_id) return true;
  }
  return false;
}

SuiteReport run_suite_with(const TrialFn& fn, const std::string& suite_id,
                           std::uint64_t master_seed, std::size_t trials,
                           const std::vector<std::size_t>& dims, const Tolerances& tol,
                           RunPolicy policy) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite_id = suite_id;
  report.master_seed = master_seed;
  report.trials = trials;
  report.dims = dims;
  report.tolerance = tol.tol_margin;

  const std::size_t total = trials * dims.size();
  std::vector<TrialSlot> slots(total);

  auto run_one = [&](std::size_t idx) {
    TrialSlot& slot = slots[idx];
    try {
      const std::size_t dim = dims[idx / trials];
      Rng rng = Rng::for_trial(master_seed, suite_id, idx);
      const CheckOutcome outcome = fn(rng, dim, tol);
      slot.normalized_margin = outcome.normalized_margin();
      slot.holds = outcome.holds;
      slot.digest = outcome.instance_digest;
    } catch (...) {
      slot.error = std::current_exception();
    }
  };

  if (policy == RunPolicy::parallel) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (long idx = 0; idx < static_cast<long>(total); ++idx) {
      run_one(static_cast<std::size_t>(idx));
    }
  } else {
    for (std::size_t idx = 0; idx < total; ++idx) run_one(idx);
  }

  double min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t idx = 0; idx < total; ++idx) {
    const TrialSlot& slot = slots[idx];
    if (slot.error) std::rethrow_exception(slot.error);
    min_margin = std::min(min_margin, slot.normalized_margin);
    if (!slot.holds) {
      report.failures.push_back({idx, slot.digest, slot.normalized_margin});
    }
  }
  report.min_margin = total == 0 ? 0.0 : min_margin;
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SuiteReport run_suite(const std::string& suite_id, std::uint64_t master_seed,
                      std::size_t trials, const std::vector<std::size_t>& dims,
                      const Tolerances& tol, RunPolicy policy) {
  return run_suite_with(trial_fn_for(suite_id), suite_id, master_seed, trials, dims, tol,
                        policy);
}

int exit_code_for(const std::vector<SuiteReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed()) return 1;
  }
  return 0;
}

std::string reports_to_json(const std::vector<SuiteReport>& reports, bool include_wall_time) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures) {
      failures.push_back({{"trial_index", f.trial_index},
                          {"instance_digest", f.instance_digest},
                          {"margin", f.margin}});
    }
    nlohmann::json entry = {{"suite_id", r.suite_id},
                            {"master_seed", r.master_seed},
                            {"trials", r.trials},
                            {"dims", r.dims},
                            {"failures", failures},
                            {"min_margin", r.min_margin},
                            {"tolerance", r.tolerance}};
    if (include_wall_time) entry["wall_time"] = r.wall_time;
    out.push_back(entry);
  }
  return out.dump(2);
}

}  // namespace loewner
