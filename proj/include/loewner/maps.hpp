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

#ifndef LOEWNER_MAPS_HPP
#define LOEWNER_MAPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "loewner/check_outcome.hpp"
#include "loewner/digest.hpp"
#include "loewner/matrix.hpp"
#include "loewner/positivity.hpp"
#include "loewner/rng.hpp"
#include "loewner/types.hpp"

namespace loewner {

enum class PositivityGrade { positive, weakly_2_positive, two_positive, completely_positive };

constexpr bool grade_at_least(PositivityGrade have, PositivityGrade need) {
  return static_cast<int>(have) >= static_cast<int>(need);
}

std::string grade_name(PositivityGrade g);

// A concrete map on matrices with its parameters and the positivity grade it
// is registered with. Descriptors are immutable after construction.
struct MapDescriptor {
  enum class Kind {
    transpose,
    moore_penrose,
    det_shift,
    vector_state,
    normalized_trace,
    compression,
    pinching,
    kraus
  };

  Kind kind;
  std::size_t input_dim = 0;
  std::size_t output_dim = 0;
  PositivityGrade claimed_grade = PositivityGrade::positive;
  bool is_linear = false;
  bool is_star_map = true;

  double alpha = 0.0;                                // det_shift
  ComplexVector state_vector;                        // vector_state (unit norm)
  ComplexMatrix isometry;                            // compression, V*V = I
  std::vector<std::vector<std::size_t>> partition;   // pinching, 0-based blocks
  std::vector<ComplexMatrix> kraus_ops;              // kraus

  std::string name() const;

  static MapDescriptor transpose_map(std::size_t n);
  static MapDescriptor moore_penrose_map(std::size_t n);
  // X -> X* + alpha det(X) I. Registered on M_2 by default; any n works.
  static MapDescriptor det_shift_map(double alpha, std::size_t n = 2);
  // X -> [<Xe, e>] as a 1x1 matrix; e normalized on construction.
  static MapDescriptor vector_state_map(ComplexVector e);
  static MapDescriptor normalized_trace_map(std::size_t n);
  // X -> V* X V for an isometry V (n x k columns, V*V = I).
  static MapDescriptor compression_map(ComplexMatrix v);
  // X -> sum_i P_i X P_i for the projections onto the index blocks.
  static MapDescriptor pinching_map(std::size_t n, std::vector<std::vector<std::size_t>> blocks);
  static MapDescriptor kraus_map(std::vector<ComplexMatrix> ks);
};

// Feeds the map's full defining data (kind, dimensions, parameters) into a
// digest, so instances with differently parametrized maps hash apart.
void absorb_descriptor(InstanceDigest& digest, const MapDescriptor& phi);

ComplexMatrix apply_map(const MapDescriptor& phi, const ComplexMatrix& x,
                        const Tolerances& tol = {});
// Applies the map to each of the four blocks.
BlockTwo ampliate2(const MapDescriptor& phi, const BlockTwo& block, const Tolerances& tol = {});
// sum_ij E_ij (x) Phi(E_ij); defined for linear maps only. PSD iff the map is
// completely positive.
ComplexMatrix choi_matrix(const MapDescriptor& phi);

struct FalsificationResult {
  bool found = false;
  std::optional<BlockTwo> witness;
  double min_eig = 0.0;  // of the ampliated witness if found, else the most
                         // negative value seen across the search
};

// Searches the canonical counterexample blocks first, then seeded random PSD
// blocks of the grade's shape. Exhausting the trials without a witness is
// inconclusive, not a certificate.
FalsificationResult falsify_grade(const MapDescriptor& phi, PositivityGrade grade,
                                  std::size_t trials, std::uint64_t seed,
                                  const Tolerances& tol = {});

// Residual of Phi(A X B) = A Phi(X) B for a pinching map and A, B in its
// block-diagonal subalgebra.
CheckOutcome check_bimodule(const MapDescriptor& pinching, const ComplexMatrix& a,
                            const ComplexMatrix& x, const ComplexMatrix& b,
                            const Tolerances& tol = {});

// Random PSD block of the weak form [A, C; C, B] with Hermitian C. Even draws
// use C = t (A # B) with t in [-1, 1]; odd draws scale an arbitrary Hermitian
// C to the PSD boundary by bisection on the minimum eigenvalue.
BlockTwo sample_weak_psd_block(Rng& rng, std::size_t n, const Tolerances& tol = {});
// Random PSD block [A, C; C*, B] read off a 2n x 2n Wishart matrix.
BlockTwo sample_psd_block(Rng& rng, std::size_t n);

// Shared low-level samplers (also used by the generator module).
ComplexMatrix sample_ginibre(Rng& rng, std::size_t rows, std::size_t cols);
ComplexMatrix sample_psd_wishart(Rng& rng, std::size_t n);  // G*G scaled to unit norm
ComplexMatrix sample_unitary(Rng& rng, std::size_t n);

}  // namespace loewner

#endif  // LOEWNER_MAPS_HPP
