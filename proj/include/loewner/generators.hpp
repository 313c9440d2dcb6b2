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

#ifndef LOEWNER_GENERATORS_HPP
#define LOEWNER_GENERATORS_HPP

#include <cstdint>
#include <variant>

#include "loewner/maps.hpp"
#include "loewner/matrix.hpp"
#include "loewner/positivity.hpp"
#include "loewner/rng.hpp"
#include "loewner/types.hpp"

namespace loewner {

enum class GeneratorKind {
  ginibre,
  psd_wishart,
  hermitian_in_interval,
  contraction,
  unitary,
  isometry_columns,
  psd_weak_block,
  psd_block
};

struct GeneratorSpec {
  GeneratorKind kind;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  Interval interval = Interval::open(0.0, 1.0);  // hermitian_in_interval only
  std::size_t cols = 1;                          // isometry_columns only
};

// Deterministic per seed:
//   ginibre               i.i.d. standard complex Gaussian entries
//   psd_wishart           G*G scaled to unit operator norm
//   hermitian_in_interval Q diag(uniform in J) Q* with Haar Q
//   contraction           G / (||G|| (1 + u)), u uniform in (0, 1)
//   unitary               Haar via phase-fixed QR of a Ginibre matrix
//   isometry_columns      the first `cols` columns of a Haar unitary
//   psd_weak_block        [A, C; C, B] PSD with Hermitian C
//   psd_block             blocks of a 2n x 2n Wishart matrix
std::variant<ComplexMatrix, BlockTwo> generate(const GeneratorSpec& spec,
                                               const Tolerances& tol = {});

// Convenience accessors; throw std::invalid_argument when the kind yields the
// other shape.
ComplexMatrix generate_matrix(const GeneratorSpec& spec, const Tolerances& tol = {});
BlockTwo generate_block(const GeneratorSpec& spec, const Tolerances& tol = {});

// Re-seeded samplers used directly by the suite runner.
ComplexMatrix ginibre(Rng& rng, std::size_t rows, std::size_t cols);
ComplexMatrix psd_wishart(Rng& rng, std::size_t n);
ComplexMatrix hermitian_in_interval(Rng& rng, std::size_t n, const Interval& interval);
ComplexMatrix contraction(Rng& rng, std::size_t n);
ComplexMatrix haar_unitary(Rng& rng, std::size_t n);
ComplexMatrix isometry_columns(Rng& rng, std::size_t n, std::size_t cols);
ComplexVector unit_vector(Rng& rng, std::size_t n);

}  // namespace loewner

#endif  // LOEWNER_GENERATORS_HPP
