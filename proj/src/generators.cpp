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

#include "loewner/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "loewner/linalg.hpp"

namespace loewner {

ComplexMatrix ginibre(Rng& rng, std::size_t rows, std::size_t cols) {
  return sample_ginibre(rng, rows, cols);
}

ComplexMatrix psd_wishart(Rng& rng, std::size_t n) { return sample_psd_wishart(rng, n); }

ComplexMatrix hermitian_in_interval(Rng& rng, std::size_t n, const Interval& interval) {
  if (!std::isfinite(interval.lower) || !std::isfinite(interval.upper) ||
      !(interval.lower < interval.upper)) {
    throw std::invalid_argument("hermitian_in_interval: need finite lower < upper");
  }
  const ComplexMatrix q = sample_unitary(rng, n);
  std::vector<double> diag(n);
  for (double& d : diag) d = rng.uniform(interval.lower, interval.upper);
  return symmetrize(q * ComplexMatrix::diagonal(diag) * q.adjoint());
}

ComplexMatrix contraction(Rng& rng, std::size_t n) {
  const ComplexMatrix g = sample_ginibre(rng, n, n);
  const double norm = operator_norm(g);
  const double u = rng.uniform01();
  if (norm == 0.0) return g;
  return (1.0 / (norm * (1.0 + u))) * g;
}

ComplexMatrix haar_unitary(Rng& rng, std::size_t n) { return sample_unitary(rng, n); }

ComplexMatrix isometry_columns(Rng& rng, std::size_t n, std::size_t cols) {
  if (cols == 0 || cols > n) throw std::invalid_argument("isometry_columns: need 1 <= cols <= n");
  const ComplexMatrix q = sample_unitary(rng, n);
  ComplexMatrix v(n, cols);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cols; ++j) v(i, j) = q(i, j);
  return v;
}

ComplexVector unit_vector(Rng& rng, std::size_t n) {
  ComplexVector v(n);
  for (Complex& z : v) z = rng.complex_normal();
  const double norm = vector_norm(v);
  if (norm == 0.0) {
    v[0] = Complex(1.0, 0.0);
    return v;
  }
  for (Complex& z : v) z /= norm;
  return v;
}

std::variant<ComplexMatrix, BlockTwo> generate(const GeneratorSpec& spec,
                                               const Tolerances& tol) {
  if (spec.dim < 1) throw std::invalid_argument("generate: dim must be >= 1");
  Rng rng(spec.seed);
  switch (spec.kind) {
    case GeneratorKind::ginibre:
      return ginibre(rng, spec.dim, spec.dim);
    case GeneratorKind::psd_wishart:
      return psd_wishart(rng, spec.dim);
    case GeneratorKind::hermitian_in_interval:
      return hermitian_in_interval(rng, spec.dim, spec.interval);
    case GeneratorKind::contraction:
      return contraction(rng, spec.dim);
    case GeneratorKind::unitary:
      return haar_unitary(rng, spec.dim);
    case GeneratorKind::isometry_columns:
      return isometry_columns(rng, spec.dim, spec.cols);
    case GeneratorKind::psd_weak_block:
      return sample_weak_psd_block(rng, spec.dim, tol);
    case GeneratorKind::psd_block:
      return sample_psd_block(rng, spec.dim);
  }
  throw std::logic_error("generate: unhandled kind");
}

ComplexMatrix generate_matrix(const GeneratorSpec& spec, const Tolerances& tol) {
  auto value = generate(spec, tol);
  if (auto* m = std::get_if<ComplexMatrix>(&value)) return *m;
  throw std::invalid_argument("generate_matrix: kind yields a block");
}

BlockTwo generate_block(const GeneratorSpec& spec, const Tolerances& tol) {
  auto value = generate(spec, tol);
  if (auto* b = std::get_if<BlockTwo>(&value)) return *b;
  throw std::invalid_argument("generate_block: kind yields a matrix");
}

}  // namespace loewner
