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

#include "loewner/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace loewner {

namespace {

void require_square_same(const ComplexMatrix& a, const ComplexMatrix& b, const char* who) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw std::invalid_argument(std::string(who) + ": blocks must be square and equally sized");
  }
}

}  // namespace

BlockTwo BlockTwo::general(const ComplexMatrix& a, const ComplexMatrix& c_top,
                           const ComplexMatrix& c_bottom, const ComplexMatrix& b) {
  require_square_same(a, b, "BlockTwo");
  require_square_same(c_top, c_bottom, "BlockTwo");
  if (a.rows() != c_top.rows()) {
    throw std::invalid_argument("BlockTwo: off-diagonal blocks must match the diagonal size");
  }
  BlockTwo out;
  out.top_left = a;
  out.top_right = c_top;
  out.bottom_left = c_bottom;
  out.bottom_right = b;
  out.block_dim = a.rows();
  const std::size_t n = a.rows();
  ComplexMatrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = a(i, j);
      m(i, n + j) = c_top(i, j);
      m(n + i, j) = c_bottom(i, j);
      m(n + i, n + j) = b(i, j);
    }
  out.assembled = m;
  return out;
}

BlockTwo BlockTwo::hermitian_form(const ComplexMatrix& a, const ComplexMatrix& c,
                                  const ComplexMatrix& b) {
  return general(a, c, c.adjoint(), b);
}

BlockTwo BlockTwo::weak_form(const ComplexMatrix& a, const ComplexMatrix& c,
                             const ComplexMatrix& b, const Tolerances& tol) {
  if (hermiticity_defect(c) > tol.tol_herm) {
    throw std::invalid_argument("BlockTwo::weak_form: off-diagonal block is not Hermitian");
  }
  return general(a, c, c, b);
}

BlockTwo BlockTwo::from_assembled(const ComplexMatrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0) {
    throw std::invalid_argument("BlockTwo::from_assembled: need an even square matrix");
  }
  const std::size_t n = m.rows() / 2;
  ComplexMatrix a(n, n), ct(n, n), cb(n, n), b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = m(i, j);
      ct(i, j) = m(i, n + j);
      cb(i, j) = m(n + i, j);
      b(i, j) = m(n + i, n + j);
    }
  return general(a, ct, cb, b);
}

PsdVerdict is_psd(const HermitianView& m, const Tolerances& tol) {
  EigResult eig = hermitian_eig(m, tol);
  if (eig.eigenvalues.empty()) return {true, 0.0};
  const double lo = eig.eigenvalues.front();
  const double hi = std::abs(eig.eigenvalues.back());
  const double scale = std::max(1.0, std::max(std::abs(lo), hi));
  return {lo >= -tol.tol_psd * scale, lo};
}

OrderVerdict loewner_leq(const HermitianView& a, const HermitianView& b,
                         const Tolerances& tol) {
  if (a.dim() != b.dim()) throw std::invalid_argument("loewner_leq: dimension mismatch");
  a.require_hermitian(tol.tol_herm);
  b.require_hermitian(tol.tol_herm);
  EigResult eig = hermitian_eig(HermitianView(b.matrix() - a.matrix()), tol);
  const double margin = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
  const double scale =
      std::max(1.0, std::max(frobenius_norm(a.matrix()), frobenius_norm(b.matrix())));
  return {margin >= -tol.tol_psd * scale, margin};
}

ContractionWitness contraction_witness(const HermitianView& a, const HermitianView& b,
                                       const ComplexMatrix& c, const Tolerances& tol) {
  if (a.dim() != b.dim() || c.rows() != a.dim() || c.cols() != b.dim()) {
    throw std::invalid_argument("contraction_witness: dimension mismatch");
  }
  const ComplexMatrix ra = psd_sqrt(a, tol);
  const ComplexMatrix rb = psd_sqrt(b, tol);
  ContractionWitness out;
  out.w = pseudo_inverse(ra, tol) * c * pseudo_inverse(rb, tol);
  out.norm = operator_norm(out.w);
  out.reconstruction_error =
      frobenius_norm(ra * out.w * rb - c) / std::max(1.0, frobenius_norm(c));
  return out;
}

}  // namespace loewner
