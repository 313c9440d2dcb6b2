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

#include "loewner/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace loewner {

namespace {

using EMat = Eigen::MatrixXcd;

EMat to_eigen(const ComplexMatrix& m) {
  EMat e(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return e;
}

ComplexMatrix from_eigen(const EMat& e) {
  ComplexMatrix m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
  return m;
}

// Q diag(vals) Q* assembled back into a symmetrized ComplexMatrix.
ComplexMatrix assemble_spectral(const EigResult& eig, const std::vector<double>& vals) {
  const std::size_t n = eig.eigenvectors.rows();
  ComplexMatrix scaled(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = eig.eigenvectors(i, j) * vals[j];
  return symmetrize(scaled * eig.eigenvectors.adjoint());
}

}  // namespace

EigResult hermitian_eig(const HermitianView& m, const Tolerances& tol) {
  m.require_hermitian(tol.tol_herm);
  Eigen::SelfAdjointEigenSolver<EMat> solver(to_eigen(m.matrix()));
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eig: eigen-iteration did not converge");
  }
  EigResult out;
  out.eigenvalues.assign(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + solver.eigenvalues().size());
  out.eigenvectors = from_eigen(solver.eigenvectors());
  return out;
}

SvdResult singular_value_decompose(const ComplexMatrix& m) {
  Eigen::JacobiSVD<EMat> svd(to_eigen(m), Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdResult out;
  out.u = from_eigen(svd.matrixU());
  out.v = from_eigen(svd.matrixV());
  out.singular_values.assign(svd.singularValues().data(),
                             svd.singularValues().data() + svd.singularValues().size());
  return out;
}

ComplexMatrix psd_sqrt(const HermitianView& m, const Tolerances& tol) {
  EigResult eig = hermitian_eig(m, tol);
  const std::size_t n = eig.eigenvalues.size();
  double top = 0.0;
  for (double v : eig.eigenvalues) top = std::max(top, std::abs(v));
  const double scale = std::max(1.0, top);
  std::vector<double> roots(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = eig.eigenvalues[i];
    if (v < -tol.tol_psd * scale) {
      throw NumericalError("psd_sqrt: eigenvalue " + std::to_string(v) +
                           " below the PSD tolerance");
    }
    // Rank-threshold before the root: sqrt amplifies eigenvalue noise near
    // zero, so anything below the rank cutoff counts as exactly zero.
    roots[i] = v <= tol.tol_rank * scale ? 0.0 : std::sqrt(v);
  }
  return assemble_spectral(eig, roots);
}

AbsPair operator_abs(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("operator_abs: matrix not square");
  SvdResult svd = singular_value_decompose(m);
  const std::size_t n = m.rows();
  ComplexMatrix vs(n, n), us(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      vs(i, j) = svd.v(i, j) * svd.singular_values[j];
      us(i, j) = svd.u(i, j) * svd.singular_values[j];
    }
  return {symmetrize(vs * svd.v.adjoint()), symmetrize(us * svd.u.adjoint())};
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& m, const Tolerances& tol) {
  SvdResult svd = singular_value_decompose(m);
  const double smax = svd.singular_values.empty() ? 0.0 : svd.singular_values.front();
  const double cutoff = tol.tol_rank * smax;
  const std::size_t k = svd.singular_values.size();
  ComplexMatrix vsinv(m.cols(), k);
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const double s = svd.singular_values[j];
      vsinv(i, j) = (s > cutoff && s > 0.0) ? svd.v(i, j) / s : Complex(0.0, 0.0);
    }
  return vsinv * svd.u.adjoint();
}

PolarDecomposition polar_decompose(const ComplexMatrix& m, const Tolerances& tol) {
  if (!m.is_square()) throw std::invalid_argument("polar_decompose: matrix not square");
  SvdResult svd = singular_value_decompose(m);
  const std::size_t n = m.rows();
  const double smax = svd.singular_values.empty() ? 0.0 : svd.singular_values.front();
  const double cutoff = tol.tol_rank * smax;
  std::size_t rank = 0;
  ComplexMatrix uz(n, n), vs(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double s = svd.singular_values[j];
    const bool live = s > cutoff && s > 0.0;
    if (live) ++rank;
    for (std::size_t i = 0; i < n; ++i) {
      uz(i, j) = live ? svd.u(i, j) : Complex(0.0, 0.0);
      vs(i, j) = svd.v(i, j) * s;
    }
  }
  PolarDecomposition out;
  out.isometry_part = uz * svd.v.adjoint();
  out.positive_part = symmetrize(vs * svd.v.adjoint());
  out.rank = rank;
  return out;
}

ComplexMatrix apply_function(const FunctionDescriptor& f, const HermitianView& m,
                             const Tolerances& tol) {
  EigResult eig = hermitian_eig(m, tol);
  double top = 0.0;
  for (double v : eig.eigenvalues) top = std::max(top, std::abs(v));
  const double slack = tol.tol_spec * std::max(1.0, top);
  std::vector<double> vals(eig.eigenvalues.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    double t = eig.eigenvalues[i];
    if (!f.domain.contains(t)) {
      const bool near_lower_closed =
          f.domain.lower_closed && t < f.domain.lower && f.domain.lower - t <= slack;
      const bool near_upper_closed =
          f.domain.upper_closed && t > f.domain.upper && t - f.domain.upper <= slack;
      if (!near_lower_closed && !near_upper_closed) {
        throw NumericalError("apply_function(" + f.name + "): eigenvalue " +
                             std::to_string(t) + " outside the domain");
      }
      t = f.domain.clamp(t);
    }
    vals[i] = f.eval(t);
  }
  return assemble_spectral(eig, vals);
}

ComplexMatrix rank_one(const ComplexVector& x, const ComplexVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("rank_one: dimension mismatch");
  ComplexMatrix out(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out(i, j) = x[i] * std::conj(y[j]);
  return out;
}

Complex lu_determinant(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("lu_determinant: matrix not square");
  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  Complex det(1.0, 0.0);
  for (std::size_t col = 0; col < n; ++col) {
    // Partial pivoting on the largest remaining modulus.
    std::size_t pivot = col;
    double best = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double cand = std::abs(a(r, col));
      if (cand > best) {
        best = cand;
        pivot = r;
      }
    }
    if (best == 0.0) return Complex(0.0, 0.0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = a(r, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
    }
  }
  return det;
}

double operator_norm(const ComplexMatrix& m) {
  if (m.empty()) return 0.0;
  SvdResult svd = singular_value_decompose(m);
  return svd.singular_values.empty() ? 0.0 : svd.singular_values.front();
}

ComplexMatrix inverse(const ComplexMatrix& m, const Tolerances& tol) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  SvdResult svd = singular_value_decompose(m);
  const double smax = svd.singular_values.empty() ? 0.0 : svd.singular_values.front();
  for (double s : svd.singular_values) {
    if (!(s > tol.tol_rank * smax) || s == 0.0) {
      throw NumericalError("inverse: matrix is rank-deficient");
    }
  }
  return pseudo_inverse(m, tol);
}

MatrixScalars matrix_scalars(const ComplexMatrix& m, const Tolerances& tol) {
  if (!m.is_square()) throw std::invalid_argument("matrix_scalars: matrix not square");
  MatrixScalars out;
  out.trace = m.trace();
  out.determinant = lu_determinant(m);
  out.operator_norm = operator_norm(m);
  if (hermiticity_defect(m) <= tol.tol_herm) {
    EigResult eig = hermitian_eig(HermitianView(m), tol);
    out.min_hermitian_eig = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
    out.spectrum = eig.eigenvalues;
  }
  return out;
}

}  // namespace loewner
