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

#ifndef LOEWNER_MATRIX_HPP
#define LOEWNER_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "loewner/types.hpp"

namespace loewner {

// Dense complex matrix with row-major storage. Value semantics throughout;
// every operation returns a fresh matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  // Row-major real entries; imaginary parts zero.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<double> real_entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
  }
  static ComplexMatrix diagonal(const std::vector<double>& d);
  static ComplexMatrix diagonal(const ComplexVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;  // requires square
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, Complex s);
ComplexMatrix operator*(const ComplexMatrix& a, double s);

double frobenius_norm(const ComplexMatrix& m);
double max_abs_entry(const ComplexMatrix& m);
// ||M - M*||_F / max(1, ||M||_F); requires square.
double hermiticity_defect(const ComplexMatrix& m);
ComplexMatrix symmetrize(const ComplexMatrix& m);  // (M + M*)/2
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
// Direct sum diag(a, b).
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

// <x, y> = sum_i x_i conj(y_i): linear in the first argument.
Complex inner(const ComplexVector& x, const ComplexVector& y);
double vector_norm(const ComplexVector& x);
ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& x);

// A Hermitian operand: holds the symmetrized value (M + M*)/2 together with
// the recorded hermiticity defect of the raw input. Operations that require
// Hermitian inputs call require_hermitian() with their tolerance.
class HermitianView {
 public:
  explicit HermitianView(const ComplexMatrix& raw);

  const ComplexMatrix& matrix() const { return value_; }
  double defect() const { return defect_; }
  std::size_t dim() const { return value_.rows(); }
  void require_hermitian(double tol_herm) const;

 private:
  ComplexMatrix value_;
  double defect_ = 0.0;
};

}  // namespace loewner

#endif  // LOEWNER_MATRIX_HPP
