// Copyright 2026 The Authors.
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

#include "attacklab/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace attacklab {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      double aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        double* dst = out.row(i * b.rows() + p) + j * b.cols();
        kernels::axpy(aij, b.row(p), dst, b.cols());
      }
    }
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  kernels::gemm(data(), rhs.data(), out.data(), rows_, cols_, rhs.cols_);
  return out;
}

Vector Matrix::operator*(const Vector& x) const {
  if (cols_ != x.size()) throw std::invalid_argument("matvec shape mismatch");
  Vector y(rows_);
  kernels::gemv(data(), rows_, cols_, x.data(), y.data());
  return y;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  kernels::axpy(1.0, rhs.data(), data(), data_.size());
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  kernels::axpy(-1.0, rhs.data(), data(), data_.size());
  return *this;
}

Matrix& Matrix::operator*=(double a) {
  kernels::scal(a, data(), data_.size());
  return *this;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::fabs(v));
  return m;
}

double Matrix::norm1() const {
  double best = 0.0;
  for (std::size_t j = 0; j < cols_; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) s += std::fabs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

bool Matrix::is_symmetric(double tol) const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (std::fabs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

Vector Matrix::column(std::size_t j) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

double vec_norm(const Vector& x) {
  return std::sqrt(kernels::nrm2_sq(x.data(), x.size()));
}

}  // namespace attacklab
