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

#pragma once

#include <cstddef>

namespace attacklab::kernels {

// Low-level dense kernels behind every matrix/vector operation in the
// library. A backend is a table of function pointers; the scalar table is
// the reference implementation and the SIMD tables must match it bitwise
// up to floating-point reassociation (equivalence-tested).
struct Backend {
  const char* name;
  // sum_i x[i]*y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // sum_i x[i]*x[i]
  double (*nrm2_sq)(const double* x, std::size_t n);
  // y[i] += a*x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // x[i] *= a
  void (*scal)(double a, double* x, std::size_t n);
  // y = A*x, A row-major rows x cols
  void (*gemv)(const double* a, std::size_t rows, std::size_t cols,
               const double* x, double* y);
  // C = A*B, row-major, A rows x inner, B inner x cols, C rows x cols
  void (*gemm)(const double* a, const double* b, double* c, std::size_t rows,
               std::size_t inner, std::size_t cols);
};

// Reference backend; always available.
const Backend& scalar_backend();

// SIMD backends; null when the platform or CPU lacks them.
const Backend* avx2_backend();
const Backend* neon_backend();

// Backend chosen at first use: AVX2 or NEON when available, otherwise
// scalar. ATTACKLAB_KERNELS=scalar|avx2|neon forces a choice (unknown or
// unavailable names fall back to scalar).
const Backend& active_backend();

inline double dot(const double* x, const double* y, std::size_t n) {
  return active_backend().dot(x, y, n);
}
inline double nrm2_sq(const double* x, std::size_t n) {
  return active_backend().nrm2_sq(x, n);
}
inline void axpy(double a, const double* x, double* y, std::size_t n) {
  active_backend().axpy(a, x, y, n);
}
inline void scal(double a, double* x, std::size_t n) {
  active_backend().scal(a, x, n);
}
inline void gemv(const double* a, std::size_t rows, std::size_t cols,
                 const double* x, double* y) {
  active_backend().gemv(a, rows, cols, x, y);
}
inline void gemm(const double* a, const double* b, double* c, std::size_t rows,
                 std::size_t inner, std::size_t cols) {
  active_backend().gemm(a, b, c, rows, inner, cols);
}

}  // namespace attacklab::kernels
