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

#include "attacklab/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace attacklab::kernels {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double nrm2_sq_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scal_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void gemv_scalar(const double* a, std::size_t rows, std::size_t cols,
                 const double* x, double* y) {
  for (std::size_t i = 0; i < rows; ++i) y[i] = dot_scalar(a + i * cols, x, cols);
}

void gemm_scalar(const double* a, const double* b, double* c, std::size_t rows,
                 std::size_t inner, std::size_t cols) {
  std::memset(c, 0, rows * cols * sizeof(double));
  for (std::size_t i = 0; i < rows; ++i) {
    double* ci = c + i * cols;
    const double* ai = a + i * inner;
    for (std::size_t k = 0; k < inner; ++k) {
      axpy_scalar(ai[k], b + k * cols, ci, cols);
    }
  }
}

const Backend kScalar = {"scalar",      dot_scalar,  nrm2_sq_scalar,
                         axpy_scalar,   scal_scalar, gemv_scalar,
                         gemm_scalar};

const Backend* pick_backend() {
  const char* forced = std::getenv("ATTACKLAB_KERNELS");
  if (forced != nullptr) {
    if (std::strcmp(forced, "avx2") == 0 && avx2_backend() != nullptr)
      return avx2_backend();
    if (std::strcmp(forced, "neon") == 0 && neon_backend() != nullptr)
      return neon_backend();
    return &kScalar;
  }
  if (const Backend* b = avx2_backend()) return b;
  if (const Backend* b = neon_backend()) return b;
  return &kScalar;
}

}  // namespace

const Backend& scalar_backend() { return kScalar; }

const Backend& active_backend() {
  static const Backend* chosen = pick_backend();
  return *chosen;
}

}  // namespace attacklab::kernels
