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

// AVX2+FMA variants. This translation unit is compiled with -mavx2 -mfma;
// the dispatcher only hands the table out after a runtime CPU check, so the
// rest of the binary stays baseline-ISA clean.

#include "attacklab/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstring>

namespace attacklab::kernels {
namespace {

inline double hsum4(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  }
  double s = hsum4(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

double nrm2_sq_avx2(const double* x, std::size_t n) { return dot_avx2(x, x, n); }

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    __m256d y1 = _mm256_loadu_pd(y + i + 4);
    y0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), y0);
    y1 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i + 4), y1);
    _mm256_storeu_pd(y + i, y0);
    _mm256_storeu_pd(y + i + 4, y1);
  }
  for (; i + 4 <= n; i += 4) {
    __m256d y0 = _mm256_loadu_pd(y + i);
    y0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), y0);
    _mm256_storeu_pd(y + i, y0);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scal_avx2(double a, double* x, std::size_t n) {
  __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) x[i] *= a;
}

void gemv_avx2(const double* a, std::size_t rows, std::size_t cols,
               const double* x, double* y) {
  for (std::size_t i = 0; i < rows; ++i) y[i] = dot_avx2(a + i * cols, x, cols);
}

// i-k-j loop with the j dimension vectorized; two k's fused per pass so each
// C-row load/store is amortized.
void gemm_avx2(const double* a, const double* b, double* c, std::size_t rows,
               std::size_t inner, std::size_t cols) {
  std::memset(c, 0, rows * cols * sizeof(double));
  for (std::size_t i = 0; i < rows; ++i) {
    double* ci = c + i * cols;
    const double* ai = a + i * inner;
    std::size_t k = 0;
    for (; k + 2 <= inner; k += 2) {
      __m256d a0 = _mm256_set1_pd(ai[k]);
      __m256d a1 = _mm256_set1_pd(ai[k + 1]);
      const double* b0 = b + k * cols;
      const double* b1 = b0 + cols;
      std::size_t j = 0;
      for (; j + 4 <= cols; j += 4) {
        __m256d cv = _mm256_loadu_pd(ci + j);
        cv = _mm256_fmadd_pd(a0, _mm256_loadu_pd(b0 + j), cv);
        cv = _mm256_fmadd_pd(a1, _mm256_loadu_pd(b1 + j), cv);
        _mm256_storeu_pd(ci + j, cv);
      }
      for (; j < cols; ++j) ci[j] += ai[k] * b0[j] + ai[k + 1] * b1[j];
    }
    for (; k < inner; ++k) axpy_avx2(ai[k], b + k * cols, ci, cols);
  }
}

const Backend kAvx2 = {"avx2",    dot_avx2,  nrm2_sq_avx2, axpy_avx2,
                       scal_avx2, gemv_avx2, gemm_avx2};

}  // namespace

const Backend* avx2_backend() {
  static const Backend* table = []() -> const Backend* {
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
      return &kAvx2;
    return nullptr;
  }();
  return table;
}

}  // namespace attacklab::kernels

#else

namespace attacklab::kernels {
const Backend* avx2_backend() { return nullptr; }
}  // namespace attacklab::kernels

#endif
