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

#include <array>
#include <vector>

#include "attacklab/kernels.hpp"
#include "attacklab/rng.hpp"
#include "doctest.h"

namespace {

using namespace attacklab;

std::vector<double> random_vec(SplitMix64& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = 2.0 * rng.next_double() - 1.0;
  return v;
}

// Every available SIMD backend must agree with the scalar reference up to
// floating-point reassociation.
void check_backend(const kernels::Backend& simd) {
  const auto& ref = kernels::scalar_backend();
  SplitMix64 rng(7);
  for (std::size_t n : {std::size_t{1}, std::size_t{3}, std::size_t{8}, std::size_t{17},
                        std::size_t{64}, std::size_t{301}}) {
    auto x = random_vec(rng, n);
    auto y = random_vec(rng, n);
    CHECK(simd.dot(x.data(), y.data(), n) ==
          doctest::Approx(ref.dot(x.data(), y.data(), n)).epsilon(1e-13));
    CHECK(simd.nrm2_sq(x.data(), n) ==
          doctest::Approx(ref.nrm2_sq(x.data(), n)).epsilon(1e-13));

    auto y1 = y, y2 = y;
    simd.axpy(0.37, x.data(), y1.data(), n);
    ref.axpy(0.37, x.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-14));

    auto x1 = x, x2 = x;
    simd.scal(-1.75, x1.data(), n);
    ref.scal(-1.75, x2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(x1[i] == x2[i]);
  }

  for (auto [rows, inner, cols] : {std::array<std::size_t, 3>{1, 1, 1},
                                   std::array<std::size_t, 3>{3, 5, 2},
                                   std::array<std::size_t, 3>{12, 12, 6},
                                   std::array<std::size_t, 3>{31, 17, 23}}) {
    auto a = random_vec(rng, rows * inner);
    auto b = random_vec(rng, inner * cols);
    auto xv = random_vec(rng, inner);
    std::vector<double> c1(rows * cols), c2(rows * cols), yv1(rows), yv2(rows);
    simd.gemm(a.data(), b.data(), c1.data(), rows, inner, cols);
    ref.gemm(a.data(), b.data(), c2.data(), rows, inner, cols);
    for (std::size_t i = 0; i < c1.size(); ++i)
      CHECK(c1[i] == doctest::Approx(c2[i]).epsilon(1e-12));
    simd.gemv(a.data(), rows, inner, xv.data(), yv1.data());
    ref.gemv(a.data(), rows, inner, xv.data(), yv2.data());
    for (std::size_t i = 0; i < rows; ++i)
      CHECK(yv1[i] == doctest::Approx(yv2[i]).epsilon(1e-12));
  }
}

TEST_CASE("scalar kernels compute the obvious answers") {
  const auto& k = kernels::scalar_backend();
  const double x[] = {1.0, 2.0, 3.0};
  const double y[] = {4.0, -5.0, 6.0};
  CHECK(k.dot(x, y, 3) == 12.0);
  CHECK(k.nrm2_sq(x, 3) == 14.0);
  double z[] = {1.0, 1.0, 1.0};
  k.axpy(2.0, x, z, 3);
  CHECK(z[0] == 3.0);
  CHECK(z[2] == 7.0);
}

TEST_CASE("gemm multiplies row-major blocks") {
  const auto& k = kernels::active_backend();
  const double a[] = {1, 2, 3, 4, 5, 6};   // 2x3
  const double b[] = {7, 8, 9, 10, 11, 12};  // 3x2
  double c[4];
  k.gemm(a, b, c, 2, 3, 2);
  CHECK(c[0] == 58.0);
  CHECK(c[1] == 64.0);
  CHECK(c[2] == 139.0);
  CHECK(c[3] == 154.0);
}

TEST_CASE("SIMD backends match the scalar reference") {
  if (const auto* avx2 = kernels::avx2_backend()) {
    INFO("checking avx2");
    check_backend(*avx2);
  }
  if (const auto* neon = kernels::neon_backend()) {
    INFO("checking neon");
    check_backend(*neon);
  }
  check_backend(kernels::active_backend());
}

}  // namespace
