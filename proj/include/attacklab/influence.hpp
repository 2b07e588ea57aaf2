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

#include <cstdint>
#include <vector>

#include "attacklab/attack.hpp"

namespace attacklab {

/// Per-agent attack responses g_i = int_0^{t_c} e^{M(t_c-tau)} (e_i (x)
/// theta(tau)) dtau, stored as columns; f(A) = || sum_{i in A} g_i ||.
struct InfluenceCache {
  Matrix columns;  // mn x n
  int n = 0;
  int m = 0;
  std::uint64_t fingerprint = 0;
};

/// Constant strategies use the exact integral exp_integral(M, t_c); the
/// time-variant branch integrates all n columns jointly with RK4 at
/// quad_step.
InfluenceCache build_influence_cache(const AttackScenario& s);

/// f(A) = ||sum_{i in A} g_i||, the convergence error at t_c.
double conv_error(const InfluenceCache& cache, const std::vector<int>& set);

/// Independent check: RK4 on the full forced system at quad_step/2
/// (deliberately a different step than the cache path).
double conv_error_oracle(const AttackScenario& s, const std::vector<int>& set);

/// Blocks of the diagonalized integral: block 1 = phi(A), block k =
/// phi(A - lambda_k dbar B) with ascending Laplacian eigenvalues.
struct MhatBlocks {
  std::vector<Matrix> blocks;
};

MhatBlocks mhat_blocks(const AttackScenario& s);

/// Spectral-coordinate form for constant theta:
/// f(A)^2 = sum_k v_k^2 ||phi_k K||^2 with v = U^T mu^A. Exact for constant
/// strategies; throws unsupported-strategy otherwise.
double closed_form_error(const AttackScenario& s, const std::vector<int>& set);

/// Shared precomputation for the closed form and the pairwise h form.
struct SpectralWeights {
  SpectralData spectral;
  Vector weights;  // w_k = ||phi_k K||^2
};

SpectralWeights spectral_weights(const AttackScenario& s);

}  // namespace attacklab
