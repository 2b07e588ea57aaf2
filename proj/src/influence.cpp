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

#include "attacklab/influence.hpp"

#include <cmath>
#include <stdexcept>

#include "attacklab/linalg.hpp"

namespace attacklab {
namespace {

void require_valid(const AttackScenario& s, const char* what) {
  ValidationReport rep = validate_scenario(s);
  if (!rep.ok) {
    std::string msg = std::string(what) + ": scenario invalid:";
    for (const auto& v : rep.violations) msg += " [" + v.key + "] " + v.message;
    throw std::invalid_argument(msg);
  }
}

// RK4 on the matrix ODE Y' = M Y + F(t), Y(0) = 0, where column i of F(t)
// is e_i (x) theta(t). All columns advance together so the M*Y products are
// gemm-shaped.
Matrix integrate_columns(const GlobalSystem& sys, const AttackStrategy& strategy,
                         double t_c, double h) {
  const std::size_t dim = sys.m_mat.rows();
  const std::size_t cols = static_cast<std::size_t>(sys.n);
  const int m = sys.m;
  Matrix y(dim, cols);
  Matrix k1(dim, cols), k2(dim, cols), k3(dim, cols), k4(dim, cols), tmp(dim, cols);

  auto add_forcing = [&](Matrix& out, double t) {
    Vector th = theta_at(strategy, t);
    for (std::size_t i = 0; i < cols; ++i)
      for (int c = 0; c < m; ++c) out(i * m + c, i) += th[c];
  };
  auto deriv = [&](const Matrix& state, double t, Matrix& out) {
    kernels::gemm(sys.m_mat.data(), state.data(), out.data(), dim, dim, cols);
    add_forcing(out, t);
  };

  const long long full_steps = static_cast<long long>(std::floor(t_c / h + 1e-9));
  // grid-indexed stage times clamped to t_c (same contract as simulate_linear)
  auto advance = [&](double t0, double t1) {
    const double step = t1 - t0;
    const double tm = t0 + 0.5 * step;
    deriv(y, t0, k1);
    tmp = y;
    kernels::axpy(0.5 * step, k1.data(), tmp.data(), dim * cols);
    deriv(tmp, tm, k2);
    tmp = y;
    kernels::axpy(0.5 * step, k2.data(), tmp.data(), dim * cols);
    deriv(tmp, tm, k3);
    tmp = y;
    kernels::axpy(step, k3.data(), tmp.data(), dim * cols);
    deriv(tmp, t1, k4);
    kernels::axpy(step / 6.0, k1.data(), y.data(), dim * cols);
    kernels::axpy(step / 3.0, k2.data(), y.data(), dim * cols);
    kernels::axpy(step / 3.0, k3.data(), y.data(), dim * cols);
    kernels::axpy(step / 6.0, k4.data(), y.data(), dim * cols);
  };
  double t = 0.0;
  for (long long i = 1; i <= full_steps; ++i) {
    double t_next = std::min(static_cast<double>(i) * h, t_c);
    advance(t, t_next);
    t = t_next;
  }
  if (t < t_c - 1e-12 * std::max(1.0, t_c)) advance(t, t_c);
  return y;
}

}  // namespace

InfluenceCache build_influence_cache(const AttackScenario& s) {
  require_valid(s, "build_influence_cache");
  GlobalSystem sys = build_global(s.local, s.graph, s.dbar);
  InfluenceCache cache;
  cache.n = s.graph.n;
  cache.m = s.local.m;
  cache.fingerprint = scenario_fingerprint(s);

  if (is_time_invariant(s.strategy)) {
    const Vector& k = std::get<ConstantStrategy>(s.strategy).k;
    Matrix phi = exp_integral(sys.m_mat, s.t_c);
    const std::size_t dim = sys.m_mat.rows();
    cache.columns = Matrix(dim, cache.n);
    // g_i = phi * (e_i (x) K): a K-weighted sum of m adjacent phi columns
    for (int i = 0; i < cache.n; ++i) {
      for (int c = 0; c < cache.m; ++c) {
        if (k[c] == 0.0) continue;
        for (std::size_t r = 0; r < dim; ++r)
          cache.columns(r, i) += k[c] * phi(r, i * cache.m + c);
      }
    }
  } else {
    cache.columns = integrate_columns(sys, s.strategy, s.t_c, s.quad_step);
  }
  return cache;
}

double conv_error(const InfluenceCache& cache, const std::vector<int>& set) {
  const std::size_t dim = cache.columns.rows();
  Vector acc(dim, 0.0);
  for (int id : set) {
    if (id < 1 || id > cache.n) throw std::invalid_argument("conv_error: agent ID out of range");
    for (std::size_t r = 0; r < dim; ++r) acc[r] += cache.columns(r, id - 1);
  }
  return vec_norm(acc);
}

double conv_error_oracle(const AttackScenario& s, const std::vector<int>& set) {
  require_valid(s, "conv_error_oracle");
  if (set.empty()) return 0.0;
  GlobalSystem sys = build_global(s.local, s.graph, s.dbar);
  AttackInput attack{indicator(set, s.graph.n), s.strategy};
  Vector zero(sys.m_mat.rows(), 0.0);
  Trajectory traj = simulate_trajectory(sys, zero, &attack, s.t_c, s.quad_step / 2.0);
  return vec_norm(traj.states.back());
}

MhatBlocks mhat_blocks(const AttackScenario& s) {
  require_valid(s, "mhat_blocks");
  SpectralData spectral = spectral_decompose(laplacian(s.graph));
  MhatBlocks out;
  out.blocks.reserve(s.graph.n);
  for (int k = 0; k < s.graph.n; ++k) {
    Matrix blk = s.local.a;
    blk -= s.local.b * (spectral.eigenvalues[k] * s.dbar);
    out.blocks.push_back(exp_integral(blk, s.t_c));
  }
  return out;
}

SpectralWeights spectral_weights(const AttackScenario& s) {
  if (!is_time_invariant(s.strategy))
    throw std::invalid_argument("spectral_weights: supported for constant strategies only");
  const Vector& k = std::get<ConstantStrategy>(s.strategy).k;
  SpectralWeights out;
  out.spectral = spectral_decompose(laplacian(s.graph));
  MhatBlocks mhat = mhat_blocks(s);
  out.weights.resize(s.graph.n);
  for (int j = 0; j < s.graph.n; ++j) {
    Vector pk = mhat.blocks[j] * k;
    out.weights[j] = vec_dot(pk, pk);
  }
  return out;
}

double closed_form_error(const AttackScenario& s, const std::vector<int>& set) {
  if (!is_time_invariant(s.strategy))
    throw std::invalid_argument("closed_form_error: unsupported strategy (constant only)");
  SpectralWeights sw = spectral_weights(s);
  IndicatorVector mu = indicator(set, s.graph.n);
  double total = 0.0;
  for (int kk = 0; kk < s.graph.n; ++kk) {
    double v = 0.0;
    for (int i = 0; i < s.graph.n; ++i)
      if (mu.bits[i]) v += sw.spectral.eigvecs(i, kk);
    total += v * v * sw.weights[kk];
  }
  return std::sqrt(std::max(total, 0.0));
}

}  // namespace attacklab
