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

#include "attacklab/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "attacklab/linalg.hpp"

namespace attacklab {
namespace {

// A - lambda_k * dbar * B for the k-th ascending Laplacian eigenvalue.
Matrix spectral_block(const GlobalSystem& sys, std::size_t k) {
  Matrix blk = sys.local.a;
  blk -= sys.local.b * (sys.spectral.eigenvalues[k] * sys.dbar);
  return blk;
}

}  // namespace

LocalDynamics local_dynamics(Matrix a, Matrix b) {
  if (a.rows() == 0 || a.rows() != a.cols())
    throw std::invalid_argument("local_dynamics: A must be square and non-empty");
  if (b.rows() != a.rows() || b.cols() != a.cols())
    throw std::invalid_argument("local_dynamics: B must match A's shape");
  int m = static_cast<int>(a.rows());
  return LocalDynamics{std::move(a), std::move(b), m};
}

GlobalSystem build_global(const LocalDynamics& local, const Graph& g, double dbar) {
  if (!is_connected(g)) throw std::invalid_argument("build_global: graph is disconnected");
  const int dmax = max_degree(g);
  const double dbar_limit = dmax > 0 ? 1.0 / dmax : std::numeric_limits<double>::infinity();
  if (!(dbar > 0.0) || !(dbar < dbar_limit))
    throw std::invalid_argument("build_global: dbar outside (0, 1/d_max)");
  Matrix lap = laplacian(g);
  GlobalSystem sys;
  sys.n = g.n;
  sys.m = local.m;
  sys.dbar = dbar;
  sys.local = local;
  sys.spectral = spectral_decompose(lap);
  sys.m_mat = Matrix::kron(Matrix::identity(g.n), local.a);
  sys.m_mat -= Matrix::kron(lap, local.b) * dbar;
  return sys;
}

ConsensusReport check_consensus_conditions(const GlobalSystem& sys) {
  ConsensusReport rep;
  const int n = sys.n, m = sys.m;

  // Eigenvalues and singular values of M through its spectral blocks; the
  // orthogonal similarity M = (U (x) I) blockdiag (U^T (x) I) makes the
  // union over blocks exact.
  std::vector<Matrix> blocks;
  blocks.reserve(n);
  for (int k = 0; k < n; ++k) blocks.push_back(spectral_block(sys, k));

  for (const Matrix& blk : blocks) {
    for (auto& s : eig_general(blk)) rep.sigma.push_back(s);
  }

  rep.spectrum_condition = true;
  for (const auto& s : rep.sigma) {
    if (std::abs(s) <= 1e-8) continue;  // treated as the zero eigenvalue
    if (s.real() >= 0.0) {
      rep.spectrum_condition = false;
      break;
    }
  }

  // Global singular-value threshold, then per-block ranks.
  double sigma_max = 0.0;
  std::vector<Svd> svds, svds_sq;
  svds.reserve(n);
  svds_sq.reserve(n);
  for (const Matrix& blk : blocks) {
    svds.push_back(jacobi_svd(blk));
    svds_sq.push_back(jacobi_svd(blk * blk));
    if (!svds.back().singular_values.empty())
      sigma_max = std::max(sigma_max, svds.back().singular_values[0]);
  }
  double sigma_sq_max = 0.0;
  for (const auto& s : svds_sq)
    if (!s.singular_values.empty()) sigma_sq_max = std::max(sigma_sq_max, s.singular_values[0]);

  auto rank_of = [](const Svd& s, double thresh) {
    int r = 0;
    for (double v : s.singular_values)
      if (v > thresh) ++r;
    return r;
  };
  int rank_m = 0, rank_m2 = 0;
  for (int k = 0; k < n; ++k) {
    rank_m += rank_of(svds[k], 1e-8 * sigma_max);
    rank_m2 += rank_of(svds_sq[k], 1e-8 * sigma_sq_max);
  }
  rep.rank_condition = rank_m == rank_m2;

  // Kernel vectors lift as U_k (x) b; identical m-blocks require the
  // constant eigenvector, i.e. the lambda_1 = 0 block of a connected graph.
  rep.kernel_condition = true;
  bool kernel_nontrivial = false;
  std::optional<Vector> consensus_dir;
  for (int k = 0; k < n; ++k) {
    const auto& svd = svds[k];
    for (std::size_t j = 0; j < svd.singular_values.size(); ++j) {
      if (svd.singular_values[j] > 1e-8 * sigma_max) continue;
      kernel_nontrivial = true;
      Vector b = svd.right_vectors.column(j);  // unit m-vector
      // lifted kernel vector: (U column k) (x) b; blocks identical iff the
      // eigenvector entries are all equal
      double first = sys.spectral.eigvecs(0, k);
      for (int i = 1; i < n && rep.kernel_condition; ++i) {
        double diff = std::fabs(sys.spectral.eigvecs(i, k) - first);
        if (diff > 1e-8) rep.kernel_condition = false;
      }
      if (rep.kernel_condition && !consensus_dir) consensus_dir = b;
    }
  }

  rep.holds = rep.rank_condition && rep.spectrum_condition && rep.kernel_condition;
  if (rep.holds) {
    if (kernel_nontrivial)
      rep.consensus_value = consensus_dir;  // direction of the 1_n (x) b kernel
    else
      rep.consensus_value = Vector(m, 0.0);  // Hurwitz: states decay to zero
  }
  return rep;
}

double estimate_convergence_time(const GlobalSystem& sys, double tol) {
  if (!(tol > 0.0) || tol > 1.0)
    throw std::invalid_argument("estimate_convergence_time: tol must be in (0, 1]");
  ConsensusReport rep = check_consensus_conditions(sys);
  if (!rep.holds)
    throw std::invalid_argument("estimate_convergence_time: system does not reach consensus");
  double slowest = -std::numeric_limits<double>::infinity();
  for (const auto& s : rep.sigma) {
    if (s.real() < 0.0 && std::abs(s) > 1e-8) slowest = std::max(slowest, s.real());
  }
  if (!std::isfinite(slowest)) return 0.0;  // nothing decays (single trivial agent)
  return std::log(1.0 / tol) / std::fabs(slowest);
}

Trajectory simulate_linear(const GlobalSystem& sys, const Vector& x0,
                           const Forcing& forcing, double t_end, double step) {
  const std::size_t dim = sys.m_mat.rows();
  if (x0.size() != dim) throw std::invalid_argument("simulate_linear: x0 dimension mismatch");
  for (double v : x0)
    if (!std::isfinite(v)) throw std::invalid_argument("simulate_linear: non-finite x0");
  if (!(step > 0.0) || !(t_end > 0.0))
    throw std::invalid_argument("simulate_linear: step and t_end must be positive");

  Trajectory traj;
  Vector x = x0;
  traj.times.push_back(0.0);
  traj.states.push_back(x);

  Vector k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim), force(dim);
  auto deriv = [&](double t, const Vector& state, Vector& out) {
    kernels::gemv(sys.m_mat.data(), dim, dim, state.data(), out.data());
    if (forcing) {
      forcing(t, force);
      kernels::axpy(1.0, force.data(), out.data(), dim);
    }
  };

  const long long full_steps = static_cast<long long>(std::floor(t_end / step + 1e-9));
  // stage times come from the grid indices, clamped to t_end, so forcing
  // functions with a hard domain end (sampled strategies) are never
  // evaluated past it
  auto advance = [&](double t0, double t1) {
    const double h = t1 - t0;
    const double tm = t0 + 0.5 * h;
    deriv(t0, x, k1);
    tmp = x;
    kernels::axpy(0.5 * h, k1.data(), tmp.data(), dim);
    deriv(tm, tmp, k2);
    tmp = x;
    kernels::axpy(0.5 * h, k2.data(), tmp.data(), dim);
    deriv(tm, tmp, k3);
    tmp = x;
    kernels::axpy(h, k3.data(), tmp.data(), dim);
    deriv(t1, tmp, k4);
    kernels::axpy(h / 6.0, k1.data(), x.data(), dim);
    kernels::axpy(h / 3.0, k2.data(), x.data(), dim);
    kernels::axpy(h / 3.0, k3.data(), x.data(), dim);
    kernels::axpy(h / 6.0, k4.data(), x.data(), dim);
  };

  double t = 0.0;
  for (long long i = 1; i <= full_steps; ++i) {
    double t_next = std::min(static_cast<double>(i) * step, t_end);
    advance(t, t_next);
    t = t_next;
    traj.times.push_back(t);
    traj.states.push_back(x);
  }
  if (t < t_end - 1e-12 * std::max(1.0, t_end)) {
    advance(t, t_end);
    traj.times.push_back(t_end);
    traj.states.push_back(x);
  }
  return traj;
}

std::string trajectory_csv(const Trajectory& traj, int n, int m) {
  std::string out = "t,agent";
  for (int c = 1; c <= m; ++c) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), ",comp_%d", c);
    out += buf;
  }
  out += "\n";
  char num[40];
  for (std::size_t idx = 0; idx < traj.times.size(); ++idx) {
    for (int agent = 1; agent <= n; ++agent) {
      std::snprintf(num, sizeof(num), "%.17g", traj.times[idx]);
      out += num;
      out += ",";
      out += std::to_string(agent);
      for (int c = 0; c < m; ++c) {
        std::snprintf(num, sizeof(num), ",%.17g", traj.states[idx][(agent - 1) * m + c]);
        out += num;
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace attacklab
