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

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "attacklab/graph.hpp"
#include "attacklab/matrix.hpp"

namespace attacklab {

/// Per-agent linear dynamics xdot = A x + B u, both matrices m x m.
struct LocalDynamics {
  Matrix a;
  Matrix b;
  int m = 0;
};

LocalDynamics local_dynamics(Matrix a, Matrix b);

/// Coupled network system xdot = M x with M = I_n (x) A - dbar * L (x) B.
/// M is orthogonally similar to blockdiag(A - lambda_k dbar B), which the
/// consensus checks exploit.
struct GlobalSystem {
  Matrix m_mat;
  int n = 0;
  int m = 0;
  double dbar = 0.0;
  SpectralData spectral;
  LocalDynamics local;
};

GlobalSystem build_global(const LocalDynamics& local, const Graph& g, double dbar);

struct ConsensusReport {
  bool holds = false;
  bool rank_condition = false;
  bool spectrum_condition = false;
  bool kernel_condition = false;
  std::vector<std::complex<double>> sigma;
  std::optional<Vector> consensus_value;  // m-vector when attainable
};

ConsensusReport check_consensus_conditions(const GlobalSystem& sys);

/// Slowest-stable-mode e-folding estimate ln(1/tol) / |Re sigma_slow|.
/// Requires consensus to hold and tol in (0, 1].
double estimate_convergence_time(const GlobalSystem& sys, double tol);

struct Trajectory {
  Vector times;
  std::vector<Vector> states;  // one mn-vector per time point
};

/// Forcing hook: fills `out` (mn-vector) with the additive term at time t.
using Forcing = std::function<void(double t, Vector& out)>;

/// Classical fixed-step RK4 on xdot = M x + forcing(t) (forcing optional).
Trajectory simulate_linear(const GlobalSystem& sys, const Vector& x0,
                           const Forcing& forcing, double t_end, double step);

/// Trajectory CSV per the interface: header "t,agent,comp_1..comp_m", one
/// row per (time, agent), %.17g numbers.
std::string trajectory_csv(const Trajectory& traj, int n, int m);

}  // namespace attacklab
