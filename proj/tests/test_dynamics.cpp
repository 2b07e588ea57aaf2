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

#include <cmath>

#include "attacklab/dynamics.hpp"
#include "attacklab/linalg.hpp"
#include "attacklab/presets.hpp"
#include "doctest.h"

namespace {

using namespace attacklab;

LocalDynamics scalar_local(double a, double b) {
  Matrix am(1, 1), bm(1, 1);
  am(0, 0) = a;
  bm(0, 0) = b;
  return local_dynamics(std::move(am), std::move(bm));
}

double pairwise_spread(const Vector& state, int n, int m) {
  double spread = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double d2 = 0.0;
      for (int c = 0; c < m; ++c) {
        double d = state[i * m + c] - state[j * m + c];
        d2 += d * d;
      }
      spread = std::max(spread, std::sqrt(d2));
    }
  }
  return spread;
}

TEST_CASE("build_global expands the Kronecker form") {
  GlobalSystem sys = build_global(scalar_local(-1.0, 1.0), path_graph(2), 0.25);
  CHECK(sys.m_mat(0, 0) == doctest::Approx(-1.25));
  CHECK(sys.m_mat(0, 1) == doctest::Approx(0.25));
  CHECK(sys.m_mat(1, 0) == doctest::Approx(0.25));
  CHECK(sys.m_mat(1, 1) == doctest::Approx(-1.25));

  // dbar out of range: path(6) has d_max = 2
  CHECK_THROWS(build_global(scalar_local(-1.0, 1.0), path_graph(6), 0.6));
  CHECK_THROWS(build_global(scalar_local(-1.0, 1.0), explicit_graph(2, {}), 0.25));
}

TEST_CASE("the six-agent system is Hurwitz and reaches consensus") {
  GlobalSystem sys = build_global(presets::two_d_dynamics(), path_graph(6), 0.25);
  ConsensusReport rep = check_consensus_conditions(sys);
  for (const auto& s : rep.sigma) CHECK(s.real() < 0.0);
  CHECK(rep.rank_condition);
  CHECK(rep.spectrum_condition);
  CHECK(rep.kernel_condition);
  CHECK(rep.holds);
  REQUIRE(rep.consensus_value.has_value());
  CHECK(vec_norm(*rep.consensus_value) == doctest::Approx(0.0));
}

TEST_CASE("pure Laplacian consensus holds with a zero eigenvalue") {
  GlobalSystem sys = build_global(scalar_local(0.0, 1.0), path_graph(6), 0.25);
  ConsensusReport rep = check_consensus_conditions(sys);
  CHECK(rep.holds);
  int zeros = 0;
  for (const auto& s : rep.sigma)
    if (std::abs(s) <= 1e-8) ++zeros;
  CHECK(zeros == 1);
}

TEST_CASE("a positive spectrum fails the consensus conditions") {
  // A = [1], B = [0] makes M = I
  GlobalSystem sys = build_global(scalar_local(1.0, 0.0), path_graph(6), 0.25);
  ConsensusReport rep = check_consensus_conditions(sys);
  CHECK_FALSE(rep.spectrum_condition);
  CHECK_FALSE(rep.holds);
}

TEST_CASE("estimate_convergence_time on an analytic case") {
  // all modes decay at exactly 0.3
  GlobalSystem sys = build_global(scalar_local(-0.3, 0.0), path_graph(4), 0.2);
  CHECK(estimate_convergence_time(sys, std::exp(-9.0)) == doctest::Approx(30.0).epsilon(1e-9));
  CHECK(estimate_convergence_time(sys, 1.0) == doctest::Approx(0.0));
  CHECK_THROWS(estimate_convergence_time(sys, 0.0));
  CHECK_THROWS(estimate_convergence_time(sys, -0.5));

  GlobalSystem bad = build_global(scalar_local(1.0, 0.0), path_graph(4), 0.2);
  CHECK_THROWS(estimate_convergence_time(bad, 0.01));
}

TEST_CASE("simulate: zero system holds the state") {
  GlobalSystem sys = build_global(scalar_local(0.0, 0.0), path_graph(3), 0.25);
  Vector x0 = {1.0, -2.0, 0.5};
  Trajectory traj = simulate_linear(sys, x0, nullptr, 1.0, 0.1);
  for (const auto& st : traj.states)
    for (int i = 0; i < 3; ++i) CHECK(st[i] == x0[i]);
}

TEST_CASE("simulate matches the matrix-exponential solution") {
  GlobalSystem sys = build_global(presets::two_d_dynamics(), path_graph(6), 0.25);
  Vector x0 = {-7, -3, -2, -2, 0, 1, 1, -1, 2, 3, 6, 2};
  Trajectory traj = simulate_linear(sys, x0, nullptr, 2.0, 1e-3);
  Vector expected = matrix_exponential(sys.m_mat, 2.0) * x0;
  double err = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    err = std::max(err, std::fabs(traj.states.back()[i] - expected[i]));
    scale = std::max(scale, std::fabs(expected[i]));
  }
  CHECK(err / scale < 1e-6);
}

TEST_CASE("RK4 exhibits fourth-order endpoint convergence") {
  GlobalSystem sys = build_global(presets::two_d_dynamics(), path_graph(6), 0.25);
  Vector x0 = {-7, -3, -2, -2, 0, 1, 1, -1, 2, 3, 6, 2};
  Vector exact = matrix_exponential(sys.m_mat, 1.0) * x0;
  auto endpoint_err = [&](double h) {
    Trajectory t = simulate_linear(sys, x0, nullptr, 1.0, h);
    double e = 0.0;
    for (std::size_t i = 0; i < exact.size(); ++i)
      e = std::max(e, std::fabs(t.states.back()[i] - exact[i]));
    return e;
  };
  double e1 = endpoint_err(0.2);
  double e2 = endpoint_err(0.1);
  CHECK(e1 / e2 >= 8.0);
}

TEST_CASE("no-attack trajectories contract toward consensus") {
  GlobalSystem sys = build_global(presets::two_d_dynamics(), path_graph(6), 0.25);
  REQUIRE(check_consensus_conditions(sys).holds);
  Vector x0 = {-7, -3, -2, -2, 0, 1, 1, -1, 2, 3, 6, 2};
  double t1 = estimate_convergence_time(sys, 0.05);
  Trajectory a = simulate_linear(sys, x0, nullptr, t1, 1e-2);
  Trajectory b = simulate_linear(sys, x0, nullptr, 2.0 * t1, 1e-2);
  double spread_t1 = pairwise_spread(a.states.back(), 6, 2);
  double spread_t2 = pairwise_spread(b.states.back(), 6, 2);
  CHECK(spread_t2 <= spread_t1);

  // the paper horizon leaves less than 1% of the initial spread
  Trajectory c = simulate_linear(sys, x0, nullptr, 30.0, 1e-2);
  CHECK(pairwise_spread(c.states.back(), 6, 2) <
        1e-2 * pairwise_spread(x0, 6, 2));
}

TEST_CASE("simulate validates inputs") {
  GlobalSystem sys = build_global(scalar_local(-1.0, 0.5), path_graph(2), 0.25);
  CHECK_THROWS(simulate_linear(sys, {1.0}, nullptr, 1.0, 0.1));  // wrong length
  Vector bad = {std::nan(""), 0.0};
  CHECK_THROWS(simulate_linear(sys, bad, nullptr, 1.0, 0.1));
  CHECK_THROWS(simulate_linear(sys, {1.0, 2.0}, nullptr, 1.0, 0.0));
}

TEST_CASE("trajectory CSV carries the stated header and grid") {
  GlobalSystem sys = build_global(presets::two_d_dynamics(), path_graph(6), 0.25);
  Vector x0(12, 1.0);
  Trajectory traj = simulate_linear(sys, x0, nullptr, 0.01, 0.005);
  std::string csv = trajectory_csv(traj, 6, 2);
  CHECK(csv.rfind("t,agent,comp_1,comp_2\n", 0) == 0);
  // 3 time points x 6 agents + header
  int lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 1 + 3 * 6);
}

}  // namespace
