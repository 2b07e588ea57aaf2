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

#include <bit>
#include <cmath>

#include "attacklab/influence.hpp"
#include "attacklab/linalg.hpp"
#include "attacklab/presets.hpp"
#include "doctest.h"
#include "test_util.hpp"

namespace {

using namespace attacklab;
using attacklab::testutil::rel_diff;

AttackScenario scalar_decay_scenario() {
  // single agent, xdot = -x + theta
  AttackScenario s;
  s.graph = path_graph(1);
  Matrix a(1, 1), b(1, 1);
  a(0, 0) = -1.0;
  b(0, 0) = 1.0;
  s.local = local_dynamics(std::move(a), std::move(b));
  s.dbar = 0.5;
  s.t_c = 30.0;
  s.strategy = ConstantStrategy{{1.0}};
  s.costs = UniformCost{1.0};
  s.budget = 1.0;
  return s;
}

TEST_CASE("single-agent influence matches the scalar integral") {
  InfluenceCache cache = build_influence_cache(scalar_decay_scenario());
  double expected = 1.0 - std::exp(-30.0);
  CHECK(std::fabs(cache.columns(0, 0) - expected) < 1e-9);
  CHECK(conv_error(cache, {1}) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("path symmetry pairs mirror columns") {
  AttackScenario s = presets::s2_scenario("constant", 30.0, UniformCost{1.0}, 2.0);
  InfluenceCache cache = build_influence_cache(s);
  CHECK(std::fabs(conv_error(cache, {1}) - conv_error(cache, {6})) < 1e-9);
  CHECK(std::fabs(conv_error(cache, {2}) - conv_error(cache, {5})) < 1e-9);
  CHECK(std::fabs(conv_error(cache, {3}) - conv_error(cache, {4})) < 1e-9);
}

TEST_CASE("constant cache agrees with the time-variant integration branch") {
  AttackScenario s = presets::s2_scenario("constant", 30.0, UniformCost{1.0}, 2.0);
  InfluenceCache exact = build_influence_cache(s);

  // a sampled strategy that is constant in time goes down the RK4 branch
  AttackScenario sampled = s;
  sampled.strategy = SampledStrategy{{0.0, 30.0}, {presets::k2(), presets::k2()}};
  InfluenceCache integrated = build_influence_cache(sampled);

  for (int i = 0; i < 6; ++i) {
    for (std::size_t r = 0; r < exact.columns.rows(); ++r) {
      CHECK(std::fabs(exact.columns(r, i) - integrated.columns(r, i)) < 1e-6);
    }
  }
}

TEST_CASE("conv_error basics") {
  AttackScenario s = presets::s2_scenario("constant", 30.0, UniformCost{1.0}, 2.0);
  InfluenceCache cache = build_influence_cache(s);
  CHECK(conv_error(cache, {}) == 0.0);
  // frozen reference point
  CHECK(std::fabs(conv_error(cache, {1, 2}) - 1.0315) < 0.005);
  CHECK_THROWS(conv_error(cache, {7}));
}

TEST_CASE("cache agrees with the independent oracle on random sets") {
  AttackScenario s = presets::s2_scenario("constant", 30.0, UniformCost{1.0}, 2.0);
  InfluenceCache cache = build_influence_cache(s);
  CHECK(conv_error_oracle(s, {}) == 0.0);
  for (const auto& set : {std::vector<int>{2}, {1, 4}, {2, 3, 6}}) {
    CHECK(rel_diff(conv_error(cache, set), conv_error_oracle(s, set)) < 1e-6);
  }
}

TEST_CASE("singleton oracle equivalence for time-variant strategies") {
  for (const char* kind : {"sin", "cos"}) {
    AttackScenario s = presets::s2_scenario(kind, 30.0, UniformCost{1.0}, 2.0);
    InfluenceCache cache = build_influence_cache(s);
    for (int i = 1; i <= 6; ++i) {
      CHECK(rel_diff(conv_error(cache, {i}), conv_error_oracle(s, {i})) < 1e-6);
    }
  }
}

TEST_CASE("mhat blocks") {
  AttackScenario s = presets::s2_scenario("constant", 30.0, UniformCost{1.0}, 2.0);
  MhatBlocks mhat = mhat_blocks(s);
  REQUIRE(mhat.blocks.size() == 6);

  // block 1 is phi(A) by definition (lambda_1 = 0)
  Matrix phi_a = exp_integral(s.local.a, s.t_c);
  Matrix diff = mhat.blocks[0];
  diff -= phi_a;
  CHECK(diff.max_abs() < 1e-12);

  // Hurwitz limit: phi(S) -> -S^{-1} once e^{S t_c} has died out
  SpectralData sd = spectral_decompose(laplacian(s.graph));
  for (int k = 0; k < 6; ++k) {
    Matrix blk = s.local.a;
    blk -= s.local.b * (sd.eigenvalues[k] * s.dbar);
    Matrix neg_inv = lu_solve(blk * -1.0, Matrix::identity(2));
    Matrix gap = mhat.blocks[k];
    gap -= neg_inv;
    CHECK(gap.max_abs() < 1e-3);
  }
}

TEST_CASE("closed form equals the cache on every small subset") {
  AttackScenario s = presets::s2_scenario("constant", 30.0, UniformCost{1.0}, 2.0);
  InfluenceCache cache = build_influence_cache(s);
  CHECK(closed_form_error(s, {}) == 0.0);
  CHECK(std::fabs(closed_form_error(s, {1, 2}) - 1.0315) < 0.005);
  for (unsigned mask = 0; mask < 64; ++mask) {
    if (std::popcount(mask) > 3) continue;
    std::vector<int> set;
    for (int i = 0; i < 6; ++i)
      if (mask >> i & 1) set.push_back(i + 1);
    CHECK(rel_diff(closed_form_error(s, set), conv_error(cache, set)) < 1e-8);
  }

  AttackScenario tv = presets::s2_scenario("sin", 30.0, UniformCost{1.0}, 2.0);
  CHECK_THROWS(closed_form_error(tv, {1}));
}

TEST_CASE("closed form survives repeated Laplacian eigenvalues") {
  // cycle(6) has two doubly-degenerate eigenspaces; any orthonormal basis
  // choice must leave f unchanged because the weights coincide there
  AttackScenario s = presets::six_agent_scenario(cycle_graph(6), "constant", 30.0,
                                                 UniformCost{1.0}, 2.0);
  InfluenceCache cache = build_influence_cache(s);
  for (const auto& set : {std::vector<int>{1}, {2, 5}, {1, 3, 4}, {1, 2, 3, 4, 5, 6}}) {
    CHECK(rel_diff(closed_form_error(s, set), conv_error(cache, set)) < 1e-8);
  }
}

TEST_CASE("cache aggregation is the linear superposition of responses") {
  AttackScenario s = presets::s2_scenario("sin", 30.0, UniformCost{1.0}, 2.0);
  InfluenceCache cache = build_influence_cache(s);
  GlobalSystem sys = build_global(s.local, s.graph, s.dbar);
  for (const auto& set : {std::vector<int>{1}, {1, 2}, {2, 4, 6}}) {
    AttackInput attack{indicator(set, 6), s.strategy};
    Vector zero(12, 0.0);
    Trajectory traj = simulate_trajectory(sys, zero, &attack, s.t_c, s.quad_step);
    Vector aggregate(12, 0.0);
    for (int id : set)
      for (std::size_t r = 0; r < 12; ++r) aggregate[r] += cache.columns(r, id - 1);
    for (std::size_t r = 0; r < 12; ++r)
      CHECK(std::fabs(aggregate[r] - traj.states.back()[r]) < 1e-6);
  }
}

TEST_CASE("convergence error does not depend on the initial state") {
  AttackScenario s = presets::s2_scenario("constant", 30.0, UniformCost{1.0}, 2.0);
  InfluenceCache cache = build_influence_cache(s);
  double f12 = conv_error(cache, {1, 2});
  GlobalSystem sys = build_global(s.local, s.graph, s.dbar);
  AttackInput attack{indicator({1, 2}, 6), s.strategy};
  const Vector x0a = {-7, -3, -2, -2, 0, 1, 1, -1, 2, 3, 6, 2};
  const Vector x0b = {5, 5, -1, 0, 2, -3, 0.5, 1, -2, 4, 0, -6};
  for (const Vector& x0 : {x0a, x0b}) {
    Trajectory clean = simulate_trajectory(sys, x0, nullptr, s.t_c, 1e-3);
    Trajectory attacked = simulate_trajectory(sys, x0, &attack, s.t_c, 1e-3);
    Vector diff = attacked.states.back();
    vec_axpy(-1.0, clean.states.back(), diff);
    CHECK(std::fabs(vec_norm(diff) - f12) < 2e-4);
  }
}

TEST_CASE("exact cache matches RK4 on the 50-agent system") {
  // short horizon keeps the cross-check cheap; the point is exercising the
  // 300x300 augmented exponential against an independent integration
  AttackScenario s = presets::geometric_scenario(UniformCost{1.0}, 6.0);
  s.t_c = 3.0;
  InfluenceCache exact = build_influence_cache(s);

  AttackScenario sampled = s;
  sampled.strategy = SampledStrategy{{0.0, 3.0}, {presets::k3(), presets::k3()}};
  InfluenceCache integrated = build_influence_cache(sampled);

  double worst = 0.0;
  for (int i : {0, 17, 49}) {
    for (std::size_t r = 0; r < exact.columns.rows(); ++r)
      worst = std::max(worst, std::fabs(exact.columns(r, i) - integrated.columns(r, i)));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("norms obey the triangle inequality over the cache") {
  AttackScenario s = presets::s2_scenario("constant", 30.0, UniformCost{1.0}, 2.0);
  InfluenceCache cache = build_influence_cache(s);
  double column_norm_sum = 0.0, singleton_sum = 0.0;
  for (int i = 1; i <= 6; ++i) {
    column_norm_sum += vec_norm(cache.columns.column(i - 1));
    singleton_sum += conv_error(cache, {i});
  }
  for (int i = 1; i <= 6; ++i) CHECK(conv_error(cache, {i}) <= column_norm_sum + 1e-12);
  CHECK(conv_error(cache, {1, 2, 3, 4, 5, 6}) <= singleton_sum + 1e-12);
}

TEST_CASE("cache construction rejects invalid scenarios") {
  AttackScenario s = presets::s2_scenario("constant", 30.0, UniformCost{1.0}, 2.0);
  s.dbar = 0.9;
  CHECK_THROWS(build_influence_cache(s));
}

}  // namespace
