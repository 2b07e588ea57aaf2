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
#include <string>
#include <variant>
#include <vector>

#include "attacklab/dynamics.hpp"
#include "attacklab/graph.hpp"

namespace attacklab {

// theta(t) = K
struct ConstantStrategy {
  Vector k;
};
// theta(t) = K cos(t)
struct CosineStrategy {
  Vector k;
};
// theta(t) = K sin(t)
struct SineStrategy {
  Vector k;
};
// theta(t) = K e^{-t}
struct ExpDecayStrategy {
  Vector k;
};
// linear interpolation on a strictly increasing grid; no extrapolation
struct SampledStrategy {
  Vector times;
  std::vector<Vector> values;
};
// theta(t) = K * z_j, z_j a standard-normal draw per step j = floor(t/step),
// addressed statelessly by (seed, j)
struct GaussianNoiseStrategy {
  Vector k;
  std::uint64_t seed = 0;
  double step = 1e-3;
};

using AttackStrategy = std::variant<ConstantStrategy, CosineStrategy, SineStrategy,
                                    ExpDecayStrategy, SampledStrategy, GaussianNoiseStrategy>;

Vector theta_at(const AttackStrategy& strategy, double t);
int strategy_dim(const AttackStrategy& strategy);
bool is_time_invariant(const AttackStrategy& strategy);
std::string strategy_kind(const AttackStrategy& strategy);

struct UniformCost {
  double c = 1.0;
};
struct DegreeCost {};
struct ExplicitCost {
  Vector values;
};
using CostModel = std::variant<UniformCost, DegreeCost, ExplicitCost>;

/// Per-agent costs c(1..n) realized against the graph.
Vector realize_costs(const CostModel& costs, const Graph& g);
std::string cost_kind(const CostModel& costs);

/// Everything defining problem P1.
struct AttackScenario {
  Graph graph;
  LocalDynamics local;
  double dbar = 0.0;
  double t_c = 0.0;
  AttackStrategy strategy;
  CostModel costs;
  double budget = 0.0;
  double u_bar = 1e6;
  double g_bar = 1e6;
  double quad_step = 1e-3;
};

struct IndicatorVector {
  std::vector<std::uint8_t> bits;
};

IndicatorVector indicator(const std::vector<int>& set, int n);
std::vector<int> set_from_indicator(const IndicatorVector& mu);

struct Violation {
  std::string key;      // offending scenario field
  std::string message;
};

struct ValidationReport {
  bool ok = false;
  std::vector<Violation> violations;
};

/// Checks, in order: (a) sup-norm bound u_bar on the quadrature grid,
/// (b) energy bound g_bar on ||int theta||, (c) connectivity, (d) dbar
/// range, (e) positive costs, (f) consensus conditions of the clean system.
/// Violations are data, never exceptions.
ValidationReport validate_scenario(const AttackScenario& s);

/// FNV-1a over a canonical byte serialization; identifies a scenario for
/// cache validity and config round-trip checks.
std::uint64_t scenario_fingerprint(const AttackScenario& s);

/// RK4 trajectory of xdot = M x + mu^A (x) theta(t); no attack when
/// `attack` is null.
struct AttackInput {
  IndicatorVector mu;
  AttackStrategy strategy;
};

Trajectory simulate_trajectory(const GlobalSystem& sys, const Vector& x0,
                               const AttackInput* attack, double t_end, double step);

}  // namespace attacklab
