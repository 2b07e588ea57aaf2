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

#include <string>
#include <vector>

#include "attacklab/attack.hpp"

namespace attacklab::presets {

// Six-agent experiment family: path/cycle/fixed graphs with the 2-D
// position-velocity dynamics, dbar = 0.25, K = [0.25, 0.1].
LocalDynamics two_d_dynamics();
Vector k2();
Graph fixed_graph6();

// Scenario on path(6) with the 2-D setup; strategy kind one of
// constant|cos|sin|expdecay|gauss (gauss uses the given seed).
AttackScenario s2_scenario(const std::string& strategy, double t_c, const CostModel& costs,
                           double budget, std::uint64_t gauss_seed = 1);

// Variant with a caller-supplied graph (cycle/fixed sweeps).
AttackScenario six_agent_scenario(const Graph& g, const std::string& strategy, double t_c,
                                  const CostModel& costs, double budget,
                                  std::uint64_t gauss_seed = 1);

// 50-vehicle family: 3-D dynamics, 100x100 area, 15 communication radius.
LocalDynamics three_d_dynamics();
Vector k3();

// First seed at or above 42 whose geometric graph is connected, plus the
// graph itself; deterministic.
struct Geometric50 {
  Graph graph;
  std::uint64_t seed = 0;
  double dbar = 0.0;  // min(0.25, 0.8/d_max) for the realized graph
};
const Geometric50& geometric_50();

AttackScenario geometric_scenario(const CostModel& costs, double budget);

/// Presets: table1, example1, example2, fig3, fig4, fig5, fig7. Writes
/// <name>.csv (plus companions) into out_dir. Throws on unknown preset.
void run_preset(const std::string& name, const std::string& out_dir);

std::vector<std::string> preset_names();

}  // namespace attacklab::presets
