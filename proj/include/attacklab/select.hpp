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
#include <vector>

#include "attacklab/influence.hpp"

namespace attacklab {

struct TraceEntry {
  int iteration = 0;    // 1-based
  int agent = 0;
  double gain = 0.0;
  double gain_per_cost = 0.0;
  double f_cum = 0.0;
  int evals = 0;        // gain evaluations spent in this iteration
};

struct SelectionResult {
  std::vector<int> set;  // ascending agent IDs
  double f_value = 0.0;
  double cost = 0.0;
  double bound = 0.0;  // 1 - e^{-cost/Omega}; 0 when Omega <= 0
  std::vector<TraceEntry> trace;
  double wall_seconds = 0.0;
  std::string algorithm;
  long long gain_evaluations = 0;
};

/// Greedy guarantee factor 1 - e^{-cost/omega}; requires omega > 0.
double suboptimality_bound(double cost, double omega);

// Each algorithm exists in two forms: one that builds the influence cache
// itself and one that reuses a caller-provided cache (the wall time then
// covers only the selection loop, which is what the runtime comparisons
// measure). Ties in argmax gain/cost break toward the lowest agent ID.

/// Algorithm 1: loop while cost <= Omega over all remaining candidates,
/// then drop the last pick if the budget was exceeded. The literal loop is
/// kept, including its known overshoot-and-remove behavior.
SelectionResult fdi_assa(const AttackScenario& s);
SelectionResult fdi_assa(const AttackScenario& s, const InfluenceCache& cache);

/// Algorithm 2: only candidates that stay within budget are evaluated;
/// stops when none qualify. Never exceeds the budget.
SelectionResult ifdi_assa(const AttackScenario& s);
SelectionResult ifdi_assa(const AttackScenario& s, const InfluenceCache& cache);

/// Exact maximizer by enumeration; ties prefer the lexicographically
/// smallest set. Hard cap n <= 20.
SelectionResult brute_force(const AttackScenario& s);
SelectionResult brute_force(const AttackScenario& s, const InfluenceCache& cache);

/// Seeded shuffle, then add affordable agents in shuffled order (skip and
/// continue semantics).
SelectionResult random_baseline(const AttackScenario& s, std::uint64_t seed);
SelectionResult random_baseline(const AttackScenario& s, const InfluenceCache& cache,
                                std::uint64_t seed);

/// Degree descending (ID ascending on ties), add while affordable.
SelectionResult degree_baseline(const AttackScenario& s);
SelectionResult degree_baseline(const AttackScenario& s, const InfluenceCache& cache);

}  // namespace attacklab
