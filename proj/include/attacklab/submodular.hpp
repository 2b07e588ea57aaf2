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
#include <optional>
#include <vector>

#include "attacklab/influence.hpp"

namespace attacklab {

/// Bilinear form h(A,B) = sum_k (v_A)_k (v_B)_k ||phi_k K||^2 with
/// v_S = U^T mu^S. Sign-flipping any eigenvector column leaves every h
/// unchanged (the products pair the same component). Constant strategies
/// only; h(A,A) = f(A)^2.
double pairwise_h(const AttackScenario& s, const std::vector<int>& set_a,
                  const std::vector<int>& set_b);

/// gamma = rho_j^+(A) / rho_j^+(B) with rho_j^+(S) = f(S u {j}) + f(S).
/// Requires A subseteq B, j notin B, rho_j^+(B) > 0.
double gamma_ratio(const AttackScenario& s, const std::vector<int>& set_a,
                   const std::vector<int>& set_b, int j);

/// rho_j(set) = f(set u {j}) - f(set); j must not be in set.
double marginal_gain(const InfluenceCache& cache, const std::vector<int>& set, int j);

/// Condition h(A u B, B \ A) >= -1e-10 (monotonicity route). Constant
/// strategies, A subseteq B.
bool check_monotone_condition(const AttackScenario& s, const std::vector<int>& set_a,
                              const std::vector<int>& set_b);

/// Condition h(A,{j}) >= (gamma-1)/2 h({j},{j}) + gamma h(B,{j}) at
/// tolerance -1e-10. Constant strategies, A subseteq B, j notin B.
bool check_submodular_condition(const AttackScenario& s, const std::vector<int>& set_a,
                                const std::vector<int>& set_b, int j);

struct VerifyMode {
  enum Kind { kExhaustive, kSampled } kind = kExhaustive;
  int samples = 0;
  std::uint64_t seed = 0;

  static VerifyMode exhaustive() { return {kExhaustive, 0, 0}; }
  static VerifyMode sampled(int samples, std::uint64_t seed) {
    return {kSampled, samples, seed};
  }
};

/// Witness of the first (lexicographically smallest) violated check.
/// j present: submodularity triple, lhs = rho_j(A), rhs = rho_j(B).
/// j absent: monotonicity pair, lhs = f(A), rhs = f(B).
struct ViolationWitness {
  std::vector<int> set_a;
  std::vector<int> set_b;
  std::optional<int> j;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct VerificationReport {
  bool monotone = false;
  bool submodular = false;
  long long checked_triples = 0;
  std::optional<ViolationWitness> first_violation;
  VerifyMode mode;
  // conditions route, evaluated on constant strategies alongside the
  // definitional route
  long long conditions_checked = 0;
  long long route_disagreements = 0;
};

/// Definitional route: f(A) <= f(B) + 1e-9 over chains A subseteq B and
/// rho_j(A) >= rho_j(B) - 1e-9 over (A subseteq B, j notin B). Constant
/// scenarios additionally evaluate the h-form conditions and count route
/// disagreements. Exhaustive mode enumerates all 3^n chains (n <= 14).
VerificationReport verify(const AttackScenario& s, const VerifyMode& mode);

}  // namespace attacklab
