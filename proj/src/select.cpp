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

#include "attacklab/select.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "attacklab/rng.hpp"

namespace attacklab {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Running vector sum of the selected columns; f(S u {a}) costs one
// axpy + norm instead of a re-fold.
struct GreedyState {
  const InfluenceCache& cache;
  Vector sum;
  double f_cur = 0.0;

  explicit GreedyState(const InfluenceCache& c) : cache(c), sum(c.columns.rows(), 0.0) {}

  double f_with(int agent) const {
    Vector tmp = sum;
    for (std::size_t r = 0; r < tmp.size(); ++r) tmp[r] += cache.columns(r, agent - 1);
    return vec_norm(tmp);
  }
  void add(int agent) {
    for (std::size_t r = 0; r < sum.size(); ++r) sum[r] += cache.columns(r, agent - 1);
    f_cur = vec_norm(sum);
  }
  void remove(int agent) {
    for (std::size_t r = 0; r < sum.size(); ++r) sum[r] -= cache.columns(r, agent - 1);
    f_cur = vec_norm(sum);
  }
};

double total_cost(const Vector& costs, const std::vector<int>& set) {
  double c = 0.0;
  for (int id : set) c += costs[id - 1];
  return c;
}

void finalize(SelectionResult& res, const InfluenceCache& cache, const Vector& costs,
              double omega, Clock::time_point start) {
  std::sort(res.set.begin(), res.set.end());
  res.f_value = conv_error(cache, res.set);
  res.cost = total_cost(costs, res.set);
  res.bound = omega > 0.0 ? suboptimality_bound(res.cost, omega) : 0.0;
  res.wall_seconds = seconds_since(start);
}

Vector costs_of(const AttackScenario& s) { return realize_costs(s.costs, s.graph); }

void require_valid(const AttackScenario& s, const char* what) {
  ValidationReport rep = validate_scenario(s);
  if (!rep.ok) {
    std::string msg = std::string(what) + ": scenario invalid:";
    for (const auto& v : rep.violations) msg += " [" + v.key + "] " + v.message;
    throw std::invalid_argument(msg);
  }
}

}  // namespace

double suboptimality_bound(double cost, double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("suboptimality_bound: omega must be positive");
  if (cost < 0.0) throw std::invalid_argument("suboptimality_bound: cost must be non-negative");
  return 1.0 - std::exp(-cost / omega);
}

SelectionResult fdi_assa(const AttackScenario& s, const InfluenceCache& cache) {
  const auto start = Clock::now();
  const Vector costs = costs_of(s);
  const double omega = s.budget;

  SelectionResult res;
  res.algorithm = "greedy";
  GreedyState state(cache);
  std::vector<int> candidates(cache.n);
  std::iota(candidates.begin(), candidates.end(), 1);
  double cost_now = 0.0;
  int last_added = 0;

  while (!candidates.empty() && cost_now <= omega) {
    int best = 0;
    double best_ratio = 0.0, best_gain = 0.0;
    int evals = 0;
    for (int a : candidates) {
      double gain = state.f_with(a) - state.f_cur;
      ++evals;
      double ratio = gain / costs[a - 1];
      if (best == 0 || ratio > best_ratio) {
        best = a;
        best_ratio = ratio;
        best_gain = gain;
      }
    }
    res.gain_evaluations += evals;
    state.add(best);
    res.set.push_back(best);
    candidates.erase(std::find(candidates.begin(), candidates.end(), best));
    cost_now += costs[best - 1];
    last_added = best;
    res.trace.push_back({static_cast<int>(res.trace.size()) + 1, best, best_gain,
                         best_ratio, state.f_cur, evals});
  }
  // Algorithm 1 steps 12-14: drop the pick that broke the budget.
  if (cost_now > omega && last_added != 0) {
    state.remove(last_added);
    res.set.erase(std::find(res.set.begin(), res.set.end(), last_added));
    res.trace.pop_back();
  }
  finalize(res, cache, costs, omega, start);
  return res;
}

SelectionResult ifdi_assa(const AttackScenario& s, const InfluenceCache& cache) {
  const auto start = Clock::now();
  const Vector costs = costs_of(s);
  const double omega = s.budget;

  SelectionResult res;
  res.algorithm = "greedy-improved";
  GreedyState state(cache);
  std::vector<int> candidates(cache.n);
  std::iota(candidates.begin(), candidates.end(), 1);
  double cost_now = 0.0;

  while (!candidates.empty() && cost_now < omega) {
    int best = 0;
    double best_ratio = 0.0, best_gain = 0.0;
    int evals = 0;
    for (int a : candidates) {
      if (cost_now + costs[a - 1] > omega) continue;  // step 5: budget filter
      double gain = state.f_with(a) - state.f_cur;
      ++evals;
      double ratio = gain / costs[a - 1];
      if (best == 0 || ratio > best_ratio) {
        best = a;
        best_ratio = ratio;
        best_gain = gain;
      }
    }
    res.gain_evaluations += evals;
    if (best == 0) break;  // nothing affordable
    state.add(best);
    res.set.push_back(best);
    candidates.erase(std::find(candidates.begin(), candidates.end(), best));
    cost_now += costs[best - 1];
    res.trace.push_back({static_cast<int>(res.trace.size()) + 1, best, best_gain,
                         best_ratio, state.f_cur, evals});
  }
  finalize(res, cache, costs, omega, start);
  return res;
}

SelectionResult brute_force(const AttackScenario& s, const InfluenceCache& cache) {
  if (s.graph.n > 20) throw std::invalid_argument("brute_force: capped at n <= 20");
  const auto start = Clock::now();
  const Vector costs = costs_of(s);
  const double omega = s.budget;
  const int n = cache.n;
  const std::size_t dim = cache.columns.rows();

  // DFS over subsets reusing partial sums: the classic meet-the-budget
  // enumeration with one axpy per tree edge.
  SelectionResult res;
  res.algorithm = "brute";
  double best_f = 0.0;
  std::vector<int> best_set;
  std::vector<int> current;
  Vector sum(dim, 0.0);

  auto consider = [&](double f) {
    if (f > best_f) {
      best_f = f;
      best_set = current;
      return;
    }
    if (f == best_f && !current.empty()) {
      std::vector<int> sorted_cur = current;
      std::vector<int> sorted_best = best_set;
      if (sorted_cur < sorted_best) best_set = current;
    }
  };

  std::function<void(int, double)> walk = [&](int next, double cost_so_far) {
    consider(vec_norm(sum));
    for (int a = next; a <= n; ++a) {
      double c = cost_so_far + costs[a - 1];
      if (c > omega) continue;
      for (std::size_t r = 0; r < dim; ++r) sum[r] += cache.columns(r, a - 1);
      current.push_back(a);
      walk(a + 1, c);
      current.pop_back();
      for (std::size_t r = 0; r < dim; ++r) sum[r] -= cache.columns(r, a - 1);
    }
  };
  walk(1, 0.0);

  res.set = std::move(best_set);
  finalize(res, cache, costs, omega, start);
  return res;
}

SelectionResult random_baseline(const AttackScenario& s, const InfluenceCache& cache,
                                std::uint64_t seed) {
  const auto start = Clock::now();
  const Vector costs = costs_of(s);
  const double omega = s.budget;

  SelectionResult res;
  res.algorithm = "random";
  std::vector<int> order(cache.n);
  std::iota(order.begin(), order.end(), 1);
  SplitMix64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(order[i - 1], order[j]);
  }
  double cost_now = 0.0;
  for (int a : order) {
    if (cost_now + costs[a - 1] > omega) continue;  // skip and keep trying
    res.set.push_back(a);
    cost_now += costs[a - 1];
  }
  finalize(res, cache, costs, omega, start);
  return res;
}

SelectionResult degree_baseline(const AttackScenario& s, const InfluenceCache& cache) {
  const auto start = Clock::now();
  const Vector costs = costs_of(s);
  const double omega = s.budget;

  SelectionResult res;
  res.algorithm = "degree";
  std::vector<int> order(cache.n);
  std::iota(order.begin(), order.end(), 1);
  auto deg = degrees(s.graph);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (deg[a - 1] != deg[b - 1]) return deg[a - 1] > deg[b - 1];
    return a < b;
  });
  double cost_now = 0.0;
  for (int a : order) {
    if (cost_now + costs[a - 1] > omega) continue;
    res.set.push_back(a);
    cost_now += costs[a - 1];
  }
  finalize(res, cache, costs, omega, start);
  return res;
}

SelectionResult fdi_assa(const AttackScenario& s) {
  require_valid(s, "fdi_assa");
  return fdi_assa(s, build_influence_cache(s));
}
SelectionResult ifdi_assa(const AttackScenario& s) {
  require_valid(s, "ifdi_assa");
  return ifdi_assa(s, build_influence_cache(s));
}
SelectionResult brute_force(const AttackScenario& s) {
  require_valid(s, "brute_force");
  return brute_force(s, build_influence_cache(s));
}
SelectionResult random_baseline(const AttackScenario& s, std::uint64_t seed) {
  require_valid(s, "random_baseline");
  return random_baseline(s, build_influence_cache(s), seed);
}
SelectionResult degree_baseline(const AttackScenario& s) {
  require_valid(s, "degree_baseline");
  return degree_baseline(s, build_influence_cache(s));
}

}  // namespace attacklab
