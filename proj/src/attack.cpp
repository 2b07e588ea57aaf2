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

#include "attacklab/attack.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "attacklab/rng.hpp"

namespace attacklab {

Vector theta_at(const AttackStrategy& strategy, double t) {
  if (t < 0.0) throw std::invalid_argument("theta_at: t must be non-negative");
  return std::visit(
      [&](const auto& s) -> Vector {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ConstantStrategy>) {
          return s.k;
        } else if constexpr (std::is_same_v<T, CosineStrategy>) {
          Vector v = s.k;
          vec_scale(std::cos(t), v);
          return v;
        } else if constexpr (std::is_same_v<T, SineStrategy>) {
          Vector v = s.k;
          vec_scale(std::sin(t), v);
          return v;
        } else if constexpr (std::is_same_v<T, ExpDecayStrategy>) {
          Vector v = s.k;
          vec_scale(std::exp(-t), v);
          return v;
        } else if constexpr (std::is_same_v<T, SampledStrategy>) {
          if (s.times.empty() || t < s.times.front() || t > s.times.back())
            throw std::invalid_argument("theta_at: t outside sampled grid");
          auto it = std::upper_bound(s.times.begin(), s.times.end(), t);
          if (it == s.times.end()) return s.values.back();
          std::size_t hi = static_cast<std::size_t>(it - s.times.begin());
          std::size_t lo = hi - 1;
          double w = (t - s.times[lo]) / (s.times[hi] - s.times[lo]);
          Vector v = s.values[lo];
          vec_scale(1.0 - w, v);
          vec_axpy(w, s.values[hi], v);
          return v;
        } else {
          static_assert(std::is_same_v<T, GaussianNoiseStrategy>);
          auto idx = static_cast<std::uint64_t>(std::floor(t / s.step));
          Vector v = s.k;
          vec_scale(counter_normal(s.seed, idx), v);
          return v;
        }
      },
      strategy);
}

int strategy_dim(const AttackStrategy& strategy) {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SampledStrategy>)
          return s.values.empty() ? 0 : static_cast<int>(s.values.front().size());
        else
          return static_cast<int>(s.k.size());
      },
      strategy);
}

bool is_time_invariant(const AttackStrategy& strategy) {
  return std::holds_alternative<ConstantStrategy>(strategy);
}

std::string strategy_kind(const AttackStrategy& strategy) {
  struct Visitor {
    std::string operator()(const ConstantStrategy&) const { return "constant"; }
    std::string operator()(const CosineStrategy&) const { return "cos"; }
    std::string operator()(const SineStrategy&) const { return "sin"; }
    std::string operator()(const ExpDecayStrategy&) const { return "expdecay"; }
    std::string operator()(const SampledStrategy&) const { return "sampled"; }
    std::string operator()(const GaussianNoiseStrategy&) const { return "gauss"; }
  };
  return std::visit(Visitor{}, strategy);
}

Vector realize_costs(const CostModel& costs, const Graph& g) {
  struct Visitor {
    const Graph& g;
    Vector operator()(const UniformCost& u) const { return Vector(g.n, u.c); }
    Vector operator()(const DegreeCost&) const {
      auto d = degrees(g);
      Vector out(g.n);
      for (int i = 0; i < g.n; ++i) out[i] = static_cast<double>(d[i]);
      return out;
    }
    Vector operator()(const ExplicitCost& e) const {
      if (static_cast<int>(e.values.size()) != g.n)
        throw std::invalid_argument("realize_costs: explicit costs length mismatch");
      return e.values;
    }
  };
  return std::visit(Visitor{g}, costs);
}

std::string cost_kind(const CostModel& costs) {
  struct Visitor {
    std::string operator()(const UniformCost&) const { return "uniform"; }
    std::string operator()(const DegreeCost&) const { return "degree"; }
    std::string operator()(const ExplicitCost&) const { return "explicit"; }
  };
  return std::visit(Visitor{}, costs);
}

IndicatorVector indicator(const std::vector<int>& set, int n) {
  if (n < 1) throw std::invalid_argument("indicator: invalid agent count");
  IndicatorVector mu;
  mu.bits.assign(n, 0);
  for (int id : set) {
    if (id < 1 || id > n) throw std::invalid_argument("indicator: agent ID out of range");
    mu.bits[id - 1] = 1;
  }
  return mu;
}

std::vector<int> set_from_indicator(const IndicatorVector& mu) {
  std::vector<int> out;
  for (std::size_t i = 0; i < mu.bits.size(); ++i)
    if (mu.bits[i]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

ValidationReport validate_scenario(const AttackScenario& s) {
  ValidationReport rep;
  auto fail = [&](const char* key, std::string msg) {
    rep.violations.push_back({key, std::move(msg)});
  };

  if (!(s.t_c > 0.0) || !std::isfinite(s.t_c)) fail("t_c", "horizon must be positive and finite");
  if (!(s.quad_step > 0.0)) fail("quad_step", "quadrature step must be positive");
  if (!std::isfinite(s.budget) || s.budget < 0.0) fail("budget", "budget must be finite and non-negative");
  if (!std::isfinite(s.u_bar) || s.u_bar < 0.0) fail("u_bar", "u_bar must be finite and non-negative");
  if (!std::isfinite(s.g_bar) || s.g_bar < 0.0) fail("g_bar", "g_bar must be finite and non-negative");
  if (strategy_dim(s.strategy) != s.local.m)
    fail("strategy", "strategy dimension does not match state dimension m");
  std::visit(
      [&](const auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (!std::is_same_v<T, SampledStrategy>) {
          for (double v : st.k)
            if (!std::isfinite(v)) {
              fail("strategy", "K has a non-finite entry");
              break;
            }
        } else {
          for (std::size_t i = 1; i < st.times.size(); ++i)
            if (!(st.times[i] > st.times[i - 1])) {
              fail("strategy", "sampled grid must be strictly increasing");
              break;
            }
        }
      },
      s.strategy);

  bool grid_ok = s.t_c > 0.0 && s.quad_step > 0.0 &&
                 strategy_dim(s.strategy) == s.local.m;
  if (grid_ok) {
    // (a) pointwise bound and (b) energy bound on the quadrature grid
    // (trapezoid for the integral)
    try {
      const auto steps = static_cast<long long>(std::ceil(s.t_c / s.quad_step - 1e-9));
      double max_norm = 0.0;
      Vector integral(s.local.m, 0.0);
      Vector prev = theta_at(s.strategy, 0.0);
      max_norm = vec_norm(prev);
      for (long long i = 1; i <= steps; ++i) {
        double t = std::min(static_cast<double>(i) * s.quad_step, s.t_c);
        Vector cur = theta_at(s.strategy, t);
        max_norm = std::max(max_norm, vec_norm(cur));
        double h = t - std::min(static_cast<double>(i - 1) * s.quad_step, s.t_c);
        vec_axpy(0.5 * h, prev, integral);
        vec_axpy(0.5 * h, cur, integral);
        prev = std::move(cur);
      }
      if (max_norm > s.u_bar)
        fail("u_bar", "||theta(t)|| exceeds u_bar on the quadrature grid");
      if (vec_norm(integral) > s.g_bar)
        fail("g_bar", "||int_0^t_c theta|| exceeds g_bar");
    } catch (const std::exception& e) {
      fail("strategy", e.what());  // e.g. sampled grid not covering [0, t_c]
    }
  }

  // (c) connectivity
  bool connected = is_connected(s.graph);
  if (!connected) fail("graph", "graph is disconnected");

  // (d) dbar range
  const int dmax = max_degree(s.graph);
  const double limit = dmax > 0 ? 1.0 / dmax : std::numeric_limits<double>::infinity();
  bool dbar_ok = s.dbar > 0.0 && s.dbar < limit;
  if (!dbar_ok) fail("dbar", "dbar outside (0, 1/d_max)");

  // (e) positive costs
  try {
    Vector c = realize_costs(s.costs, s.graph);
    for (double v : c) {
      if (!(v > 0.0)) {
        fail("costs", "every realized cost must be strictly positive");
        break;
      }
    }
  } catch (const std::exception& e) {
    fail("costs", e.what());
  }

  // (f) clean-system consensus
  if (connected && dbar_ok) {
    GlobalSystem sys = build_global(s.local, s.graph, s.dbar);
    if (!check_consensus_conditions(sys).holds)
      fail("dynamics", "no-attack system does not satisfy the consensus conditions");
  }

  rep.ok = rep.violations.empty();
  return rep;
}

namespace {

struct FnvHasher {
  std::uint64_t h = 1469598103934665603ull;
  void bytes(const void* p, std::size_t len) {
    auto* c = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= c[i];
      h *= 1099511628211ull;
    }
  }
  void f64(double v) { bytes(&v, sizeof(v)); }
  void u64(std::uint64_t v) { bytes(&v, sizeof(v)); }
  void i32(int v) { bytes(&v, sizeof(v)); }
  void str(const std::string& s) {
    u64(s.size());
    bytes(s.data(), s.size());
  }
  void vec(const Vector& v) {
    u64(v.size());
    for (double x : v) f64(x);
  }
};

}  // namespace

std::uint64_t scenario_fingerprint(const AttackScenario& s) {
  FnvHasher fnv;
  fnv.i32(s.graph.n);
  for (auto [i, j] : s.graph.edges) {
    fnv.i32(i);
    fnv.i32(j);
  }
  fnv.i32(s.local.m);
  fnv.bytes(s.local.a.data(), s.local.a.rows() * s.local.a.cols() * sizeof(double));
  fnv.bytes(s.local.b.data(), s.local.b.rows() * s.local.b.cols() * sizeof(double));
  fnv.f64(s.dbar);
  fnv.f64(s.t_c);
  fnv.str(strategy_kind(s.strategy));
  std::visit(
      [&](const auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, SampledStrategy>) {
          fnv.vec(st.times);
          for (const auto& v : st.values) fnv.vec(v);
        } else if constexpr (std::is_same_v<T, GaussianNoiseStrategy>) {
          fnv.vec(st.k);
          fnv.u64(st.seed);
          fnv.f64(st.step);
        } else {
          fnv.vec(st.k);
        }
      },
      s.strategy);
  fnv.str(cost_kind(s.costs));
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, UniformCost>)
          fnv.f64(c.c);
        else if constexpr (std::is_same_v<T, ExplicitCost>)
          fnv.vec(c.values);
      },
      s.costs);
  fnv.f64(s.budget);
  fnv.f64(s.u_bar);
  fnv.f64(s.g_bar);
  fnv.f64(s.quad_step);
  return fnv.h;
}

Trajectory simulate_trajectory(const GlobalSystem& sys, const Vector& x0,
                               const AttackInput* attack, double t_end, double step) {
  if (attack == nullptr) return simulate_linear(sys, x0, nullptr, t_end, step);
  if (static_cast<int>(attack->mu.bits.size()) != sys.n)
    throw std::invalid_argument("simulate_trajectory: indicator length mismatch");
  if (strategy_dim(attack->strategy) != sys.m)
    throw std::invalid_argument("simulate_trajectory: strategy dimension mismatch");
  const int m = sys.m;
  const auto& mu = attack->mu.bits;
  const AttackStrategy& strat = attack->strategy;
  Forcing forcing = [&mu, &strat, m](double t, Vector& out) {
    Vector th = theta_at(strat, t);
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if (mu[i]) std::memcpy(out.data() + i * m, th.data(), m * sizeof(double));
    }
  };
  return simulate_linear(sys, x0, forcing, t_end, step);
}

}  // namespace attacklab
