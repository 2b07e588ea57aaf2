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

#include "attacklab/submodular.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "attacklab/rng.hpp"

namespace attacklab {
namespace {

constexpr double kDefTol = 1e-9;    // definitional-route tolerance
constexpr double kCondTol = 1e-10;  // conditions-route tolerance

using Mask = std::uint32_t;

Mask mask_of(const std::vector<int>& set, int n) {
  Mask m = 0;
  for (int id : set) {
    if (id < 1 || id > n) throw std::invalid_argument("agent ID out of range");
    m |= Mask{1} << (id - 1);
  }
  return m;
}

std::vector<int> set_of(Mask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1) out.push_back(i + 1);
  return out;
}

// f(mask) for every subset via one column-add per mask.
struct SetTable {
  int n = 0;
  std::size_t dim = 0;
  std::vector<Vector> sums;
  Vector f;

  explicit SetTable(const InfluenceCache& cache) {
    n = cache.n;
    dim = cache.columns.rows();
    const std::size_t total = std::size_t{1} << n;
    sums.resize(total);
    f.resize(total);
    sums[0] = Vector(dim, 0.0);
    f[0] = 0.0;
    for (std::size_t mask = 1; mask < total; ++mask) {
      int low = std::countr_zero(mask);
      sums[mask] = sums[mask & (mask - 1)];
      for (std::size_t r = 0; r < dim; ++r) sums[mask][r] += cache.columns(r, low);
      f[mask] = vec_norm(sums[mask]);
    }
  }
};

// Spectral coordinates per subset for the h form (constant strategies).
struct HTable {
  int n = 0;
  Vector weights;
  std::vector<Vector> coords;  // coords[mask][k] = sum_{i in mask} U(i,k)

  HTable(const SpectralWeights& sw, int n_agents) : n(n_agents), weights(sw.weights) {
    const std::size_t total = std::size_t{1} << n;
    coords.resize(total);
    coords[0] = Vector(n, 0.0);
    for (std::size_t mask = 1; mask < total; ++mask) {
      int low = std::countr_zero(mask);
      coords[mask] = coords[mask & (mask - 1)];
      for (int k = 0; k < n; ++k) coords[mask][k] += sw.spectral.eigvecs(low, k);
    }
  }

  double h(Mask a, Mask b) const {
    double total = 0.0;
    for (int k = 0; k < n; ++k) total += coords[a][k] * coords[b][k] * weights[k];
    return total;
  }
};

bool lex_less(Mask a, Mask b) {
  // sorted-ID-sequence lexicographic order with shorter-prefix-first
  std::vector<int> va = set_of(a), vb = set_of(b);
  return va < vb;
}

struct WitnessSlot {
  std::optional<ViolationWitness> value;
  Mask a = 0, b = 0;
  int j = 0;  // 0 for pair witnesses

  bool offer_is_smaller(Mask na, Mask nb, int nj) const {
    if (!value) return true;
    if (na != a) return lex_less(na, a);
    if (nb != b) return lex_less(nb, b);
    return nj < j;
  }
  void offer(Mask na, Mask nb, int nj, double lhs, double rhs) {
    if (!offer_is_smaller(na, nb, nj)) return;
    a = na;
    b = nb;
    j = nj;
    ViolationWitness w;
    w.set_a = set_of(na);
    w.set_b = set_of(nb);
    if (nj > 0) w.j = nj;
    w.lhs = lhs;
    w.rhs = rhs;
    value = w;
  }
};

void require_subset(Mask a, Mask b, const char* what) {
  if ((a & ~b) != 0) throw std::invalid_argument(std::string(what) + ": requires A subseteq B");
}

}  // namespace

double pairwise_h(const AttackScenario& s, const std::vector<int>& set_a,
                  const std::vector<int>& set_b) {
  SpectralWeights sw = spectral_weights(s);  // throws for time-variant strategies
  const int n = s.graph.n;
  IndicatorVector ma = indicator(set_a, n), mb = indicator(set_b, n);
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    double va = 0.0, vb = 0.0;
    for (int i = 0; i < n; ++i) {
      if (ma.bits[i]) va += sw.spectral.eigvecs(i, k);
      if (mb.bits[i]) vb += sw.spectral.eigvecs(i, k);
    }
    total += va * vb * sw.weights[k];
  }
  return total;
}

double gamma_ratio(const AttackScenario& s, const std::vector<int>& set_a,
                   const std::vector<int>& set_b, int j) {
  const int n = s.graph.n;
  Mask a = mask_of(set_a, n), b = mask_of(set_b, n);
  require_subset(a, b, "gamma_ratio");
  Mask jm = mask_of({j}, n);
  if ((jm & b) != 0) throw std::invalid_argument("gamma_ratio: j must lie outside B");
  InfluenceCache cache = build_influence_cache(s);
  double fa = conv_error(cache, set_of(a));
  double faj = conv_error(cache, set_of(a | jm));
  double fb = conv_error(cache, set_of(b));
  double fbj = conv_error(cache, set_of(b | jm));
  double denom = fbj + fb;
  if (denom == 0.0) throw std::invalid_argument("gamma_ratio: rho_j^+(B) is zero");
  return (faj + fa) / denom;
}

double marginal_gain(const InfluenceCache& cache, const std::vector<int>& set, int j) {
  if (j < 1 || j > cache.n) throw std::invalid_argument("marginal_gain: agent ID out of range");
  for (int id : set)
    if (id == j) throw std::invalid_argument("marginal_gain: j already in the set");
  std::vector<int> with = set;
  with.push_back(j);
  return conv_error(cache, with) - conv_error(cache, set);
}

bool check_monotone_condition(const AttackScenario& s, const std::vector<int>& set_a,
                              const std::vector<int>& set_b) {
  const int n = s.graph.n;
  Mask a = mask_of(set_a, n), b = mask_of(set_b, n);
  require_subset(a, b, "check_monotone_condition");
  // A subseteq B makes A u B = B
  return pairwise_h(s, set_of(b), set_of(b & ~a)) >= -kCondTol;
}

bool check_submodular_condition(const AttackScenario& s, const std::vector<int>& set_a,
                                const std::vector<int>& set_b, int j) {
  const int n = s.graph.n;
  Mask a = mask_of(set_a, n), b = mask_of(set_b, n);
  require_subset(a, b, "check_submodular_condition");
  if ((mask_of({j}, n) & b) != 0)
    throw std::invalid_argument("check_submodular_condition: j must lie outside B");
  double gamma = gamma_ratio(s, set_a, set_b, j);
  std::vector<int> js = {j};
  double lhs = pairwise_h(s, set_a, js);
  double rhs = 0.5 * (gamma - 1.0) * pairwise_h(s, js, js) + gamma * pairwise_h(s, set_b, js);
  return lhs >= rhs - kCondTol;
}

VerificationReport verify(const AttackScenario& s, const VerifyMode& mode) {
  const int n = s.graph.n;
  if (mode.kind == VerifyMode::kExhaustive && n > 14)
    throw std::invalid_argument("verify: exhaustive mode capped at n <= 14");
  if (mode.kind == VerifyMode::kSampled && mode.samples <= 0)
    throw std::invalid_argument("verify: sampled mode needs a positive sample count");

  InfluenceCache cache = build_influence_cache(s);
  const bool constant = is_time_invariant(s.strategy);
  std::optional<HTable> htab;
  if (constant) htab.emplace(spectral_weights(s), n);

  VerificationReport rep;
  rep.mode = mode;
  rep.monotone = true;
  rep.submodular = true;
  WitnessSlot witness;

  std::optional<SetTable> table;
  if (n <= 20) table.emplace(cache);
  auto f_of = [&](Mask mask) -> double {
    if (table) return table->f[mask];
    return conv_error(cache, set_of(mask));
  };

  auto check_pair = [&](Mask a, Mask b) {
    double fa = f_of(a), fb = f_of(b);
    if (fa > fb + kDefTol) {
      rep.monotone = false;
      witness.offer(a, b, 0, fa, fb);
    }
    if (htab) {
      ++rep.conditions_checked;
      bool cond13 = htab->h(b, b & ~a) >= -kCondTol;
      if (cond13 != (fa <= fb + kDefTol)) ++rep.route_disagreements;
    }
  };
  auto check_triple = [&](Mask a, Mask b, int j) {
    ++rep.checked_triples;
    Mask jm = Mask{1} << (j - 1);
    double rho_a = f_of(a | jm) - f_of(a);
    double rho_b = f_of(b | jm) - f_of(b);
    bool def_ok = rho_a >= rho_b - kDefTol;
    if (!def_ok) {
      rep.submodular = false;
      witness.offer(a, b, j, rho_a, rho_b);
    }
    if (htab) {
      ++rep.conditions_checked;
      double denom = f_of(b | jm) + f_of(b);
      bool cond14 = true;
      if (denom > 0.0) {
        double gamma = (f_of(a | jm) + f_of(a)) / denom;
        std::vector<int> js = {j};
        double lhs = htab->h(a, jm);
        double rhs = 0.5 * (gamma - 1.0) * htab->h(jm, jm) + gamma * htab->h(b, jm);
        cond14 = lhs >= rhs - kCondTol;
      }
      if (cond14 != def_ok) ++rep.route_disagreements;
    }
  };

  if (mode.kind == VerifyMode::kExhaustive) {
    // each agent is in A and B, in B only, or outside: 3^n chains
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
      Mask a = 0, b = 0;
      std::uint64_t c = code;
      for (int i = 0; i < n; ++i) {
        int digit = static_cast<int>(c % 3);
        c /= 3;
        if (digit >= 1) b |= Mask{1} << i;
        if (digit == 2) a |= Mask{1} << i;
      }
      check_pair(a, b);
      for (int j = 1; j <= n; ++j)
        if (!(b >> (j - 1) & 1)) check_triple(a, b, j);
    }
  } else {
    SplitMix64 rng(mode.seed);
    for (int sample = 0; sample < mode.samples; ++sample) {
      Mask a = 0, b = 0;
      for (int i = 0; i < n; ++i) {
        auto digit = rng.next_below(3);
        if (digit >= 1) b |= Mask{1} << i;
        if (digit == 2) a |= Mask{1} << i;
      }
      check_pair(a, b);
      std::vector<int> outside;
      for (int j = 1; j <= n; ++j)
        if (!(b >> (j - 1) & 1)) outside.push_back(j);
      if (!outside.empty())
        check_triple(a, b, outside[rng.next_below(outside.size())]);
    }
  }

  rep.first_violation = witness.value;
  return rep;
}

}  // namespace attacklab
