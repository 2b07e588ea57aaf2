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

#include "attacklab/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace attacklab {
namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key()))
      throw ConfigError("unknown key '" + where + it.key() + "'");
  }
}

const json& require(const json& obj, const std::string& where, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError("missing key '" + where + key + "'");
  return *it;
}

double as_number(const json& v, const std::string& name) {
  if (!v.is_number()) throw ConfigError("key '" + name + "' must be a number");
  return v.get<double>();
}

long long as_integer(const json& v, const std::string& name) {
  if (!v.is_number_integer()) throw ConfigError("key '" + name + "' must be an integer");
  return v.get<long long>();
}

std::string as_string(const json& v, const std::string& name) {
  if (!v.is_string()) throw ConfigError("key '" + name + "' must be a string");
  return v.get<std::string>();
}

Vector as_vector(const json& v, const std::string& name) {
  if (!v.is_array()) throw ConfigError("key '" + name + "' must be an array of numbers");
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(as_number(x, name));
  return out;
}

Graph parse_graph(const json& g) {
  std::string type = as_string(require(g, "graph.", "type"), "graph.type");
  int n = static_cast<int>(as_integer(require(g, "graph.", "n"), "graph.n"));
  if (type == "path") {
    check_keys(g, "graph.", {"type", "n"});
    return path_graph(n);
  }
  if (type == "cycle") {
    check_keys(g, "graph.", {"type", "n"});
    return cycle_graph(n);
  }
  if (type == "explicit") {
    check_keys(g, "graph.", {"type", "n", "edges"});
    const json& edges = require(g, "graph.", "edges");
    if (!edges.is_array()) throw ConfigError("key 'graph.edges' must be an array of pairs");
    std::vector<std::pair<int, int>> e;
    for (const auto& pair : edges) {
      if (!pair.is_array() || pair.size() != 2)
        throw ConfigError("key 'graph.edges' entries must be [i, j] pairs");
      e.emplace_back(static_cast<int>(as_integer(pair[0], "graph.edges")),
                     static_cast<int>(as_integer(pair[1], "graph.edges")));
    }
    return explicit_graph(n, std::move(e));
  }
  if (type == "geometric") {
    check_keys(g, "graph.", {"type", "n", "width", "radius", "seed"});
    double width = as_number(require(g, "graph.", "width"), "graph.width");
    double radius = as_number(require(g, "graph.", "radius"), "graph.radius");
    auto seed = static_cast<std::uint64_t>(as_integer(require(g, "graph.", "seed"), "graph.seed"));
    return random_geometric_graph(n, width, radius, seed);
  }
  throw ConfigError("key 'graph.type' must be path|cycle|explicit|geometric");
}

LocalDynamics parse_dynamics(const json& d) {
  check_keys(d, "dynamics.", {"m", "A", "B"});
  int m = static_cast<int>(as_integer(require(d, "dynamics.", "m"), "dynamics.m"));
  if (m < 1) throw ConfigError("key 'dynamics.m' must be positive");
  Vector a = as_vector(require(d, "dynamics.", "A"), "dynamics.A");
  Vector b = as_vector(require(d, "dynamics.", "B"), "dynamics.B");
  auto mm = static_cast<std::size_t>(m) * m;
  if (a.size() != mm) throw ConfigError("key 'dynamics.A' must hold m*m row-major entries");
  if (b.size() != mm) throw ConfigError("key 'dynamics.B' must hold m*m row-major entries");
  Matrix am(m, m), bm(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      am(i, j) = a[i * m + j];
      bm(i, j) = b[i * m + j];
    }
  return local_dynamics(std::move(am), std::move(bm));
}

AttackStrategy parse_strategy(const json& s, double quad_step) {
  std::string kind = as_string(require(s, "strategy.", "kind"), "strategy.kind");
  if (kind == "constant" || kind == "cos" || kind == "sin" || kind == "expdecay") {
    check_keys(s, "strategy.", {"kind", "K"});
    Vector k = as_vector(require(s, "strategy.", "K"), "strategy.K");
    if (kind == "constant") return ConstantStrategy{std::move(k)};
    if (kind == "cos") return CosineStrategy{std::move(k)};
    if (kind == "sin") return SineStrategy{std::move(k)};
    return ExpDecayStrategy{std::move(k)};
  }
  if (kind == "gauss") {
    check_keys(s, "strategy.", {"kind", "K", "seed", "step"});
    Vector k = as_vector(require(s, "strategy.", "K"), "strategy.K");
    auto seed = static_cast<std::uint64_t>(
        as_integer(require(s, "strategy.", "seed"), "strategy.seed"));
    double step = quad_step;  // piecewise-constant per integration step
    if (s.contains("step")) step = as_number(s["step"], "strategy.step");
    if (!(step > 0.0)) throw ConfigError("key 'strategy.step' must be positive");
    return GaussianNoiseStrategy{std::move(k), seed, step};
  }
  if (kind == "sampled") {
    check_keys(s, "strategy.", {"kind", "times", "values"});
    Vector times = as_vector(require(s, "strategy.", "times"), "strategy.times");
    const json& vals = require(s, "strategy.", "values");
    if (!vals.is_array() || vals.size() != times.size())
      throw ConfigError("key 'strategy.values' must pair with strategy.times");
    std::vector<Vector> values;
    for (const auto& v : vals) values.push_back(as_vector(v, "strategy.values"));
    return SampledStrategy{std::move(times), std::move(values)};
  }
  throw ConfigError("key 'strategy.kind' must be constant|cos|sin|expdecay|sampled|gauss");
}

CostModel parse_costs(const json& c) {
  std::string kind = as_string(require(c, "costs.", "kind"), "costs.kind");
  if (kind == "uniform") {
    check_keys(c, "costs.", {"kind", "c"});
    return UniformCost{as_number(require(c, "costs.", "c"), "costs.c")};
  }
  if (kind == "degree") {
    check_keys(c, "costs.", {"kind"});
    return DegreeCost{};
  }
  if (kind == "explicit") {
    check_keys(c, "costs.", {"kind", "values"});
    return ExplicitCost{as_vector(require(c, "costs.", "values"), "costs.values")};
  }
  throw ConfigError("key 'costs.kind' must be uniform|degree|explicit");
}

}  // namespace

AttackScenario parse_config_text(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be an object");
  check_keys(root, "", {"graph", "dynamics", "dbar", "t_c", "strategy", "costs", "budget",
                        "u_bar", "g_bar", "quad_step"});

  AttackScenario s;
  s.quad_step = as_number(require(root, "", "quad_step"), "quad_step");
  s.graph = parse_graph(require(root, "", "graph"));
  s.local = parse_dynamics(require(root, "", "dynamics"));
  s.dbar = as_number(require(root, "", "dbar"), "dbar");
  s.t_c = as_number(require(root, "", "t_c"), "t_c");
  s.strategy = parse_strategy(require(root, "", "strategy"), s.quad_step);
  s.costs = parse_costs(require(root, "", "costs"));
  s.budget = as_number(require(root, "", "budget"), "budget");
  s.u_bar = as_number(require(root, "", "u_bar"), "u_bar");
  s.g_bar = as_number(require(root, "", "g_bar"), "g_bar");

  ValidationReport rep = validate_scenario(s);
  if (!rep.ok) {
    std::string msg = "scenario validation failed:";
    for (const auto& v : rep.violations) msg += " [" + v.key + "] " + v.message;
    throw ConfigError(msg);
  }
  return s;
}

AttackScenario parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string scenario_to_json(const AttackScenario& s) {
  json root;
  // canonical graph emission: the realized edge set
  json edges = json::array();
  for (auto [i, j] : s.graph.edges) edges.push_back(json::array({i, j}));
  root["graph"] = {{"type", "explicit"}, {"n", s.graph.n}, {"edges", edges}};

  json a = json::array(), b = json::array();
  for (int i = 0; i < s.local.m; ++i)
    for (int j = 0; j < s.local.m; ++j) {
      a.push_back(s.local.a(i, j));
      b.push_back(s.local.b(i, j));
    }
  root["dynamics"] = {{"m", s.local.m}, {"A", a}, {"B", b}};
  root["dbar"] = s.dbar;
  root["t_c"] = s.t_c;

  json strat;
  strat["kind"] = strategy_kind(s.strategy);
  std::visit(
      [&](const auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, SampledStrategy>) {
          strat["times"] = st.times;
          json vals = json::array();
          for (const auto& v : st.values) vals.push_back(v);
          strat["values"] = vals;
        } else if constexpr (std::is_same_v<T, GaussianNoiseStrategy>) {
          strat["K"] = st.k;
          strat["seed"] = st.seed;
          strat["step"] = st.step;
        } else {
          strat["K"] = st.k;
        }
      },
      s.strategy);
  root["strategy"] = strat;

  json costs;
  costs["kind"] = cost_kind(s.costs);
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, UniformCost>)
          costs["c"] = c.c;
        else if constexpr (std::is_same_v<T, ExplicitCost>)
          costs["values"] = c.values;
      },
      s.costs);
  root["costs"] = costs;

  root["budget"] = s.budget;
  root["u_bar"] = s.u_bar;
  root["g_bar"] = s.g_bar;
  root["quad_step"] = s.quad_step;
  return root.dump(2) + "\n";
}

}  // namespace attacklab
