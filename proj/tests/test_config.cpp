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

#include <string>

#include "attacklab/config.hpp"
#include "attacklab/csv.hpp"
#include "attacklab/presets.hpp"
#include "doctest.h"

namespace {

using namespace attacklab;

const char* kMinimalConfig = R"({
  "graph": {"type": "path", "n": 6},
  "dynamics": {"m": 2, "A": [-0.5, 0.0, 1.0, -1.0], "B": [0.1, 0.1, 0.5, 0.2]},
  "dbar": 0.25,
  "t_c": 30.0,
  "strategy": {"kind": "constant", "K": [0.25, 0.1]},
  "costs": {"kind": "uniform", "c": 1.0},
  "budget": 2.0,
  "u_bar": 1e6,
  "g_bar": 1e6,
  "quad_step": 1e-3
})";

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

TEST_CASE("the minimal config reproduces the reference scenario") {
  AttackScenario parsed = parse_config_text(kMinimalConfig);
  AttackScenario built = presets::s2_scenario("constant", 30.0, UniformCost{1.0}, 2.0);
  CHECK(scenario_fingerprint(parsed) == scenario_fingerprint(built));
}

TEST_CASE("missing keys are named") {
  std::string noBudget = replace_once(kMinimalConfig, "\"budget\": 2.0,", "");
  try {
    parse_config_text(noBudget);
    FAIL("expected a ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("budget") != std::string::npos);
  }
}

TEST_CASE("unknown keys are rejected") {
  std::string extra =
      replace_once(kMinimalConfig, "\"budget\": 2.0,", "\"budget\": 2.0, \"bogus\": 1,");
  CHECK_THROWS_AS(parse_config_text(extra), ConfigError);

  std::string extra_nested = replace_once(
      kMinimalConfig, R"("strategy": {"kind": "constant", "K": [0.25, 0.1]})",
      R"("strategy": {"kind": "constant", "K": [0.25, 0.1], "seed": 3})");
  CHECK_THROWS_AS(parse_config_text(extra_nested), ConfigError);
}

TEST_CASE("validation failures fail the parse") {
  std::string bad_dbar = replace_once(kMinimalConfig, "\"dbar\": 0.25", "\"dbar\": 0.6");
  try {
    parse_config_text(bad_dbar);
    FAIL("expected a ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("dbar") != std::string::npos);
  }
}

TEST_CASE("type mismatches are rejected") {
  std::string bad = replace_once(kMinimalConfig, "\"t_c\": 30.0", "\"t_c\": \"thirty\"");
  CHECK_THROWS_AS(parse_config_text(bad), ConfigError);
  CHECK_THROWS_AS(parse_config_text("not json"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[1,2,3]"), ConfigError);
}

TEST_CASE("gauss strategies default their step to quad_step") {
  std::string gauss = replace_once(
      kMinimalConfig, R"("strategy": {"kind": "constant", "K": [0.25, 0.1]})",
      R"("strategy": {"kind": "gauss", "K": [0.25, 0.1], "seed": 5})");
  AttackScenario s = parse_config_text(gauss);
  const auto& g = std::get<GaussianNoiseStrategy>(s.strategy);
  CHECK(g.seed == 5);
  CHECK(g.step == s.quad_step);

  std::string no_seed = replace_once(
      kMinimalConfig, R"("strategy": {"kind": "constant", "K": [0.25, 0.1]})",
      R"("strategy": {"kind": "gauss", "K": [0.25, 0.1]})");
  CHECK_THROWS_AS(parse_config_text(no_seed), ConfigError);
}

TEST_CASE("round trip preserves the fingerprint") {
  AttackScenario sampled = presets::s2_scenario("constant", 30.0, UniformCost{1.0}, 2.0);
  sampled.strategy =
      SampledStrategy{{0.0, 10.0, 30.0}, {{0.25, 0.1}, {0.0, 0.0}, {-0.25, 0.2}}};

  AttackScenario scenarios[] = {
      presets::s2_scenario("constant", 30.0, UniformCost{1.0}, 2.0),
      presets::s2_scenario("sin", 60.0, DegreeCost{}, 3.0),
      presets::s2_scenario("gauss", 30.0, ExplicitCost{{1, 2, 2, 2, 2, 1}}, 6.0, 11),
      sampled,
  };
  for (const AttackScenario& s : scenarios) {
    AttackScenario back = parse_config_text(scenario_to_json(s));
    CHECK(scenario_fingerprint(back) == scenario_fingerprint(s));
  }
}

TEST_CASE("sampled strategies parse from config") {
  std::string cfg = replace_once(
      kMinimalConfig, R"("strategy": {"kind": "constant", "K": [0.25, 0.1]})",
      R"("strategy": {"kind": "sampled", "times": [0.0, 30.0],
                      "values": [[0.25, 0.1], [0.25, 0.1]]})");
  AttackScenario s = parse_config_text(cfg);
  const auto& st = std::get<SampledStrategy>(s.strategy);
  CHECK(st.times.size() == 2);
  CHECK(st.values[1][0] == 0.25);

  std::string mismatched = replace_once(
      kMinimalConfig, R"("strategy": {"kind": "constant", "K": [0.25, 0.1]})",
      R"("strategy": {"kind": "sampled", "times": [0.0, 30.0], "values": [[0.25, 0.1]]})");
  CHECK_THROWS_AS(parse_config_text(mismatched), ConfigError);
}

TEST_CASE("csv formatting is deterministic full-precision") {
  CHECK(format_g17(0.1) == "0.10000000000000001");
  CHECK(format_g17(1.0) == "1");
  CHECK(format_g17(-2.5e-13) == "-2.4999999999999999e-13");
  CHECK(set_to_string({1, 2, 5}) == "1+2+5");
  CHECK(set_to_string({}) == "-");
}

TEST_CASE("selection and verification CSV shapes") {
  SelectionResult r;
  r.algorithm = "greedy";
  r.set = {1, 2};
  r.f_value = 1.5;
  r.cost = 2.0;
  r.bound = 0.5;
  r.wall_seconds = 0.001;
  std::string sel = selection_csv(r, 2.0);
  CHECK(sel.rfind("algorithm,omega,cost,set,f_value,bound,wall_ms\n", 0) == 0);
  CHECK(sel.find("greedy,2,2,1+2,1.5,0.5,1\n") != std::string::npos);

  VerificationReport rep;
  rep.mode = VerifyMode::exhaustive();
  rep.monotone = true;
  rep.submodular = false;
  rep.checked_triples = 1458;
  ViolationWitness w;
  w.set_a = {1};
  w.set_b = {1, 2};
  w.j = 3;
  rep.first_violation = w;
  std::string ver = verification_csv(rep, "constant");
  CHECK(ver.rfind("mode,strategy,monotone,submodular,checked,violation\n", 0) == 0);
  CHECK(ver.find("exhaustive,constant,true,false,1458,1|1+2|3\n") != std::string::npos);
}

}  // namespace
