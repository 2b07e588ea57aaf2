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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "attacklab/config.hpp"
#include "attacklab/csv.hpp"
#include "attacklab/presets.hpp"
#include "attacklab/select.hpp"
#include "attacklab/submodular.hpp"

namespace {

using namespace attacklab;

std::vector<double> parse_vector_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::runtime_error("cannot open x0 file: " + arg.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  for (char& c : text)
    if (c == ',' || c == '\n' || c == '\t') c = ' ';
  std::istringstream in(text);
  std::vector<double> out;
  double v = 0.0;
  while (in >> v) out.push_back(v);
  return out;
}

std::vector<int> parse_set_arg(const std::string& arg) {
  if (arg.empty() || arg == "-" || arg == "none") return {};
  std::string text = arg;
  for (char& c : text)
    if (c == ',' || c == '+') c = ' ';
  std::istringstream in(text);
  std::vector<int> out;
  int v = 0;
  while (in >> v) out.push_back(v);
  return out;
}

int cmd_select(const std::string& config_path, const std::string& algorithm,
               std::optional<std::uint64_t> seed, const std::string& out_path) {
  AttackScenario s;
  try {
    s = parse_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (algorithm == "random" && !seed) {
    std::cerr << "error: --seed is required for the random algorithm\n";
    return 1;
  }
  try {
    InfluenceCache cache = build_influence_cache(s);
    SelectionResult result;
    if (algorithm == "greedy")
      result = fdi_assa(s, cache);
    else if (algorithm == "greedy-improved")
      result = ifdi_assa(s, cache);
    else if (algorithm == "brute")
      result = brute_force(s, cache);
    else if (algorithm == "random")
      result = random_baseline(s, cache, *seed);
    else if (algorithm == "degree")
      result = degree_baseline(s, cache);
    else {
      std::cerr << "error: unknown algorithm '" << algorithm << "'\n";
      return 1;
    }
    write_text_file(out_path, selection_csv(result, s.budget));
    write_text_file(out_path + ".trace.csv", trace_csv(result));
    std::cout << "algorithm=" << result.algorithm << " set=" << set_to_string(result.set)
              << " f=" << format_g17(result.f_value) << " cost=" << format_g17(result.cost)
              << " bound=" << format_g17(result.bound) << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_verify(const std::string& config_path, const std::string& mode_name,
               std::optional<int> samples, std::optional<std::uint64_t> seed,
               const std::string& out_path) {
  AttackScenario s;
  try {
    s = parse_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  VerifyMode mode;
  if (mode_name == "exhaustive") {
    mode = VerifyMode::exhaustive();
  } else if (mode_name == "sampled") {
    if (!samples || !seed) {
      std::cerr << "error: sampled mode requires --samples and --seed\n";
      return 1;
    }
    mode = VerifyMode::sampled(*samples, *seed);
  } else {
    std::cerr << "error: unknown mode '" << mode_name << "'\n";
    return 1;
  }
  try {
    VerificationReport rep = verify(s, mode);
    write_text_file(out_path, verification_csv(rep, strategy_kind(s.strategy)));
    std::cout << "monotone=" << (rep.monotone ? "true" : "false")
              << " submodular=" << (rep.submodular ? "true" : "false")
              << " checked=" << rep.checked_triples << "\n";
    return 0;  // the verdict is data, not an error
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_simulate(const std::string& config_path, const std::string& x0_arg,
                 const std::string& set_arg, long long stride, const std::string& out_path) {
  try {
    AttackScenario s = parse_config(config_path);
    std::vector<double> x0 = parse_vector_arg(x0_arg);
    const std::size_t dim = static_cast<std::size_t>(s.graph.n) * s.local.m;
    if (x0.size() != dim) {
      std::cerr << "error: x0 has " << x0.size() << " entries, expected " << dim << "\n";
      return 1;
    }
    std::vector<int> attack_set = parse_set_arg(set_arg);
    GlobalSystem sys = build_global(s.local, s.graph, s.dbar);
    Trajectory clean = simulate_trajectory(sys, x0, nullptr, s.t_c, s.quad_step);
    AttackInput attack{indicator(attack_set, s.graph.n), s.strategy};
    Trajectory attacked = simulate_trajectory(sys, x0, &attack, s.t_c, s.quad_step);

    const int n = s.graph.n, m = s.local.m;
    std::string csv = "t,agent";
    for (int c = 1; c <= m; ++c) csv += ",clean_" + std::to_string(c);
    for (int c = 1; c <= m; ++c) csv += ",attacked_" + std::to_string(c);
    csv += ",diff_norm\n";
    if (stride < 1) stride = 1;
    for (std::size_t idx = 0; idx < clean.times.size(); idx += stride) {
      if (idx + stride >= clean.times.size() && idx + 1 != clean.times.size())
        idx = clean.times.size() - 1;  // always include the final time
      Vector diff = attacked.states[idx];
      vec_axpy(-1.0, clean.states[idx], diff);
      double diff_norm = vec_norm(diff);
      for (int agent = 1; agent <= n; ++agent) {
        csv += format_g17(clean.times[idx]) + "," + std::to_string(agent);
        for (int c = 0; c < m; ++c)
          csv += "," + format_g17(clean.states[idx][(agent - 1) * m + c]);
        for (int c = 0; c < m; ++c)
          csv += "," + format_g17(attacked.states[idx][(agent - 1) * m + c]);
        csv += "," + format_g17(diff_norm) + "\n";
      }
    }
    write_text_file(out_path, csv);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_reproduce(const std::string& preset, const std::string& out_dir) {
  try {
    std::filesystem::create_directories(out_dir);
    presets::run_preset(preset, out_dir);
    std::cout << "wrote " << preset << " outputs to " << out_dir << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"attacklab: FDI attack-set selection against linear consensus"};
  app.require_subcommand(1);

  std::string config, out, algorithm, mode = "exhaustive", preset, out_dir, x0_arg,
                                       set_arg = "-";
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  long long stride = 1;

  auto* select = app.add_subcommand("select", "run one selection algorithm");
  select->add_option("--config", config, "scenario config (JSON)")->required();
  select->add_option("--algorithm", algorithm,
                     "greedy|greedy-improved|brute|random|degree")
      ->required();
  select->add_option("--seed", seed, "seed for the random baseline");
  select->add_option("--out", out, "selection CSV path (trace at <out>.trace.csv)")
      ->required();

  auto* verify_cmd = app.add_subcommand("verify", "monotonicity/submodularity verification");
  verify_cmd->add_option("--config", config, "scenario config (JSON)")->required();
  verify_cmd->add_option("--mode", mode, "exhaustive|sampled")->required();
  verify_cmd->add_option("--samples", samples, "sample count (sampled mode)");
  verify_cmd->add_option("--seed", seed, "chain seed (sampled mode)");
  verify_cmd->add_option("--out", out, "verification CSV path")->required();

  auto* simulate = app.add_subcommand("simulate", "clean vs attacked trajectories");
  simulate->add_option("--config", config, "scenario config (JSON)")->required();
  simulate->add_option("--x0", x0_arg, "initial state: comma list or @file")->required();
  simulate->add_option("--set", set_arg, "attacked agents, e.g. 1,2 ('-' for none)");
  simulate->add_option("--stride", stride, "emit every k-th time point (default 1)");
  simulate->add_option("--out", out, "trajectory CSV path")->required();

  auto* reproduce = app.add_subcommand("reproduce", "one-command experiment presets");
  reproduce->add_option("--preset", preset, "table1|example1|example2|fig3|fig4|fig5|fig7")
      ->required();
  reproduce->add_option("--out-dir", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (select->parsed()) return cmd_select(config, algorithm, seed, out);
  if (verify_cmd->parsed()) return cmd_verify(config, mode, samples, seed, out);
  if (simulate->parsed()) return cmd_simulate(config, x0_arg, set_arg, stride, out);
  if (reproduce->parsed()) return cmd_reproduce(preset, out_dir);
  return 1;
}
