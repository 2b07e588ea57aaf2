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

#include "attacklab/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace attacklab {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string set_to_string(const std::vector<int>& set) {
  if (set.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += "+";
    out += std::to_string(set[i]);
  }
  return out;
}

std::string selection_csv(const SelectionResult& result, double omega) {
  std::string out = "algorithm,omega,cost,set,f_value,bound,wall_ms\n";
  out += result.algorithm + "," + format_g17(omega) + "," + format_g17(result.cost) + "," +
         set_to_string(result.set) + "," + format_g17(result.f_value) + "," +
         format_g17(result.bound) + "," + format_g17(result.wall_seconds * 1e3) + "\n";
  return out;
}

std::string trace_csv(const SelectionResult& result) {
  std::string out = "iter,agent,gain,gain_per_cost,f_cum\n";
  for (const auto& e : result.trace) {
    out += std::to_string(e.iteration) + "," + std::to_string(e.agent) + "," +
           format_g17(e.gain) + "," + format_g17(e.gain_per_cost) + "," +
           format_g17(e.f_cum) + "\n";
  }
  return out;
}

std::string verification_csv(const VerificationReport& report, const std::string& strategy) {
  std::string out = "mode,strategy,monotone,submodular,checked,violation\n";
  std::string mode = report.mode.kind == VerifyMode::kExhaustive ? "exhaustive" : "sampled";
  std::string violation = "-";
  if (report.first_violation) {
    const auto& w = *report.first_violation;
    violation = set_to_string(w.set_a) + "|" + set_to_string(w.set_b) + "|" +
                (w.j ? std::to_string(*w.j) : std::string("-"));
  }
  out += mode + "," + strategy + "," + (report.monotone ? "true" : "false") + "," +
         (report.submodular ? "true" : "false") + "," +
         std::to_string(report.checked_triples) + "," + violation + "\n";
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace attacklab
