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

#include "attacklab/select.hpp"
#include "attacklab/submodular.hpp"

namespace attacklab {

/// %.17g rendering used by every CSV number.
std::string format_g17(double v);

/// "1+2+5" (ascending); empty set renders as "-".
std::string set_to_string(const std::vector<int>& set);

/// "algorithm,omega,cost,set,f_value,bound,wall_ms" row.
std::string selection_csv(const SelectionResult& result, double omega);

/// "iter,agent,gain,gain_per_cost,f_cum" rows.
std::string trace_csv(const SelectionResult& result);

/// "mode,strategy,monotone,submodular,checked,violation" row; the witness
/// serializes as "A|B|j" ("-" when absent).
std::string verification_csv(const VerificationReport& report, const std::string& strategy);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace attacklab
