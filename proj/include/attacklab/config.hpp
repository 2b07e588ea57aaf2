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

#include <stdexcept>
#include <string>

#include "attacklab/attack.hpp"

namespace attacklab {

/// Raised for missing/unknown keys, type mismatches, and scenarios that
/// fail validation; the message names the offending key.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses the JSON scenario config and runs validate_scenario; any
/// violation fails the parse. Unknown keys are errors at every level.
AttackScenario parse_config(const std::string& path);
AttackScenario parse_config_text(const std::string& json_text);

/// Canonical config emission; parse_config_text(scenario_to_json(s))
/// reproduces the scenario fingerprint.
std::string scenario_to_json(const AttackScenario& s);

}  // namespace attacklab
