// Copyright 2026 The auvform Authors
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

#include <filesystem>
#include <string>

#include "auvform/sim_engine.hpp"

namespace auvform {

/// Parses a JSON scenario document. Only "trajectory" and "sim" are
/// required; every other block and key falls back to the defaults documented
/// in docs/scenario.md. Unknown keys, malformed values and invariant
/// violations throw ConfigError with the offending path or line.
Scenario parse_scenario_text(const std::string& text);
Scenario parse_scenario(const std::filesystem::path& path);

/// Writes every field, so the output parses back to the same Scenario.
std::string serialize_scenario(const Scenario& s);

}  // namespace auvform
