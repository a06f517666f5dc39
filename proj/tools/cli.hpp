// Copyright 2026 The quasiprob Authors
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

#include <iosfwd>
#include <string>
#include <vector>

#include "quasiprob/pbr_scenario.hpp"

namespace quasiprob::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMalformedInput = 3;

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`. The measurement definition is injectable so tests
/// can check that `verify` notices a perturbed outcome.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
        const EtaDefinition &definition = eta_definition());

} // namespace quasiprob::cli
