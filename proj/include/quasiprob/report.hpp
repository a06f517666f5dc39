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

#include <string>
#include <string_view>
#include <vector>

#include "quasiprob/pbr_scenario.hpp"
#include "quasiprob/subensemble.hpp"

namespace quasiprob::report {

enum class Format { Pretty, Json, Csv };

/// "pretty", "json", "csv". Throws UnknownLabel.
Format parse_format(std::string_view name);

// Each renderer returns a complete document ending in a newline. Output
// depends only on its arguments.

std::string render_eta(const EtaBasis &basis, Format format);
std::string render_probabilities(const EtaBasis &basis, InputPair input, Format format);
std::string render_table(const ContributionTable &table, Format format);
std::string render_paradox(const ParadoxReport &report, Format format);
std::string render_decomposition(const MeasurementBasis &basis,
                                 const std::vector<SubensembleOperator> &parts, Format format);
std::string render_joint(const JointQuasiDistribution &dist, Format format);

/// "0.25 II + 0.25 XX - 0.25 ZZ", terms in I < X < Y < Z order.
std::string pretty_expansion(const PauliExpansion &e);

} // namespace quasiprob::report
