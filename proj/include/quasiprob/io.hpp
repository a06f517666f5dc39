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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "quasiprob/complex_matrix.hpp"
#include "quasiprob/ket.hpp"
#include "quasiprob/pauli.hpp"
#include "quasiprob/subensemble.hpp"

namespace quasiprob::io {

/// Insertion-ordered so documents keep their field order.
using json = nlohmann::ordered_json;

// Encoding: a complex number is [re, im], a matrix an array of rows, a ket
// an array of amplitudes, a Pauli expansion {"n": int, "coeffs": {...}}.
// Decoders throw Error(MalformedInput) on any shape or type mismatch.

json to_json(Complex z);
json to_json(const ComplexMatrix &m);
json to_json(const Ket &k);
json to_json(const PauliExpansion &e);

Complex complex_from_json(const json &j);
ComplexMatrix matrix_from_json(const json &j);
Ket ket_from_json(const json &j);
PauliExpansion expansion_from_json(const json &j);

/// A state file holds either a density matrix or a ket (turned into |k><k|).
ComplexMatrix state_from_json(const json &j);
/// A basis file holds an array of kets, or {"labels": [...], "kets": [...]}.
MeasurementBasis basis_from_json(const json &j);

/// Reads and parses a JSON file; missing files and syntax errors are
/// reported as MalformedInput.
json read_json_file(const std::filesystem::path &path);

/// Shortest representation that round-trips; -0 prints as 0.
std::string format_exact(double v);
/// Six significant digits; magnitudes <= kTolerance print as 0.
std::string format_pretty(double v);
std::string format_pretty(Complex z);

} // namespace quasiprob::io
