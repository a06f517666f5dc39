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

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "quasiprob/complex_matrix.hpp"
#include "quasiprob/ket.hpp"

namespace quasiprob {

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    [[nodiscard]] double norm() const;
};

/// The two single-system preparations of the overlapping-states scenario.
enum class Preparation { Zero, Plus };

char to_char(Preparation p) noexcept;

/// "0", "1", "+", "-" (the UTF-8 minus sign is accepted as well).
/// Throws UnknownLabel.
Ket standard_ket(std::string_view label);

/// (I + xX + yY + zZ) / 2. Throws UnphysicalState if |b| > 1 + kTolerance.
ComplexMatrix bloch_to_density(const BlochVector &b);

/// (tr(Xm), tr(Ym), tr(Zm)). Throws DimensionMismatch for non-2x2 input,
/// InvalidTrace unless tr(m) = 1 and NotHermitian for non-Hermitian input.
BlochVector density_to_bloch(const ComplexMatrix &m);

/// (I+Z)/2 for Zero, (I+X)/2 for Plus.
ComplexMatrix preparation_density(Preparation p);

struct ProductPreparation {
    Preparation first;
    Preparation second;
    ComplexMatrix density;

    /// "00", "0+", "+0" or "++".
    [[nodiscard]] std::string label() const;
};

ProductPreparation pbr_input(Preparation a, Preparation b);

/// The four product inputs in the order 00, 0+, +0, ++.
std::array<ProductPreparation, 4> all_pbr_inputs();

/// Parses "00", "0+", "+0", "++". Throws UnknownLabel.
std::pair<Preparation, Preparation> parse_input_label(std::string_view label);

} // namespace quasiprob
