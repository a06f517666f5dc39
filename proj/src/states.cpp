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
#include "quasiprob/states.hpp"

#include <cmath>
#include <sstream>

#include "quasiprob/error.hpp"
#include "quasiprob/pauli.hpp"

namespace quasiprob {

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

char to_char(Preparation p) noexcept { return p == Preparation::Zero ? '0' : '+'; }

Ket standard_ket(std::string_view label) {
    const double h = 1.0 / std::sqrt(2.0);
    if (label == "0") {
        return Ket{1.0, 0.0};
    }
    if (label == "1") {
        return Ket{0.0, 1.0};
    }
    if (label == "+") {
        return Ket{h, h};
    }
    if (label == "-" || label == "−") {
        return Ket{h, -h};
    }
    throw Error(ErrorCode::UnknownLabel, "unknown basis-state label '" + std::string(label) +
                                             "' (expected 0, 1, + or -)");
}

ComplexMatrix bloch_to_density(const BlochVector &b) {
    if (b.norm() > 1.0 + kTolerance) {
        std::ostringstream msg;
        msg << "Bloch vector (" << b.x << ", " << b.y << ", " << b.z << ") has length "
            << b.norm() << " > 1";
        throw Error(ErrorCode::UnphysicalState, msg.str());
    }
    return 0.5 * (pauli_matrix(Pauli::I) + b.x * pauli_matrix(Pauli::X) +
                  b.y * pauli_matrix(Pauli::Y) + b.z * pauli_matrix(Pauli::Z));
}

BlochVector density_to_bloch(const ComplexMatrix &m) {
    if (m.dim() != 2) {
        throw Error(ErrorCode::DimensionMismatch,
                    "Bloch vector needs a 2x2 matrix, got dimension " + std::to_string(m.dim()));
    }
    if (!m.is_hermitian()) {
        throw Error(ErrorCode::NotHermitian, "density matrix is not Hermitian");
    }
    if (std::abs(m.trace() - Complex{1.0, 0.0}) > kTolerance) {
        std::ostringstream msg;
        msg << "density matrix has trace " << m.trace().real() << ", expected 1";
        throw Error(ErrorCode::InvalidTrace, msg.str());
    }
    const auto component = [&m](Pauli p) {
        return PauliString({p}).trace_product(m).real();
    };
    return {component(Pauli::X), component(Pauli::Y), component(Pauli::Z)};
}

ComplexMatrix preparation_density(Preparation p) {
    return p == Preparation::Zero ? bloch_to_density({0.0, 0.0, 1.0})
                                  : bloch_to_density({1.0, 0.0, 0.0});
}

std::string ProductPreparation::label() const {
    return std::string{to_char(first), to_char(second)};
}

ProductPreparation pbr_input(Preparation a, Preparation b) {
    return {a, b, tensor(preparation_density(a), preparation_density(b))};
}

std::array<ProductPreparation, 4> all_pbr_inputs() {
    using P = Preparation;
    return {pbr_input(P::Zero, P::Zero), pbr_input(P::Zero, P::Plus),
            pbr_input(P::Plus, P::Zero), pbr_input(P::Plus, P::Plus)};
}

std::pair<Preparation, Preparation> parse_input_label(std::string_view label) {
    const auto one = [label](char c) {
        if (c == '0') {
            return Preparation::Zero;
        }
        if (c == '+') {
            return Preparation::Plus;
        }
        throw Error(ErrorCode::UnknownLabel, "unknown input '" + std::string(label) +
                                                 "' (expected 00, 0+, +0 or ++)");
    };
    if (label.size() != 2) {
        throw Error(ErrorCode::UnknownLabel, "unknown input '" + std::string(label) +
                                                 "' (expected 00, 0+, +0 or ++)");
    }
    return {one(label[0]), one(label[1])};
}

} // namespace quasiprob
