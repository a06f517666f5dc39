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
#include "quasiprob/pauli.hpp"

#include <cmath>
#include <sstream>

#include "quasiprob/error.hpp"

namespace quasiprob {

namespace {

// Row r of a single-qubit Pauli has one non-zero entry, in column r ^ flip.
struct SingleEntry {
    unsigned flip;
    Complex value;
};

SingleEntry single_entry(Pauli p, unsigned row) {
    switch (p) {
    case Pauli::I:
        return {0U, 1.0};
    case Pauli::X:
        return {1U, 1.0};
    case Pauli::Y:
        return {1U, row == 0U ? Complex{0.0, -1.0} : Complex{0.0, 1.0}};
    case Pauli::Z:
        return {0U, row == 0U ? 1.0 : -1.0};
    }
    return {0U, 0.0};
}

} // namespace

char to_char(Pauli p) noexcept {
    constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    return kLetters[static_cast<std::size_t>(p)];
}

ComplexMatrix pauli_matrix(Pauli p) {
    const Complex i{0.0, 1.0};
    switch (p) {
    case Pauli::I:
        return ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}};
    case Pauli::X:
        return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
    case Pauli::Y:
        return ComplexMatrix{{0.0, -i}, {i, 0.0}};
    case Pauli::Z:
        return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}};
    }
    throw Error(ErrorCode::UnknownLabel, "invalid Pauli letter");
}

PauliString::PauliString(std::vector<Pauli> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw Error(ErrorCode::UnknownLabel, "Pauli string must act on at least one qubit");
    }
}

PauliString PauliString::parse(std::string_view text) {
    std::vector<Pauli> letters;
    letters.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case 'I':
            letters.push_back(Pauli::I);
            break;
        case 'X':
            letters.push_back(Pauli::X);
            break;
        case 'Y':
            letters.push_back(Pauli::Y);
            break;
        case 'Z':
            letters.push_back(Pauli::Z);
            break;
        default:
            throw Error(ErrorCode::UnknownLabel,
                        "invalid Pauli string '" + std::string(text) + "'");
        }
    }
    return PauliString(std::move(letters));
}

PauliString PauliString::identity(std::size_t qubits) {
    return PauliString(std::vector<Pauli>(qubits, Pauli::I));
}

std::string PauliString::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (auto p : letters_) {
        s.push_back(to_char(p));
    }
    return s;
}

bool PauliString::is_identity() const noexcept {
    for (auto p : letters_) {
        if (p != Pauli::I) {
            return false;
        }
    }
    return true;
}

ComplexMatrix PauliString::matrix() const {
    ComplexMatrix m = pauli_matrix(letters_.front());
    for (std::size_t k = 1; k < letters_.size(); ++k) {
        m = tensor(m, pauli_matrix(letters_[k]));
    }
    return m;
}

Complex PauliString::trace_product(const ComplexMatrix &m) const {
    const std::size_t n = letters_.size();
    const std::size_t dim = std::size_t{1} << n;
    if (m.dim() != dim) {
        throw Error(ErrorCode::DimensionMismatch,
                    "Pauli string " + str() + " needs dimension " + std::to_string(dim) +
                        ", got " + std::to_string(m.dim()));
    }
    Complex total{0.0, 0.0};
    for (std::size_t row = 0; row < dim; ++row) {
        std::size_t col = 0;
        Complex value{1.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t shift = n - 1 - k;
            const auto bit = static_cast<unsigned>((row >> shift) & 1U);
            const auto e = single_entry(letters_[k], bit);
            col |= static_cast<std::size_t>(bit ^ e.flip) << shift;
            value *= e.value;
        }
        total += value * m(col, row);
    }
    return total;
}

PauliExpansion::PauliExpansion(std::size_t qubits, Map coeffs)
    : qubits_(qubits), coeffs_(std::move(coeffs)) {
    if (qubits_ == 0) {
        throw Error(ErrorCode::DimensionMismatch, "expansion needs at least one qubit");
    }
    for (const auto &[p, c] : coeffs_) {
        if (p.qubits() != qubits_) {
            throw Error(ErrorCode::DimensionMismatch,
                        "Pauli string " + p.str() + " in a " + std::to_string(qubits_) +
                            "-qubit expansion");
        }
    }
}

PauliExpansion PauliExpansion::from_terms(
    std::size_t qubits, std::initializer_list<std::pair<std::string_view, double>> terms) {
    Map coeffs;
    for (const auto &[text, c] : terms) {
        coeffs[PauliString::parse(text)] += c;
    }
    return PauliExpansion(qubits, std::move(coeffs));
}

double PauliExpansion::coefficient(const PauliString &p) const {
    const auto it = coeffs_.find(p);
    return it == coeffs_.end() ? 0.0 : it->second;
}

double PauliExpansion::coefficient(std::string_view p) const {
    return coefficient(PauliString::parse(p));
}

bool PauliExpansion::approx_equal(const PauliExpansion &other, double tol) const {
    if (qubits_ != other.qubits_) {
        return false;
    }
    for (const auto &[p, c] : coeffs_) {
        if (std::abs(c - other.coefficient(p)) > tol) {
            return false;
        }
    }
    for (const auto &[p, c] : other.coeffs_) {
        if (std::abs(c - coefficient(p)) > tol) {
            return false;
        }
    }
    return true;
}

std::size_t qubit_count(std::size_t dim) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    if (dim == 0 || (std::size_t{1} << n) != dim || n == 0) {
        throw Error(ErrorCode::NotPowerOfTwo,
                    "dimension " + std::to_string(dim) + " is not 2^n with n >= 1");
    }
    return n;
}

PauliExpansion pauli_expand(const ComplexMatrix &m, std::size_t qubits) {
    if (qubits == 0 || qubits >= 16 || m.dim() != (std::size_t{1} << qubits)) {
        throw Error(ErrorCode::NotPowerOfTwo, "dimension " + std::to_string(m.dim()) +
                                                  " does not match " +
                                                  std::to_string(qubits) + " qubits");
    }
    const double scale = 1.0 / static_cast<double>(m.dim());
    PauliExpansion::Map coeffs;
    std::vector<Pauli> letters(qubits, Pauli::I);
    const std::size_t count = std::size_t{1} << (2 * qubits);
    for (std::size_t code = 0; code < count; ++code) {
        // base-4 digits of code, most significant first, give the letters
        for (std::size_t k = 0; k < qubits; ++k) {
            letters[k] = static_cast<Pauli>((code >> (2 * (qubits - 1 - k))) & 3U);
        }
        const PauliString p(letters);
        const Complex c = scale * p.trace_product(m);
        if (std::abs(c.imag()) > kTolerance) {
            std::ostringstream msg;
            msg << "coefficient of " << p.str() << " has imaginary part " << c.imag();
            throw Error(ErrorCode::NotHermitian, msg.str());
        }
        if (std::abs(c.real()) > kTolerance) {
            coeffs.emplace(p, c.real());
        }
    }
    return PauliExpansion(qubits, std::move(coeffs));
}

PauliExpansion pauli_expand(const ComplexMatrix &m) {
    return pauli_expand(m, qubit_count(m.dim()));
}

ComplexMatrix pauli_synthesize(const PauliExpansion &e) {
    ComplexMatrix out(std::size_t{1} << e.qubits());
    for (const auto &[p, c] : e.coeffs()) {
        out = out + c * p.matrix();
    }
    return out;
}

} // namespace quasiprob
