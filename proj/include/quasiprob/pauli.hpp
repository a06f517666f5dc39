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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quasiprob/complex_matrix.hpp"

namespace quasiprob {

/// Declaration order gives the serialisation order I < X < Y < Z.
enum class Pauli : std::uint8_t { I, X, Y, Z };

char to_char(Pauli p) noexcept;
ComplexMatrix pauli_matrix(Pauli p);

/// Tensor product of single-qubit Paulis. Letter 0 acts on qubit 0, the
/// leftmost tensor factor, so "XZ" is X (x) Z.
class PauliString {
  public:
    explicit PauliString(std::vector<Pauli> letters);
    /// Throws UnknownLabel for characters outside "IXYZ" or an empty string.
    static PauliString parse(std::string_view text);
    static PauliString identity(std::size_t qubits);

    [[nodiscard]] std::size_t qubits() const noexcept { return letters_.size(); }
    [[nodiscard]] const std::vector<Pauli> &letters() const noexcept { return letters_; }
    [[nodiscard]] std::string str() const;
    [[nodiscard]] bool is_identity() const noexcept;
    [[nodiscard]] ComplexMatrix matrix() const;
    /// trace(P * m) computed from the permutation-with-phases structure of P.
    [[nodiscard]] Complex trace_product(const ComplexMatrix &m) const;

    friend auto operator<=>(const PauliString &, const PauliString &) = default;
    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    std::vector<Pauli> letters_;
};

/// Real-weighted sum of n-qubit Pauli strings, kept in I < X < Y < Z order.
class PauliExpansion {
  public:
    using Map = std::map<PauliString, double>;

    /// Throws DimensionMismatch if any string has length != qubits.
    PauliExpansion(std::size_t qubits, Map coeffs);
    /// Convenience for literals: {{"II", 0.25}, {"XX", 0.25}}.
    static PauliExpansion from_terms(
        std::size_t qubits,
        std::initializer_list<std::pair<std::string_view, double>> terms);

    [[nodiscard]] std::size_t qubits() const noexcept { return qubits_; }
    [[nodiscard]] const Map &coeffs() const noexcept { return coeffs_; }
    /// Zero for absent strings.
    [[nodiscard]] double coefficient(const PauliString &p) const;
    [[nodiscard]] double coefficient(std::string_view p) const;
    [[nodiscard]] bool approx_equal(const PauliExpansion &other,
                                    double tol = kTolerance) const;

  private:
    std::size_t qubits_;
    Map coeffs_;
};

/// coeffs[P] = trace(P m) / 2^n, omitting |coeff| <= kTolerance.
/// Throws NotPowerOfTwo if dim(m) != 2^qubits and NotHermitian if any
/// coefficient has an imaginary part above kTolerance.
PauliExpansion pauli_expand(const ComplexMatrix &m, std::size_t qubits);
/// Qubit count inferred from dim(m).
PauliExpansion pauli_expand(const ComplexMatrix &m);

ComplexMatrix pauli_synthesize(const PauliExpansion &e);

/// log2(dim) if dim is a power of two, otherwise throws NotPowerOfTwo.
std::size_t qubit_count(std::size_t dim);

} // namespace quasiprob
