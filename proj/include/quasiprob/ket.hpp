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

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "quasiprob/complex_matrix.hpp"

namespace quasiprob {

/// State vector. Amplitudes are stored as given; normalisation is checked
/// where a ket is used as a measurement outcome.
class Ket {
  public:
    explicit Ket(std::vector<Complex> amplitudes);
    Ket(std::initializer_list<Complex> amplitudes);

    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] Complex operator[](std::size_t i) const { return amps_[i]; }
    [[nodiscard]] const std::vector<Complex> &amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] double norm_squared() const;

    /// Same ray, with the first non-negligible amplitude made real and
    /// non-negative.
    [[nodiscard]] Ket with_canonical_phase() const;
    [[nodiscard]] bool approx_equal(const Ket &other, double tol = kTolerance) const;

  private:
    std::vector<Complex> amps_;
};

/// <a|b>
Complex inner(const Ket &a, const Ket &b);

/// |a><b|
ComplexMatrix outer(const Ket &a, const Ket &b);

/// |k><k|
ComplexMatrix projector(const Ket &k);

/// Eigenvector of the largest eigenvalue of a Hermitian matrix, unit norm,
/// canonical phase. Used to recover kets from rank-1 projectors.
Ket dominant_eigenvector(const ComplexMatrix &m);

} // namespace quasiprob
