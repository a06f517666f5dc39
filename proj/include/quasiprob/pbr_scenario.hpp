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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quasiprob/complex_matrix.hpp"
#include "quasiprob/ket.hpp"
#include "quasiprob/pauli.hpp"
#include "quasiprob/states.hpp"

namespace quasiprob {

/// Two-qubit entangled measurement of the overlapping-states scenario.
///
/// Outcome i (1..4) is the projector
///   1: (II + XX - ZZ + YY) / 4
///   2: (II + XZ - ZX - YY) / 4
///   3: (II - XZ + ZX - YY) / 4
///   4: (II - XX + ZZ + YY) / 4
/// Each one has zero probability for exactly one of the product inputs
/// 00, 0+, +0, ++, and the map from outcomes to excluded inputs is found by
/// evaluating the Born probabilities, not by table lookup.
using EtaDefinition = std::array<PauliExpansion, 4>;
using InputPair = std::pair<Preparation, Preparation>;

inline constexpr std::size_t kEtaOutcomes = 4;

EtaDefinition eta_definition();

/// Synthesised projector for outcome i in 1..4. Throws IndexOutOfRange.
ComplexMatrix eta_projector(int i);

struct EtaBasisChecks {
    double rank_one_error = 0.0;     ///< max over i of |P_i^2 - P_i| and |tr P_i - 1|
    double orthogonality_error = 0.0;
    double completeness_error = 0.0;
    double ket_error = 0.0;          ///< max over i of | |k_i><k_i| - P_i |

    [[nodiscard]] bool passed(double tol = kTolerance) const {
        return rank_one_error <= tol && orthogonality_error <= tol &&
               completeness_error <= tol && ket_error <= tol;
    }
};

class EtaBasis {
  public:
    /// Builds projectors, kets and the exclusion map from an arbitrary
    /// definition without rejecting it; inspect checks() for validity.
    static EtaBasis from_definition(const EtaDefinition &definition);

    [[nodiscard]] const EtaDefinition &definition() const noexcept { return definition_; }
    /// Index 0 holds outcome 1.
    [[nodiscard]] const std::array<ComplexMatrix, 4> &projectors() const noexcept {
        return projectors_;
    }
    [[nodiscard]] const std::array<Ket, 4> &kets() const noexcept { return kets_; }
    /// Outcome i (1-based) -> the unique input with Born probability <= kTolerance.
    /// Outcomes with zero or several such inputs are absent.
    [[nodiscard]] const std::vector<std::pair<int, InputPair>> &excluded_inputs() const noexcept {
        return excluded_;
    }
    [[nodiscard]] std::optional<InputPair> excluded_input(int outcome) const;
    [[nodiscard]] const EtaBasisChecks &checks() const noexcept { return checks_; }

    /// tr(P_i rho(a) (x) rho(b)), unclamped. Throws IndexOutOfRange.
    [[nodiscard]] double born_probability(int outcome, Preparation a, Preparation b) const;

  private:
    EtaBasis(EtaDefinition definition, std::array<ComplexMatrix, 4> projectors,
             std::array<Ket, 4> kets);

    EtaDefinition definition_;
    std::array<ComplexMatrix, 4> projectors_;
    std::array<Ket, 4> kets_;
    std::vector<std::pair<int, InputPair>> excluded_;
    EtaBasisChecks checks_;
};

/// The canonical basis. Throws InternalConsistency if it fails its own checks.
EtaBasis eta_basis();

/// Born probability clamped to [0, 1].
double outcome_probability(int outcome, Preparation a, Preparation b);

/// One eigenvalue-assignment component of a single-system preparation,
/// labelled z-value then x-value ("0+", "0-", "1+").
struct Assignment {
    std::string label;
    double weight;
    ComplexMatrix op;
};

/// rho(zero) = 1/2 R(0+) + 1/2 R(0-) and rho(plus) = 1/2 R(0+) + 1/2 R(1+),
/// obtained by decomposing over the complementary basis.
std::vector<Assignment> assignment_components(Preparation p);

struct ContributionRow {
    std::string label;  ///< "0+;0-": first system's assignment, then second's
    double weight;      ///< mixture weight of this sub-ensemble in the input
    std::array<double, 4> entries;
};

/// Sub-ensemble by outcome table. Entry (r, i) = tr(P_i R_s (x) R_t) for the
/// trace-1 sub-ensemble of row r; each row sums to 1 and the weighted column
/// sums are the Born probabilities.
struct ContributionTable {
    std::string input;
    std::array<ContributionRow, 4> rows;
    std::array<double, 4> born;  ///< directly computed tr(P_i rho)

    /// sum_r weight_r * entry(r, i)
    [[nodiscard]] std::array<double, 4> weighted_column_sums() const;
};

ContributionTable contribution_table(Preparation a, Preparation b);
ContributionTable contribution_table(const EtaBasis &basis, Preparation a, Preparation b);

/// Expected table for input 00, rows (0+;0+), (0+;0-), (0-;0+), (0-;0-).
inline constexpr std::array<std::array<double, 4>, 4> kReferenceTableZeroZero{{
    {0.25, 0.25, 0.25, 0.25},
    {-0.25, 0.75, -0.25, 0.75},
    {-0.25, -0.25, 0.75, 0.75},
    {0.25, 0.25, 0.25, 0.25},
}};

struct ParadoxCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct InputAnalysis {
    std::string input;
    std::optional<int> excluded_outcome;
    double born_probability;  ///< of the excluded outcome; NaN when there is none
    ContributionTable table;
    /// Per row, the 1-based outcomes receiving a negative contribution.
    std::array<std::vector<int>, 4> negatives;
    /// Rows contributing negatively to the excluded outcome.
    std::vector<std::string> negative_contributors;
    /// Contribution of the common row (0+;0+) to each outcome.
    std::array<double, 4> common_row;
};

struct ParadoxReport {
    std::vector<ParadoxCheck> checks;
    std::vector<InputAnalysis> inputs;

    [[nodiscard]] bool passed() const;
};

ParadoxReport verify_paradox();
ParadoxReport verify_paradox(const EtaDefinition &definition);

} // namespace quasiprob
