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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quasiprob/complex_matrix.hpp"
#include "quasiprob/ket.hpp"

namespace quasiprob {

/// Complete orthonormal set of rank-1 outcomes {|f>}.
class MeasurementBasis {
  public:
    /// Validates unit norm, pairwise orthogonality and completeness within
    /// kTolerance; throws InvalidBasis otherwise. Missing labels default to
    /// "f0", "f1", ...
    static MeasurementBasis from_kets(std::vector<Ket> kets,
                                      std::vector<std::string> labels = {},
                                      std::string name = {});
    /// {|0>, |1>}, named "Z".
    static MeasurementBasis z();
    /// {|+>, |->}, named "X".
    static MeasurementBasis x();
    /// "Z" or "X". Throws UnknownLabel.
    static MeasurementBasis named(std::string_view name);

    [[nodiscard]] std::size_t dim() const noexcept { return kets_.front().dim(); }
    [[nodiscard]] std::size_t size() const noexcept { return kets_.size(); }
    [[nodiscard]] const std::vector<Ket> &kets() const noexcept { return kets_; }
    [[nodiscard]] const std::vector<std::string> &labels() const noexcept { return labels_; }
    [[nodiscard]] const ComplexMatrix &projector(std::size_t f) const {
        return projectors_.at(f);
    }
    /// Empty for bases supplied as explicit vectors.
    [[nodiscard]] const std::string &name() const noexcept { return name_; }

  private:
    MeasurementBasis(std::vector<Ket> kets, std::vector<std::string> labels,
                     std::string name);
    /// Named bases carry exact Pauli-form projectors instead of |f><f|.
    static MeasurementBasis exact(std::vector<Ket> kets, std::vector<ComplexMatrix> projectors,
                                  std::vector<std::string> labels, std::string name);

    std::vector<Ket> kets_;
    std::vector<std::string> labels_;
    std::vector<ComplexMatrix> projectors_;
    std::string name_;
};

/// One term R_f = (rho |f><f| + |f><f| rho) / 2 of the decomposition of a
/// state into outcome sub-ensembles.
struct SubensembleOperator {
    ComplexMatrix op;
    double weight;        ///< tr(R_f), equal to the Born probability <f|rho|f>
    std::size_t outcome;  ///< index into the basis
    std::string label;
};

/// Throws InvalidDensity, DimensionMismatch.
void require_density_matrix(const ComplexMatrix &rho);

/// Sum over the result reproduces rho.
/// Throws InvalidDensity or DimensionMismatch.
std::vector<SubensembleOperator> decompose(const ComplexMatrix &rho,
                                           const MeasurementBasis &basis);

/// Trace-normalised symmetric product of two rank-1 projectors: the operator
/// assigning both outcomes at once. For a Z eigenprojector and an X
/// eigenprojector this is (I +- X +- Z) / 2.
/// Throws OrthogonalProjectors when tr(pa pb) <= kTolerance,
/// InvalidBasis when either input is not a rank-1 projector.
ComplexMatrix assignment_operator(const ComplexMatrix &pa, const ComplexMatrix &pb);

/// Margenau-Hill joint quasi-probabilities q(a, b) = Re tr(P_b P_a rho).
/// Entries can be negative; both marginals are Born distributions.
class JointQuasiDistribution {
  public:
    JointQuasiDistribution(MeasurementBasis a, MeasurementBasis b,
                           std::vector<std::vector<double>> q);

    [[nodiscard]] const MeasurementBasis &basis_a() const noexcept { return a_; }
    [[nodiscard]] const MeasurementBasis &basis_b() const noexcept { return b_; }
    [[nodiscard]] double operator()(std::size_t ia, std::size_t ib) const {
        return q_.at(ia).at(ib);
    }
    [[nodiscard]] const std::vector<std::vector<double>> &values() const noexcept {
        return q_;
    }
    /// sum_b q(a, b)
    [[nodiscard]] std::vector<double> marginal_a() const;
    /// sum_a q(a, b)
    [[nodiscard]] std::vector<double> marginal_b() const;
    [[nodiscard]] double total() const;

  private:
    MeasurementBasis a_;
    MeasurementBasis b_;
    std::vector<std::vector<double>> q_;
};

/// Decomposes rho over basis_a, then projects each sub-ensemble onto basis_b.
JointQuasiDistribution mh_joint(const ComplexMatrix &rho, const MeasurementBasis &basis_a,
                                const MeasurementBasis &basis_b);

/// Sum of max(0, -q) over all entries.
double negativity(std::span<const double> values);
double negativity(const JointQuasiDistribution &d);

/// rho written as a mixture of trace-1 sub-ensemble operators R_f / w_f over
/// the outcomes of `basis` that carry non-zero weight.
struct MixtureComponent {
    std::size_t outcome;
    std::string label;
    double weight;
    ComplexMatrix op;
};

std::vector<MixtureComponent> subensemble_mixture(const ComplexMatrix &rho,
                                                  const MeasurementBasis &basis);

} // namespace quasiprob
