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
#include "quasiprob/subensemble.hpp"

#include <cmath>
#include <sstream>

#include "quasiprob/error.hpp"
#include "quasiprob/states.hpp"

namespace quasiprob {

MeasurementBasis::MeasurementBasis(std::vector<Ket> kets, std::vector<std::string> labels,
                                   std::string name)
    : kets_(std::move(kets)), labels_(std::move(labels)), name_(std::move(name)) {
    projectors_.reserve(kets_.size());
    for (const auto &k : kets_) {
        projectors_.push_back(quasiprob::projector(k));
    }
}

MeasurementBasis MeasurementBasis::from_kets(std::vector<Ket> kets,
                                             std::vector<std::string> labels,
                                             std::string name) {
    if (kets.empty()) {
        throw Error(ErrorCode::InvalidBasis, "basis has no vectors");
    }
    const std::size_t dim = kets.front().dim();
    if (kets.size() != dim) {
        throw Error(ErrorCode::InvalidBasis, "basis has " + std::to_string(kets.size()) +
                                                 " vectors in dimension " +
                                                 std::to_string(dim));
    }
    for (std::size_t i = 0; i < kets.size(); ++i) {
        if (kets[i].dim() != dim) {
            throw Error(ErrorCode::InvalidBasis,
                        "basis vector " + std::to_string(i) + " has dimension " +
                            std::to_string(kets[i].dim()));
        }
        if (std::abs(kets[i].norm_squared() - 1.0) > kTolerance) {
            std::ostringstream msg;
            msg << "basis vector " << i << " has squared norm " << kets[i].norm_squared();
            throw Error(ErrorCode::InvalidBasis, msg.str());
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (std::abs(inner(kets[j], kets[i])) > kTolerance) {
                throw Error(ErrorCode::InvalidBasis, "basis vectors " + std::to_string(j) +
                                                         " and " + std::to_string(i) +
                                                         " are not orthogonal");
            }
        }
    }
    if (labels.empty()) {
        for (std::size_t i = 0; i < kets.size(); ++i) {
            labels.push_back("f" + std::to_string(i));
        }
    } else if (labels.size() != kets.size()) {
        throw Error(ErrorCode::InvalidBasis, "label count does not match basis size");
    }
    MeasurementBasis basis(std::move(kets), std::move(labels), std::move(name));
    ComplexMatrix sum(dim);
    for (const auto &p : basis.projectors_) {
        sum = sum + p;
    }
    if (!sum.approx_equal(ComplexMatrix::identity(dim))) {
        throw Error(ErrorCode::InvalidBasis, "basis projectors do not sum to the identity");
    }
    return basis;
}

MeasurementBasis MeasurementBasis::exact(std::vector<Ket> kets,
                                         std::vector<ComplexMatrix> projectors,
                                         std::vector<std::string> labels, std::string name) {
    auto basis = from_kets(std::move(kets), std::move(labels), std::move(name));
    for (std::size_t f = 0; f < projectors.size(); ++f) {
        if (!projectors[f].approx_equal(basis.projectors_[f])) {
            throw Error(ErrorCode::InternalConsistency,
                        "exact projector disagrees with its ket in basis " + basis.name_);
        }
    }
    basis.projectors_ = std::move(projectors);
    return basis;
}

MeasurementBasis MeasurementBasis::z() {
    return exact({standard_ket("0"), standard_ket("1")},
                 {bloch_to_density({0.0, 0.0, 1.0}), bloch_to_density({0.0, 0.0, -1.0})},
                 {"0", "1"}, "Z");
}

MeasurementBasis MeasurementBasis::x() {
    return exact({standard_ket("+"), standard_ket("-")},
                 {bloch_to_density({1.0, 0.0, 0.0}), bloch_to_density({-1.0, 0.0, 0.0})},
                 {"+", "-"}, "X");
}

MeasurementBasis MeasurementBasis::named(std::string_view name) {
    if (name == "Z") {
        return z();
    }
    if (name == "X") {
        return x();
    }
    throw Error(ErrorCode::UnknownLabel,
                "unknown basis name '" + std::string(name) + "' (expected Z or X)");
}

void require_density_matrix(const ComplexMatrix &rho) {
    if (!rho.is_hermitian()) {
        throw Error(ErrorCode::InvalidDensity, "state is not Hermitian");
    }
    const Complex tr = rho.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > kTolerance) {
        std::ostringstream msg;
        msg << "state has trace " << tr.real() << ", expected 1";
        throw Error(ErrorCode::InvalidDensity, msg.str());
    }
    const double lowest = rho.hermitian_eigenvalues().front();
    if (lowest < -kPsdTolerance) {
        std::ostringstream msg;
        msg << "state has negative eigenvalue " << lowest;
        throw Error(ErrorCode::InvalidDensity, msg.str());
    }
}

std::vector<SubensembleOperator> decompose(const ComplexMatrix &rho,
                                           const MeasurementBasis &basis) {
    if (rho.dim() != basis.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "state dimension " + std::to_string(rho.dim()) +
                        " does not match basis dimension " + std::to_string(basis.dim()));
    }
    require_density_matrix(rho);
    std::vector<SubensembleOperator> out;
    out.reserve(basis.size());
    for (std::size_t f = 0; f < basis.size(); ++f) {
        ComplexMatrix r = symmetric_product(rho, basis.projector(f));
        const double w = r.trace().real();
        out.push_back({std::move(r), w, f, basis.labels()[f]});
    }
    return out;
}

ComplexMatrix assignment_operator(const ComplexMatrix &pa, const ComplexMatrix &pb) {
    if (pa.dim() != pb.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "assignment operator: projector dimensions " +
                                                      std::to_string(pa.dim()) + " and " +
                                                      std::to_string(pb.dim()));
    }
    for (const auto *p : {&pa, &pb}) {
        if (!is_projector(*p) || std::abs(p->trace() - Complex{1.0, 0.0}) > kTolerance) {
            throw Error(ErrorCode::InvalidBasis,
                        "assignment operator needs rank-1 projectors");
        }
    }
    const ComplexMatrix s = symmetric_product(pa, pb);
    const double tr = s.trace().real();
    if (tr <= kTolerance) {
        throw Error(ErrorCode::OrthogonalProjectors,
                    "projectors are orthogonal; joint assignment is undefined");
    }
    return (1.0 / tr) * s;
}

JointQuasiDistribution::JointQuasiDistribution(MeasurementBasis a, MeasurementBasis b,
                                               std::vector<std::vector<double>> q)
    : a_(std::move(a)), b_(std::move(b)), q_(std::move(q)) {
    if (q_.size() != a_.size()) {
        throw Error(ErrorCode::DimensionMismatch, "row count does not match basis A");
    }
    for (const auto &row : q_) {
        if (row.size() != b_.size()) {
            throw Error(ErrorCode::DimensionMismatch, "column count does not match basis B");
        }
    }
}

std::vector<double> JointQuasiDistribution::marginal_a() const {
    std::vector<double> m(q_.size(), 0.0);
    for (std::size_t i = 0; i < q_.size(); ++i) {
        for (double v : q_[i]) {
            m[i] += v;
        }
    }
    return m;
}

std::vector<double> JointQuasiDistribution::marginal_b() const {
    std::vector<double> m(b_.size(), 0.0);
    for (const auto &row : q_) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            m[j] += row[j];
        }
    }
    return m;
}

double JointQuasiDistribution::total() const {
    double s = 0.0;
    for (double v : marginal_a()) {
        s += v;
    }
    return s;
}

JointQuasiDistribution mh_joint(const ComplexMatrix &rho, const MeasurementBasis &basis_a,
                                const MeasurementBasis &basis_b) {
    if (basis_a.dim() != basis_b.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "bases have different dimensions");
    }
    const auto parts = decompose(rho, basis_a);
    std::vector<std::vector<double>> q(basis_a.size(), std::vector<double>(basis_b.size()));
    for (std::size_t ia = 0; ia < parts.size(); ++ia) {
        for (std::size_t ib = 0; ib < basis_b.size(); ++ib) {
            q[ia][ib] = (basis_b.projector(ib) * parts[ia].op).trace().real();
        }
    }
    return {basis_a, basis_b, std::move(q)};
}

double negativity(std::span<const double> values) {
    double s = 0.0;
    for (double v : values) {
        if (v < 0.0) {
            s -= v;
        }
    }
    return s;
}

double negativity(const JointQuasiDistribution &d) {
    double s = 0.0;
    for (const auto &row : d.values()) {
        s += negativity(row);
    }
    return s;
}

std::vector<MixtureComponent> subensemble_mixture(const ComplexMatrix &rho,
                                                  const MeasurementBasis &basis) {
    std::vector<MixtureComponent> out;
    for (auto &part : decompose(rho, basis)) {
        if (std::abs(part.weight) <= kTolerance) {
            continue;
        }
        out.push_back({part.outcome, part.label, part.weight, (1.0 / part.weight) * part.op});
    }
    return out;
}

} // namespace quasiprob
