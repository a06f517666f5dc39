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
#include "quasiprob/pbr_scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "quasiprob/error.hpp"
#include "quasiprob/subensemble.hpp"

namespace quasiprob {

namespace {

void require_outcome(int outcome) {
    if (outcome < 1 || outcome > static_cast<int>(kEtaOutcomes)) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "outcome " + std::to_string(outcome) + " is outside 1..4");
    }
}

template <typename T, typename F> std::array<T, 4> make_array4(F &&f) {
    return {f(0), f(1), f(2), f(3)};
}

std::string pair_label(const InputPair &p) {
    return std::string{to_char(p.first), to_char(p.second)};
}

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(3);
    s << v;
    return s.str();
}

} // namespace

EtaDefinition eta_definition() {
    const double q = 0.25;
    return {
        PauliExpansion::from_terms(2, {{"II", q}, {"XX", q}, {"ZZ", -q}, {"YY", q}}),
        PauliExpansion::from_terms(2, {{"II", q}, {"XZ", q}, {"ZX", -q}, {"YY", -q}}),
        PauliExpansion::from_terms(2, {{"II", q}, {"XZ", -q}, {"ZX", q}, {"YY", -q}}),
        PauliExpansion::from_terms(2, {{"II", q}, {"XX", -q}, {"ZZ", q}, {"YY", q}}),
    };
}

ComplexMatrix eta_projector(int i) {
    require_outcome(i);
    return pauli_synthesize(eta_definition()[static_cast<std::size_t>(i - 1)]);
}

EtaBasis::EtaBasis(EtaDefinition definition, std::array<ComplexMatrix, 4> projectors,
                   std::array<Ket, 4> kets)
    : definition_(std::move(definition)), projectors_(std::move(projectors)),
      kets_(std::move(kets)) {}

EtaBasis EtaBasis::from_definition(const EtaDefinition &definition) {
    for (const auto &e : definition) {
        if (e.qubits() != 2) {
            throw Error(ErrorCode::DimensionMismatch, "measurement outcomes must be two-qubit");
        }
    }
    auto projectors =
        make_array4<ComplexMatrix>([&](std::size_t i) { return pauli_synthesize(definition[i]); });
    auto kets = make_array4<Ket>([&](std::size_t i) { return dominant_eigenvector(projectors[i]); });
    EtaBasis basis(definition, std::move(projectors), std::move(kets));

    auto &c = basis.checks_;
    const auto identity = ComplexMatrix::identity(4);
    ComplexMatrix sum(4);
    for (std::size_t i = 0; i < kEtaOutcomes; ++i) {
        const auto &p = basis.projectors_[i];
        c.rank_one_error = std::max({c.rank_one_error, (p * p).max_abs_diff(p),
                                     p.max_abs_diff(p.adjoint()),
                                     std::abs(p.trace() - Complex{1.0, 0.0})});
        for (std::size_t j = i + 1; j < kEtaOutcomes; ++j) {
            c.orthogonality_error = std::max(
                c.orthogonality_error, (p * basis.projectors_[j]).max_abs_diff(ComplexMatrix(4)));
        }
        c.ket_error = std::max(c.ket_error, projector(basis.kets_[i]).max_abs_diff(p));
        sum = sum + p;
    }
    c.completeness_error = sum.max_abs_diff(identity);

    for (int outcome = 1; outcome <= static_cast<int>(kEtaOutcomes); ++outcome) {
        std::vector<InputPair> zeros;
        for (const auto &in : all_pbr_inputs()) {
            if (std::abs(basis.born_probability(outcome, in.first, in.second)) <= kTolerance) {
                zeros.emplace_back(in.first, in.second);
            }
        }
        if (zeros.size() == 1) {
            basis.excluded_.emplace_back(outcome, zeros.front());
        }
    }
    return basis;
}

std::optional<InputPair> EtaBasis::excluded_input(int outcome) const {
    for (const auto &[o, in] : excluded_) {
        if (o == outcome) {
            return in;
        }
    }
    return std::nullopt;
}

double EtaBasis::born_probability(int outcome, Preparation a, Preparation b) const {
    require_outcome(outcome);
    const auto rho = pbr_input(a, b).density;
    return (projectors_[static_cast<std::size_t>(outcome - 1)] * rho).trace().real();
}

EtaBasis eta_basis() {
    auto basis = EtaBasis::from_definition(eta_definition());
    if (!basis.checks().passed() || basis.excluded_inputs().size() != kEtaOutcomes) {
        throw Error(ErrorCode::InternalConsistency,
                    "canonical measurement basis failed its rank, orthogonality, "
                    "completeness or exclusion checks");
    }
    return basis;
}

double outcome_probability(int outcome, Preparation a, Preparation b) {
    static const EtaBasis basis = eta_basis();
    return std::clamp(basis.born_probability(outcome, a, b), 0.0, 1.0);
}

std::vector<Assignment> assignment_components(Preparation p) {
    const auto rho = preparation_density(p);
    const bool zero = p == Preparation::Zero;
    const auto basis = zero ? MeasurementBasis::x() : MeasurementBasis::z();
    std::vector<Assignment> out;
    for (auto &m : subensemble_mixture(rho, basis)) {
        out.push_back({zero ? "0" + m.label : m.label + "+", m.weight, std::move(m.op)});
    }
    return out;
}

std::array<double, 4> ContributionTable::weighted_column_sums() const {
    std::array<double, 4> s{};
    for (const auto &row : rows) {
        for (std::size_t i = 0; i < kEtaOutcomes; ++i) {
            s[i] += row.weight * row.entries[i];
        }
    }
    return s;
}

ContributionTable contribution_table(Preparation a, Preparation b) {
    static const EtaBasis basis = eta_basis();
    return contribution_table(basis, a, b);
}

ContributionTable contribution_table(const EtaBasis &basis, Preparation a, Preparation b) {
    const auto first = assignment_components(a);
    const auto second = assignment_components(b);
    if (first.size() != 2 || second.size() != 2) {
        throw Error(ErrorCode::InternalConsistency,
                    "each preparation must split into two assignment components");
    }
    ContributionTable table{pbr_input(a, b).label(), {}, {}};
    std::size_t r = 0;
    for (const auto &s : first) {
        for (const auto &t : second) {
            const auto product = tensor(s.op, t.op);
            auto &row = table.rows[r++];
            row.label = s.label + ";" + t.label;
            row.weight = s.weight * t.weight;
            for (std::size_t i = 0; i < kEtaOutcomes; ++i) {
                row.entries[i] = (basis.projectors()[i] * product).trace().real();
            }
        }
    }
    for (std::size_t i = 0; i < kEtaOutcomes; ++i) {
        table.born[i] = basis.born_probability(static_cast<int>(i + 1), a, b);
    }
    return table;
}

bool ParadoxReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.passed; });
}

ParadoxReport verify_paradox() { return verify_paradox(eta_definition()); }

ParadoxReport verify_paradox(const EtaDefinition &definition) {
    const auto basis = EtaBasis::from_definition(definition);
    const auto &bc = basis.checks();
    ParadoxReport report;
    const auto check = [&report](std::string name, bool ok, std::string detail) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    check("projectors are rank-1", bc.rank_one_error <= kTolerance,
          "max error " + fmt(bc.rank_one_error));
    check("projectors are mutually orthogonal", bc.orthogonality_error <= kTolerance,
          "max error " + fmt(bc.orthogonality_error));
    check("projectors sum to identity", bc.completeness_error <= kTolerance,
          "max error " + fmt(bc.completeness_error));
    check("kets reproduce projectors", bc.ket_error <= kTolerance,
          "max error " + fmt(bc.ket_error));

    const auto &excluded = basis.excluded_inputs();
    check("each outcome excludes exactly one input", excluded.size() == kEtaOutcomes,
          std::to_string(excluded.size()) + " of 4 outcomes have a unique zero");
    std::vector<std::string> excluded_labels;
    for (const auto &[o, in] : excluded) {
        excluded_labels.push_back(pair_label(in));
    }
    std::sort(excluded_labels.begin(), excluded_labels.end());
    const bool bijective =
        excluded.size() == kEtaOutcomes &&
        std::adjacent_find(excluded_labels.begin(), excluded_labels.end()) == excluded_labels.end();
    check("exclusion map is a bijection", bijective,
          bijective ? "every input excluded once" : "inputs repeated or missing");
    const auto first = basis.excluded_input(1);
    const bool first_ok = first && *first == InputPair{Preparation::Zero, Preparation::Zero};
    check("outcome 1 excludes input 00", first_ok,
          first ? "outcome 1 excludes " + pair_label(*first) : "outcome 1 has no unique zero");

    bool rows_ok = true;
    bool flat_ok = true;
    bool zeros_ok = true;
    bool negatives_ok = true;
    double bridge_error = 0.0;
    for (const auto &in : all_pbr_inputs()) {
        InputAnalysis a{in.label(),
                        std::nullopt,
                        std::numeric_limits<double>::quiet_NaN(),
                        contribution_table(basis, in.first, in.second),
                        {},
                        {},
                        {}};
        for (const auto &[o, ex] : excluded) {
            if (ex == InputPair{in.first, in.second}) {
                a.excluded_outcome = o;
                a.born_probability = a.table.born[static_cast<std::size_t>(o - 1)];
            }
        }
        const auto sums = a.table.weighted_column_sums();
        for (std::size_t i = 0; i < kEtaOutcomes; ++i) {
            bridge_error = std::max(bridge_error, std::abs(sums[i] - a.table.born[i]));
        }
        for (std::size_t r = 0; r < a.table.rows.size(); ++r) {
            const auto &row = a.table.rows[r];
            double total = 0.0;
            for (std::size_t i = 0; i < kEtaOutcomes; ++i) {
                total += row.entries[i];
                if (row.entries[i] < -kTolerance) {
                    a.negatives[r].push_back(static_cast<int>(i + 1));
                }
            }
            rows_ok = rows_ok && std::abs(total - 1.0) <= kTolerance;
            if (a.excluded_outcome &&
                row.entries[static_cast<std::size_t>(*a.excluded_outcome - 1)] < -kTolerance) {
                a.negative_contributors.push_back(row.label);
            }
        }
        a.common_row = a.table.rows[0].entries;
        for (double v : a.common_row) {
            flat_ok = flat_ok && std::abs(v - 0.25) <= kTolerance;
        }
        flat_ok = flat_ok && a.table.rows[0].label == "0+;0+";
        zeros_ok = zeros_ok && a.excluded_outcome && std::abs(a.born_probability) <= kTolerance;
        negatives_ok = negatives_ok && !a.negative_contributors.empty();
        report.inputs.push_back(std::move(a));
    }

    double reference_error = 0.0;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t i = 0; i < kEtaOutcomes; ++i) {
            reference_error =
                std::max(reference_error, std::abs(report.inputs[0].table.rows[r].entries[i] -
                                                   kReferenceTableZeroZero[r][i]));
        }
    }
    check("input 00 table matches reference values", reference_error <= kTolerance,
          "max error " + fmt(reference_error));
    check("excluded outcomes have zero probability", zeros_ok,
          zeros_ok ? "all four inputs" : "missing or nonzero");
    check("sub-ensemble rows sum to 1", rows_ok, rows_ok ? "all rows" : "row sum off");
    check("weighted column sums equal Born probabilities", bridge_error <= kTolerance,
          "max error " + fmt(bridge_error));
    check("common sub-ensemble (0+;0+) contributes 1/4 to every outcome", flat_ok,
          flat_ok ? "all four inputs" : "row deviates");
    check("zero outcomes carry negative sub-ensemble contributions", negatives_ok,
          negatives_ok ? "all four inputs" : "missing negative contributor");
    return report;
}

} // namespace quasiprob
