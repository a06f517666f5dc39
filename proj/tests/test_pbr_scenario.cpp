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
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "quasiprob/error.hpp"
#include "quasiprob/pbr_scenario.hpp"
#include "quasiprob/subensemble.hpp"
#include "support/oracle.hpp"

using namespace quasiprob;

namespace {

using P = Preparation;

// Outcome projectors written out from their Pauli sums with the loop oracle.
oracle::Mat eta_oracle(int i) {
    const double q = 0.25;
    switch (i) {
    case 1:
        return oracle::pauli_sum(2, {{"II", q}, {"XX", q}, {"ZZ", -q}, {"YY", q}});
    case 2:
        return oracle::pauli_sum(2, {{"II", q}, {"XZ", q}, {"ZX", -q}, {"YY", -q}});
    case 3:
        return oracle::pauli_sum(2, {{"II", q}, {"XZ", -q}, {"ZX", q}, {"YY", -q}});
    default:
        return oracle::pauli_sum(2, {{"II", q}, {"XX", -q}, {"ZZ", q}, {"YY", q}});
    }
}

oracle::Mat rho_oracle(P p) {
    return oracle::pauli_sum(1, {{"I", 0.5}, {p == P::Zero ? "Z" : "X", 0.5}});
}

// Trace-1 assignment operators (I +- X +- Z)/2, typed in directly.
oracle::Mat assignment_oracle(std::string_view label) {
    const double sz = label[0] == '0' ? 0.5 : -0.5;
    const double sx = label[1] == '+' ? 0.5 : -0.5;
    return oracle::pauli_sum(1, {{"I", 0.5}, {"X", sx}, {"Z", sz}});
}

double born_oracle(int i, P a, P b) {
    return oracle::trace(oracle::mul(eta_oracle(i), oracle::kron(rho_oracle(a), rho_oracle(b))))
        .real();
}

} // namespace

TEST_SUITE("pbr-scenario") {

TEST_CASE("eta projectors") {
    for (int i = 1; i <= 4; ++i) {
        const auto p = eta_projector(i);
        CHECK(oracle::max_diff(eta_oracle(i), p) <= kTolerance);
        CHECK(is_projector(p));
        CHECK(std::abs(p.trace() - Complex{1.0, 0.0}) <= kTolerance);
    }
    CHECK(pauli_expand(eta_projector(1))
              .approx_equal(PauliExpansion::from_terms(
                  2, {{"II", 0.25}, {"XX", 0.25}, {"ZZ", -0.25}, {"YY", 0.25}})));
    CHECK(pauli_expand(eta_projector(4))
              .approx_equal(PauliExpansion::from_terms(
                  2, {{"II", 0.25}, {"XX", -0.25}, {"ZZ", 0.25}, {"YY", 0.25}})));
    for (int bad : {0, 5, -1}) {
        try {
            eta_projector(bad);
            FAIL("expected IndexOutOfRange");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::IndexOutOfRange);
        }
    }
}

TEST_CASE("eta basis is complete, orthogonal, and rank-1 with matching kets") {
    const auto basis = eta_basis();
    CHECK(basis.checks().passed());
    ComplexMatrix sum(4);
    for (std::size_t i = 0; i < 4; ++i) {
        sum = sum + basis.projectors()[i];
        for (std::size_t j = 0; j < 4; ++j) {
            const auto overlap = std::abs(inner(basis.kets()[i], basis.kets()[j]));
            CHECK(std::abs(overlap - (i == j ? 1.0 : 0.0)) <= kTolerance);
        }
        CHECK(projector(basis.kets()[i]).approx_equal(basis.projectors()[i]));
        // canonical phase: first significant amplitude real and positive
        const auto &amps = basis.kets()[i].amplitudes();
        const auto lead = *std::find_if(amps.begin(), amps.end(),
                                        [](Complex a) { return std::abs(a) > kTolerance; });
        CHECK(lead.imag() == 0.0);
        CHECK(lead.real() > 0.0);
    }
    CHECK(sum.approx_equal(ComplexMatrix::identity(4)));
    // outcome 1 is the symmetric Bell state (|01> + |10>)/sqrt2
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(basis.kets()[0].approx_equal(Ket{0.0, h, h, 0.0}));
}

TEST_CASE("exclusion map is derived and bijective") {
    const auto basis = eta_basis();
    const std::pair<int, InputPair> expected[] = {
        {1, {P::Zero, P::Zero}}, {2, {P::Zero, P::Plus}}, {3, {P::Plus, P::Zero}}, {4, {P::Plus, P::Plus}}};
    REQUIRE(basis.excluded_inputs().size() == 4);
    std::set<std::pair<P, P>> seen;
    for (const auto &[outcome, input] : expected) {
        const auto got = basis.excluded_input(outcome);
        REQUIRE(got.has_value());
        CHECK(*got == input);
        seen.insert(*got);
        CHECK(std::abs(born_oracle(outcome, input.first, input.second)) <= kTolerance);
    }
    CHECK(seen.size() == 4);
    // every other input has strictly positive probability
    for (int i = 1; i <= 4; ++i) {
        int zeros = 0;
        for (const auto &in : all_pbr_inputs()) {
            zeros += outcome_probability(i, in.first, in.second) <= kTolerance ? 1 : 0;
        }
        CHECK(zeros == 1);
    }
}

TEST_CASE("outcome probabilities") {
    CHECK(outcome_probability(1, P::Zero, P::Zero) == 0.0);
    CHECK(std::abs(outcome_probability(2, P::Zero, P::Zero) - 0.25) <= kTolerance);
    CHECK(std::abs(outcome_probability(1, P::Plus, P::Plus) - 0.5) <= kTolerance);
    for (const auto &in : all_pbr_inputs()) {
        double total = 0.0;
        for (int i = 1; i <= 4; ++i) {
            const double p = outcome_probability(i, in.first, in.second);
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
            CHECK(std::abs(p - std::max(0.0, born_oracle(i, in.first, in.second))) <= kTolerance);
            total += p;
        }
        CHECK(std::abs(total - 1.0) <= kTolerance);
    }
    CHECK_THROWS_AS(outcome_probability(0, P::Zero, P::Zero), Error);
}

TEST_CASE("assignment components of the preparations") {
    const auto zero = assignment_components(P::Zero);
    const auto plus = assignment_components(P::Plus);
    REQUIRE(zero.size() == 2);
    REQUIRE(plus.size() == 2);
    CHECK(zero[0].label == "0+");
    CHECK(zero[1].label == "0-");
    CHECK(plus[0].label == "0+");
    CHECK(plus[1].label == "1+");
    for (const auto *set : {&zero, &plus}) {
        for (const auto &c : *set) {
            CHECK(std::abs(c.weight - 0.5) <= kTolerance);
            CHECK(oracle::max_diff(assignment_oracle(c.label), c.op) <= kTolerance);
        }
    }
}

TEST_CASE("contribution table for input 00 matches the reference values") {
    const auto t = contribution_table(P::Zero, P::Zero);
    CHECK(t.input == "00");
    const char *labels[] = {"0+;0+", "0+;0-", "0-;0+", "0-;0-"};
    for (std::size_t r = 0; r < 4; ++r) {
        CHECK(t.rows[r].label == labels[r]);
        CHECK(t.rows[r].weight == 0.25);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(std::abs(t.rows[r].entries[i] - kReferenceTableZeroZero[r][i]) <= kTolerance);
        }
    }
    CHECK(t.rows[1].entries == std::array<double, 4>{-0.25, 0.75, -0.25, 0.75});
    CHECK(t.rows[2].entries == std::array<double, 4>{-0.25, -0.25, 0.75, 0.75});
    // negativity of the raw table: four entries at -1/4
    double neg = 0.0;
    for (const auto &row : t.rows) {
        neg += negativity(row.entries);
    }
    CHECK(neg == 1.0);
}

TEST_CASE("contribution tables agree with the loop oracle for every input") {
    for (const auto &in : all_pbr_inputs()) {
        const auto t = contribution_table(in.first, in.second);
        const auto sums = t.weighted_column_sums();
        for (const auto &row : t.rows) {
            const auto s = row.label.substr(0, 2);
            const auto u = row.label.substr(3, 2);
            const auto product = oracle::kron(assignment_oracle(s), assignment_oracle(u));
            double total = 0.0;
            for (int i = 1; i <= 4; ++i) {
                const double ref = oracle::trace(oracle::mul(eta_oracle(i), product)).real();
                CHECK(std::abs(row.entries[static_cast<std::size_t>(i - 1)] - ref) <= kTolerance);
                total += row.entries[static_cast<std::size_t>(i - 1)];
            }
            CHECK(std::abs(total - 1.0) <= kTolerance);
        }
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(std::abs(sums[i] - t.born[i]) <= kTolerance);
            CHECK(std::abs(t.born[i] - born_oracle(static_cast<int>(i + 1), in.first, in.second)) <=
                  kTolerance);
        }
        CHECK(t.rows[0].label == "0+;0+");
        for (double v : t.rows[0].entries) {
            CHECK(std::abs(v - 0.25) <= kTolerance);
        }
    }
}

TEST_CASE("verify_paradox on the canonical scenario") {
    const auto report = verify_paradox();
    for (const auto &c : report.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.passed);
    }
    CHECK(report.passed());
    REQUIRE(report.inputs.size() == 4);

    const auto &first = report.inputs[0];
    CHECK(first.input == "00");
    REQUIRE(first.excluded_outcome.has_value());
    CHECK(*first.excluded_outcome == 1);
    CHECK(std::abs(first.born_probability) <= kTolerance);
    CHECK(first.negative_contributors == std::vector<std::string>{"0+;0-", "0-;0+"});
    CHECK(first.negatives[1] == std::vector<int>{1, 3});
    CHECK(first.negatives[2] == std::vector<int>{1, 2});
    CHECK(first.negatives[0].empty());

    const auto &last = report.inputs[3];
    CHECK(last.input == "++");
    CHECK(*last.excluded_outcome == 4);
    CHECK(std::abs(last.common_row[3] - 0.25) <= kTolerance);

    for (const auto &in : report.inputs) {
        CHECK(std::abs(in.born_probability) <= kTolerance);
        CHECK(in.negative_contributors.size() == 2);
    }
}

TEST_CASE("verify_paradox fails when any outcome coefficient is perturbed") {
    const auto canonical = eta_definition();
    int perturbations = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (const auto &[pauli, c] : canonical[i].coeffs()) {
            for (double delta : {0.01, -0.01}) {
                auto defs = canonical;
                auto coeffs = defs[i].coeffs();
                coeffs[pauli] = c + delta;
                defs[i] = PauliExpansion(2, coeffs);
                INFO("outcome " << i + 1 << " term " << pauli.str() << " delta " << delta);
                CHECK_FALSE(verify_paradox(defs).passed());
                CHECK_FALSE(EtaBasis::from_definition(defs).checks().passed());
                ++perturbations;
            }
        }
    }
    CHECK(perturbations == 32);
}

TEST_CASE("eta basis rejects non-two-qubit definitions") {
    auto defs = eta_definition();
    defs[2] = PauliExpansion::from_terms(1, {{"I", 0.5}});
    CHECK_THROWS_AS(EtaBasis::from_definition(defs), Error);
}

} // TEST_SUITE
