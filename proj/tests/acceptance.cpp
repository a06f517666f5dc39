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
// Acceptance gate: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "quasiprob/pbr_scenario.hpp"
#include "quasiprob/subensemble.hpp"
#include "support/oracle.hpp"

using namespace quasiprob;

namespace {

constexpr double kExact = 1e-12;
constexpr double kEigen = 1e-9;
constexpr int kRandomCases = 200;

struct Outcome {
    bool passed;
    std::string detail;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

Outcome eq4_reproduction() {
    const auto start = std::chrono::steady_clock::now();
    const auto t = contribution_table(Preparation::Zero, Preparation::Zero);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double err = 0.0;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t i = 0; i < 4; ++i) {
            err = std::max(err, std::abs(t.rows[r].entries[i] - kReferenceTableZeroZero[r][i]));
        }
    }
    const bool labels = t.rows[0].label == "0+;0+" && t.rows[1].label == "0+;0-" &&
                        t.rows[2].label == "0-;0+" && t.rows[3].label == "0-;0-";
    return {err <= kExact && labels && seconds < 1.0,
            "max |entry - reference| " + sci(err) + ", " + sci(seconds) + " s"};
}

Outcome zero_outcomes() {
    const auto basis = eta_basis();
    double worst = 0.0;
    std::set<std::string> inputs;
    for (int i = 1; i <= 4; ++i) {
        const auto in = basis.excluded_input(i);
        if (!in) {
            return {false, "outcome " + std::to_string(i) + " has no unique zero"};
        }
        const auto rho = pbr_input(in->first, in->second);
        worst = std::max(worst, std::abs((basis.projectors()[static_cast<std::size_t>(i - 1)] *
                                          rho.density).trace()));
        inputs.insert(rho.label());
    }
    const auto first = basis.excluded_input(1);
    const bool fixed = first && first->first == Preparation::Zero && first->second == Preparation::Zero;
    return {worst <= kExact && fixed && inputs.size() == 4,
            "max tr(P_i rho_excluded) " + sci(worst) + ", outcome 1 -> 00: " +
                (fixed ? "yes" : "no") + ", distinct inputs " + std::to_string(inputs.size())};
}

Outcome eq1_identity() {
    oracle::Random rng(20261017);
    double recon = 0.0;
    double born = 0.0;
    for (int trial = 0; trial < kRandomCases; ++trial) {
        const std::size_t n = std::size_t{2} << (trial % 3);
        const auto rho_ref = rng.density(n);
        const auto vecs = rng.basis(n);
        const auto rho = oracle::to_lib(rho_ref);
        const auto parts = decompose(rho, MeasurementBasis::from_kets({vecs.begin(), vecs.end()}));
        ComplexMatrix sum(n);
        for (std::size_t f = 0; f < n; ++f) {
            sum = sum + parts[f].op;
            oracle::C p{};
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    p += std::conj(vecs[f][r]) * rho_ref[r][c] * vecs[f][c];
                }
            }
            born = std::max(born, std::abs(parts[f].weight - p.real()));
        }
        recon = std::max(recon, sum.max_abs_diff(rho));
    }
    return {recon <= kExact && born <= kExact,
            std::to_string(kRandomCases) + " cases, dims 2/4/8: max |sum R_f - rho| " + sci(recon) +
                ", max |w_f - Born| " + sci(born)};
}

Outcome eq3_mixtures() {
    const auto r = [&](double sx, double sz) {
        return oracle::to_lib(oracle::pauli_sum(1, {{"I", 0.5}, {"X", 0.5 * sx}, {"Z", 0.5 * sz}}));
    };
    const auto zero = preparation_density(Preparation::Zero);
    const auto plus = preparation_density(Preparation::Plus);
    const double ez = (0.5 * r(1, 1) + 0.5 * r(-1, 1)).max_abs_diff(zero);
    const double ep = (0.5 * r(1, 1) + 0.5 * r(1, -1)).max_abs_diff(plus);
    // the library's own assignment operators must be those same matrices
    const auto p = [](const char *l) { return projector(standard_ket(l)); };
    const double ea = std::max({assignment_operator(p("0"), p("+")).max_abs_diff(r(1, 1)),
                                assignment_operator(p("0"), p("-")).max_abs_diff(r(-1, 1)),
                                assignment_operator(p("1"), p("+")).max_abs_diff(r(1, -1))});
    return {ez <= kExact && ep <= kExact && ea <= kExact,
            "rho(zero) error " + sci(ez) + ", rho(plus) error " + sci(ep) +
                ", assignment operators " + sci(ea)};
}

Outcome negativity_witness() {
    const auto parts = decompose(projector(standard_ket("0")), MeasurementBasis::x());
    const double expected = (1.0 - std::sqrt(2.0)) / 4.0;
    const double lowest = parts[0].op.hermitian_eigenvalues().front();
    const bool shape = parts[0].op.max_abs_diff(oracle::to_lib(oracle::pauli_sum(
                           1, {{"I", 0.25}, {"X", 0.25}, {"Z", 0.25}}))) <= kExact;
    return {std::abs(lowest - expected) <= kEigen && shape,
            "lowest eigenvalue " + std::to_string(lowest) + " (expected " +
                std::to_string(expected) + ")"};
}

Outcome basis_validity() {
    const auto c = eta_basis().checks();
    return {c.rank_one_error <= kExact && c.orthogonality_error <= kExact &&
                c.completeness_error <= kExact,
            "rank-1 " + sci(c.rank_one_error) + ", orthogonality " + sci(c.orthogonality_error) +
                ", completeness " + sci(c.completeness_error)};
}

Outcome consistency_bridge() {
    double err = 0.0;
    for (const auto &in : all_pbr_inputs()) {
        const auto t = contribution_table(in.first, in.second);
        std::array<double, 4> quarter{};
        for (const auto &row : t.rows) {
            for (std::size_t i = 0; i < 4; ++i) {
                quarter[i] += 0.25 * row.entries[i];
            }
        }
        for (int i = 1; i <= 4; ++i) {
            const double direct = (eta_projector(i) * in.density).trace().real();
            err = std::max(err, std::abs(quarter[static_cast<std::size_t>(i - 1)] - direct));
        }
    }
    return {err <= kExact, "max |col_sum/4 - Born| " + sci(err)};
}

Outcome marginal_laws() {
    oracle::Random rng(1111);
    double err = 0.0;
    for (int trial = 0; trial < kRandomCases; ++trial) {
        const std::size_t n = trial % 2 == 0 ? 2 : 4;
        const auto rho = oracle::to_lib(rng.density(n));
        const auto a = MeasurementBasis::from_kets(rng.basis_kets(n));
        const auto b = MeasurementBasis::from_kets(rng.basis_kets(n));
        const auto d = mh_joint(rho, a, b);
        const auto ma = d.marginal_a();
        const auto mb = d.marginal_b();
        for (std::size_t i = 0; i < n; ++i) {
            err = std::max(err, std::abs(ma[i] - (a.projector(i) * rho).trace().real()));
            err = std::max(err, std::abs(mb[i] - (b.projector(i) * rho).trace().real()));
        }
    }
    return {err <= kExact, std::to_string(kRandomCases) + " triples, dims 2/4: max marginal error " +
                               sci(err)};
}

Outcome cli_determinism() {
    const std::pair<std::vector<std::string>, const char *> cases[] = {
        {{"eta"}, "eta.txt"}, {{"table", "--input", "00"}, "table_00.txt"}, {{"verify"}, "verify.txt"}};
    std::string detail;
    bool ok = true;
    for (const auto &[args, file] : cases) {
        std::string outputs[2];
        for (auto &o : outputs) {
            std::ostringstream out;
            std::ostringstream err;
            ok = ok && cli::run(args, out, err) == 0;
            o = out.str();
        }
        std::ifstream in(std::filesystem::path(QUASIPROB_GOLDEN_DIR) / file, std::ios::binary);
        std::ostringstream g;
        g << in.rdbuf();
        const bool same = in.good() && outputs[0] == outputs[1] && outputs[0] == g.str();
        ok = ok && same;
        detail += std::string(detail.empty() ? "" : ", ") + file + (same ? " ok" : " DIFFERS");
    }
    return {ok, detail};
}

} // namespace

int main() {
    const std::pair<const char *, std::function<Outcome()>> criteria[] = {
        {"AC1 contribution table for input 00 reproduced exactly", eq4_reproduction},
        {"AC2 zero-outcome structure and bijective exclusion map", zero_outcomes},
        {"AC3 sub-ensemble reconstruction and Born weights", eq1_identity},
        {"AC4 inputs as equal mixtures of assignment operators", eq3_mixtures},
        {"AC5 negative eigenvalue of the |0>/X sub-ensemble", negativity_witness},
        {"AC6 entangled measurement is a rank-1 complete basis", basis_validity},
        {"AC7 quarter column sums equal Born probabilities", consistency_bridge},
        {"AC8 joint quasi-probability marginals", marginal_laws},
        {"AC9 CLI golden-file determinism", cli_determinism},
    };
    int failures = 0;
    for (const auto &[name, check] : criteria) {
        Outcome o{false, ""};
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %s: %s\n", o.passed ? "PASS" : "FAIL", name, o.detail.c_str());
        failures += o.passed ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
                std::size(criteria));
    return failures == 0 ? 0 : 1;
}
