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
#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "quasiprob/error.hpp"
#include "quasiprob/io.hpp"
#include "quasiprob/report.hpp"
#include "quasiprob/subensemble.hpp"

namespace quasiprob::cli {

namespace {

// Inputs that come from files: any failure while loading or validating them
// is a malformed-input error, whatever the library's error code.
template <typename F> auto load(F &&f) {
    try {
        return f();
    } catch (const Error &e) {
        throw Error(ErrorCode::MalformedInput, e.what());
    }
}

MeasurementBasis basis_argument(const std::string &value) {
    if (value == "Z" || value == "X") {
        return MeasurementBasis::named(value);
    }
    return load([&] { return io::basis_from_json(io::read_json_file(value)); });
}

ComplexMatrix state_argument(const std::string &path) {
    return load([&] {
        auto rho = io::state_from_json(io::read_json_file(path));
        require_density_matrix(rho);
        return rho;
    });
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
        const EtaDefinition &definition) {
    CLI::App app{"Sub-ensemble decompositions and joint quasi-probabilities", "quasiprob"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "pretty";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));

    std::string input = "00";
    std::string state_path;
    std::string basis_name;
    std::string basis_a = "Z";
    std::string basis_b = "X";

    auto *eta = app.add_subcommand("eta", "Print the four-outcome entangled measurement");
    auto *prob = app.add_subcommand("prob", "Outcome probabilities for a product input");
    prob->add_option("--input", input, "00, 0+, +0 or ++")->required();
    auto *table = app.add_subcommand("table", "Sub-ensemble contribution table for an input");
    table->add_option("--input", input, "00, 0+, +0 or ++")->required();
    auto *verify = app.add_subcommand("verify", "Check the zero-outcome structure and its "
                                                "explanation by negative contributions");
    auto *decompose_cmd =
        app.add_subcommand("decompose", "Split a state into outcome sub-ensembles");
    decompose_cmd->add_option("--state", state_path, "State file (matrix or ket JSON)")
        ->required();
    decompose_cmd->add_option("--basis", basis_name, "Z, X or a basis JSON file")->required();
    auto *mh = app.add_subcommand("mh", "Joint quasi-probabilities over two bases");
    mh->add_option("--state", state_path, "State file (matrix or ket JSON)")->required();
    mh->add_option("--basis-a", basis_a, "Z, X or a basis JSON file");
    mh->add_option("--basis-b", basis_b, "Z, X or a basis JSON file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const auto format = report::parse_format(format_name);
        if (*verify) {
            const auto r = verify_paradox(definition);
            out << report::render_paradox(r, format);
            if (!r.passed()) {
                err << "error: verification failed\n";
                return kExitVerificationFailed;
            }
            return kExitOk;
        }
        if (*decompose_cmd) {
            const auto rho = state_argument(state_path);
            const auto basis = basis_argument(basis_name);
            const auto parts = load([&] { return decompose(rho, basis); });
            out << report::render_decomposition(basis, parts, format);
            return kExitOk;
        }
        if (*mh) {
            const auto rho = state_argument(state_path);
            const auto a = basis_argument(basis_a);
            const auto b = basis_argument(basis_b);
            const auto dist = load([&] { return mh_joint(rho, a, b); });
            out << report::render_joint(dist, format);
            return kExitOk;
        }

        const auto basis = EtaBasis::from_definition(definition);
        if (*eta) {
            out << report::render_eta(basis, format);
            return kExitOk;
        }
        const auto [first, second] = parse_input_label(input);
        if (*prob) {
            out << report::render_probabilities(basis, {first, second}, format);
        } else if (*table) {
            out << report::render_table(contribution_table(basis, first, second), format);
        }
        return kExitOk;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
        case ErrorCode::UnknownLabel:
            return kExitUsage;
        case ErrorCode::InternalConsistency:
            return kExitVerificationFailed;
        default:
            return kExitMalformedInput;
        }
    }
}

} // namespace quasiprob::cli
