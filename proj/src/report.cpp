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
#include "quasiprob/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "quasiprob/error.hpp"
#include "quasiprob/io.hpp"

namespace quasiprob::report {

namespace {

using io::format_exact;
using io::format_pretty;
using io::json;

constexpr int kColumn = 11;

std::string dump(const json &j) { return j.dump(2) + "\n"; }

json number(double v) {
    if (std::isnan(v)) {
        return nullptr;
    }
    return v == 0.0 ? 0.0 : v;
}

template <typename Range> json numbers(const Range &values) {
    json out = json::array();
    for (double v : values) {
        out.push_back(number(v));
    }
    return out;
}

template <typename Range> std::string csv_line(const Range &values) {
    std::string line;
    for (double v : values) {
        if (!line.empty()) {
            line += ',';
        }
        line += format_exact(v);
    }
    return line + "\n";
}

std::string pair_label(const InputPair &p) {
    return std::string{to_char(p.first), to_char(p.second)};
}

std::string basis_title(const MeasurementBasis &b) {
    return b.name().empty() ? "custom" : b.name();
}

json basis_json(const MeasurementBasis &b) {
    if (!b.name().empty()) {
        return b.name();
    }
    json kets = json::array();
    for (const auto &k : b.kets()) {
        kets.push_back(io::to_json(k));
    }
    return json{{"labels", b.labels()}, {"kets", std::move(kets)}};
}

void table_rows_pretty(std::ostringstream &out, const ContributionTable &t,
                       std::string_view indent) {
    out << indent << std::left << std::setw(14) << "sub-ensemble" << std::right
        << std::setw(kColumn) << "weight";
    for (std::size_t i = 1; i <= kEtaOutcomes; ++i) {
        out << std::setw(kColumn) << ("eta=" + std::to_string(i));
    }
    out << "\n";
    for (const auto &row : t.rows) {
        out << indent << std::left << std::setw(14) << ("(" + row.label + ")") << std::right
            << std::setw(kColumn) << format_pretty(row.weight);
        for (double v : row.entries) {
            out << std::setw(kColumn) << format_pretty(v);
        }
        out << "\n";
    }
    out << indent << std::left << std::setw(14 + kColumn) << "P(eta)" << std::right;
    for (double v : t.born) {
        out << std::setw(kColumn) << format_pretty(v);
    }
    out << "\n";
}

json table_json(const ContributionTable &t) {
    json rows = json::array();
    for (const auto &row : t.rows) {
        rows.push_back(
            {{"label", row.label}, {"weight", number(row.weight)}, {"entries", numbers(row.entries)}});
    }
    return {{"input", t.input}, {"rows", std::move(rows)}, {"born_probabilities", numbers(t.born)}};
}

} // namespace

Format parse_format(std::string_view name) {
    if (name == "pretty") {
        return Format::Pretty;
    }
    if (name == "json") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    throw Error(ErrorCode::UnknownLabel,
                "unknown format '" + std::string(name) + "' (expected pretty, json or csv)");
}

std::string pretty_expansion(const PauliExpansion &e) {
    std::string out;
    for (const auto &[p, c] : e.coeffs()) {
        if (out.empty()) {
            out = format_pretty(c) + " " + p.str();
        } else {
            out += (c < 0.0 ? " - " : " + ") + format_pretty(std::abs(c)) + " " + p.str();
        }
    }
    return out.empty() ? "0" : out;
}

std::string render_eta(const EtaBasis &basis, Format format) {
    const auto &defs = basis.definition();
    const auto excluded = [&basis](int outcome) {
        const auto in = basis.excluded_input(outcome);
        return in ? pair_label(*in) : std::string("-");
    };
    switch (format) {
    case Format::Json: {
        json outcomes = json::array();
        for (std::size_t i = 0; i < kEtaOutcomes; ++i) {
            const int o = static_cast<int>(i + 1);
            const auto in = basis.excluded_input(o);
            outcomes.push_back({{"outcome", o},
                                {"expansion", io::to_json(defs[i])},
                                {"ket", io::to_json(basis.kets()[i])},
                                {"excluded_input", in ? json(pair_label(*in)) : json(nullptr)}});
        }
        return dump({{"outcomes", std::move(outcomes)}});
    }
    case Format::Csv: {
        std::ostringstream out;
        out << "outcome,excluded_input";
        for (const char *p : {"II", "IX", "IY", "IZ", "XI", "XX", "XY", "XZ", "YI", "YX", "YY",
                              "YZ", "ZI", "ZX", "ZY", "ZZ"}) {
            out << ',' << p;
        }
        out << "\n";
        for (std::size_t i = 0; i < kEtaOutcomes; ++i) {
            const int o = static_cast<int>(i + 1);
            out << o << ',' << excluded(o);
            for (const char *p : {"II", "IX", "IY", "IZ", "XI", "XX", "XY", "XZ", "YI", "YX",
                                  "YY", "YZ", "ZI", "ZX", "ZY", "ZZ"}) {
                out << ',' << format_exact(defs[i].coefficient(p));
            }
            out << "\n";
        }
        return out.str();
    }
    case Format::Pretty:
        break;
    }
    std::ostringstream out;
    out << "outcome  excludes  projector\n";
    for (std::size_t i = 0; i < kEtaOutcomes; ++i) {
        const int o = static_cast<int>(i + 1);
        out << std::left << std::setw(9) << o << std::setw(10) << excluded(o)
            << pretty_expansion(defs[i]) << "\n";
    }
    out << "\noutcome  ket (|00>, |01>, |10>, |11>)\n";
    for (std::size_t i = 0; i < kEtaOutcomes; ++i) {
        out << std::left << std::setw(9) << (i + 1) << "(";
        const auto &amps = basis.kets()[i].amplitudes();
        for (std::size_t k = 0; k < amps.size(); ++k) {
            out << (k ? ", " : "") << format_pretty(amps[k]);
        }
        out << ")\n";
    }
    return out.str();
}

std::string render_probabilities(const EtaBasis &basis, InputPair input, Format format) {
    std::array<double, 4> p{};
    for (std::size_t i = 0; i < kEtaOutcomes; ++i) {
        p[i] = std::clamp(basis.born_probability(static_cast<int>(i + 1), input.first,
                                                 input.second),
                          0.0, 1.0);
    }
    const auto label = pair_label(input);
    switch (format) {
    case Format::Json: {
        json rows = json::array();
        for (std::size_t i = 0; i < kEtaOutcomes; ++i) {
            rows.push_back({{"outcome", i + 1}, {"probability", number(p[i])}});
        }
        return dump({{"input", label}, {"probabilities", std::move(rows)}});
    }
    case Format::Csv: {
        std::string out = "outcome,probability\n";
        for (std::size_t i = 0; i < kEtaOutcomes; ++i) {
            out += std::to_string(i + 1) + "," + format_exact(p[i]) + "\n";
        }
        return out;
    }
    case Format::Pretty:
        break;
    }
    std::ostringstream out;
    out << "input " << label << "\noutcome  probability\n";
    for (std::size_t i = 0; i < kEtaOutcomes; ++i) {
        out << std::left << std::setw(9) << (i + 1) << format_pretty(p[i]) << "\n";
    }
    return out.str();
}

std::string render_table(const ContributionTable &table, Format format) {
    switch (format) {
    case Format::Json:
        return dump(table_json(table));
    case Format::Csv: {
        std::string out;
        for (const auto &row : table.rows) {
            out += csv_line(row.entries);
        }
        return out;
    }
    case Format::Pretty:
        break;
    }
    std::ostringstream out;
    out << "input " << table.input << ": contribution of each sub-ensemble to outcome eta\n";
    table_rows_pretty(out, table, "");
    return out.str();
}

std::string render_paradox(const ParadoxReport &report, Format format) {
    switch (format) {
    case Format::Json: {
        json checks = json::array();
        for (const auto &c : report.checks) {
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        }
        json inputs = json::array();
        for (const auto &in : report.inputs) {
            json rows = json::array();
            for (std::size_t r = 0; r < in.table.rows.size(); ++r) {
                const auto &row = in.table.rows[r];
                rows.push_back({{"label", row.label},
                                {"weight", number(row.weight)},
                                {"entries", numbers(row.entries)},
                                {"negatives", in.negatives[r]}});
            }
            inputs.push_back(
                {{"input", in.input},
                 {"excluded_outcome", in.excluded_outcome ? json(*in.excluded_outcome) : json(nullptr)},
                 {"born_probability", number(in.born_probability)},
                 {"negative_contributors", in.negative_contributors},
                 {"common_row", numbers(in.common_row)},
                 {"rows", std::move(rows)}});
        }
        return dump({{"passed", report.passed()},
                     {"checks", std::move(checks)},
                     {"inputs", std::move(inputs)}});
    }
    case Format::Csv: {
        std::string out = "input,excluded_outcome,born_probability,row,weight,eta1,eta2,eta3,eta4\n";
        for (const auto &in : report.inputs) {
            for (const auto &row : in.table.rows) {
                out += in.input + "," +
                       (in.excluded_outcome ? std::to_string(*in.excluded_outcome) : "") + "," +
                       (std::isnan(in.born_probability) ? "" : format_exact(in.born_probability)) +
                       "," + row.label + "," + format_exact(row.weight) + "," +
                       csv_line(row.entries);
            }
        }
        return out;
    }
    case Format::Pretty:
        break;
    }
    std::ostringstream out;
    for (const auto &c : report.checks) {
        out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(62) << c.name
            << c.detail << "\n";
    }
    for (const auto &in : report.inputs) {
        out << "\ninput " << in.input << ": ";
        if (in.excluded_outcome) {
            out << "outcome " << *in.excluded_outcome << " excluded, P(eta="
                << *in.excluded_outcome << ") = " << format_pretty(in.born_probability) << "\n";
        } else {
            out << "no uniquely excluded outcome\n";
        }
        table_rows_pretty(out, in.table, "  ");
        if (in.excluded_outcome) {
            const auto col = static_cast<std::size_t>(*in.excluded_outcome - 1);
            out << "  negative contributions to eta=" << *in.excluded_outcome << ":";
            if (in.negative_contributors.empty()) {
                out << " none";
            }
            for (const auto &row : in.table.rows) {
                if (row.entries[col] < -kTolerance) {
                    out << " (" << row.label << ") " << format_pretty(row.entries[col]);
                }
            }
            out << "\n";
        }
        out << "  common sub-ensemble (0+;0+):";
        for (double v : in.common_row) {
            out << " " << format_pretty(v);
        }
        out << "\n";
    }
    out << "\n" << (report.passed() ? "all checks passed" : "verification FAILED") << "\n";
    return out.str();
}

std::string render_decomposition(const MeasurementBasis &basis,
                                 const std::vector<SubensembleOperator> &parts, Format format) {
    const bool pauli = basis.dim() >= 2 && (basis.dim() & (basis.dim() - 1)) == 0;
    switch (format) {
    case Format::Json: {
        json ops = json::array();
        for (const auto &p : parts) {
            json entry = {{"outcome", p.outcome},
                          {"label", p.label},
                          {"weight", number(p.weight)},
                          {"operator", io::to_json(p.op)}};
            if (pauli) {
                entry["expansion"] = io::to_json(pauli_expand(p.op));
            }
            ops.push_back(std::move(entry));
        }
        return dump({{"basis", basis_json(basis)}, {"subensembles", std::move(ops)}});
    }
    case Format::Csv: {
        std::ostringstream out;
        out << "outcome,label,weight,row,col,re,im\n";
        for (const auto &p : parts) {
            for (std::size_t r = 0; r < p.op.dim(); ++r) {
                for (std::size_t c = 0; c < p.op.dim(); ++c) {
                    out << p.outcome << ',' << p.label << ',' << format_exact(p.weight) << ','
                        << r << ',' << c << ',' << format_exact(p.op(r, c).real()) << ','
                        << format_exact(p.op(r, c).imag()) << "\n";
                }
            }
        }
        return out.str();
    }
    case Format::Pretty:
        break;
    }
    std::ostringstream out;
    out << "basis " << basis_title(basis) << "\n";
    for (const auto &p : parts) {
        out << "R[" << p.label << "]  weight " << format_pretty(p.weight) << "\n";
        if (pauli) {
            out << "  = " << pretty_expansion(pauli_expand(p.op)) << "\n";
        } else {
            for (std::size_t r = 0; r < p.op.dim(); ++r) {
                out << "  ";
                for (std::size_t c = 0; c < p.op.dim(); ++c) {
                    out << std::setw(kColumn + 4) << format_pretty(p.op(r, c));
                }
                out << "\n";
            }
        }
        const auto ev = p.op.hermitian_eigenvalues();
        out << "  eigenvalues:";
        for (double v : ev) {
            out << " " << format_pretty(v);
        }
        out << "\n";
    }
    return out.str();
}

std::string render_joint(const JointQuasiDistribution &dist, Format format) {
    const auto &a = dist.basis_a();
    const auto &b = dist.basis_b();
    switch (format) {
    case Format::Json: {
        json q = json::array();
        for (const auto &row : dist.values()) {
            q.push_back(numbers(row));
        }
        return dump({{"basisA", basis_json(a)},
                     {"basisB", basis_json(b)},
                     {"q", std::move(q)},
                     {"negativity", number(negativity(dist))}});
    }
    case Format::Csv: {
        std::string out;
        for (const auto &l : b.labels()) {
            out += "," + l;
        }
        out += "\n";
        for (std::size_t i = 0; i < a.size(); ++i) {
            out += a.labels()[i] + "," + csv_line(dist.values()[i]);
        }
        return out;
    }
    case Format::Pretty:
        break;
    }
    std::ostringstream out;
    out << "joint quasi-probability q(a, b), a in " << basis_title(a) << ", b in "
        << basis_title(b) << "\n";
    out << std::left << std::setw(8) << "a \\ b" << std::right;
    for (const auto &l : b.labels()) {
        out << std::setw(kColumn) << l;
    }
    out << std::setw(kColumn) << "sum" << "\n";
    const auto ma = dist.marginal_a();
    for (std::size_t i = 0; i < a.size(); ++i) {
        out << std::left << std::setw(8) << a.labels()[i] << std::right;
        for (double v : dist.values()[i]) {
            out << std::setw(kColumn) << format_pretty(v);
        }
        out << std::setw(kColumn) << format_pretty(ma[i]) << "\n";
    }
    out << std::left << std::setw(8) << "sum" << std::right;
    for (double v : dist.marginal_b()) {
        out << std::setw(kColumn) << format_pretty(v);
    }
    out << "\nnegativity " << format_pretty(negativity(dist)) << "\n";
    return out.str();
}

} // namespace quasiprob::report
