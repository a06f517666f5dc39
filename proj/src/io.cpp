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
#include "quasiprob/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "quasiprob/error.hpp"

namespace quasiprob::io {

namespace {

[[noreturn]] void malformed(const std::string &what) {
    throw Error(ErrorCode::MalformedInput, what);
}

double clean(double v) { return v == 0.0 ? 0.0 : v; }

bool is_complex_pair(const json &j) {
    return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number();
}

} // namespace

json to_json(Complex z) { return json::array({clean(z.real()), clean(z.imag())}); }

json to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            row.push_back(to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const Ket &k) {
    json amps = json::array();
    for (const auto &a : k.amplitudes()) {
        amps.push_back(to_json(a));
    }
    return amps;
}

json to_json(const PauliExpansion &e) {
    json coeffs = json::object();
    for (const auto &[p, c] : e.coeffs()) {
        coeffs[p.str()] = clean(c);
    }
    return json{{"n", e.qubits()}, {"coeffs", std::move(coeffs)}};
}

Complex complex_from_json(const json &j) {
    if (!is_complex_pair(j)) {
        malformed("expected a complex number [re, im], got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

ComplexMatrix matrix_from_json(const json &j) {
    if (!j.is_array() || j.empty()) {
        malformed("matrix must be a non-empty array of rows");
    }
    std::vector<std::vector<Complex>> rows;
    rows.reserve(j.size());
    for (const auto &row : j) {
        if (!row.is_array() || row.size() != j.size()) {
            malformed("matrix must be square: every row needs " + std::to_string(j.size()) +
                      " entries");
        }
        std::vector<Complex> r;
        r.reserve(row.size());
        for (const auto &v : row) {
            r.push_back(complex_from_json(v));
        }
        rows.push_back(std::move(r));
    }
    return ComplexMatrix::from_rows(rows);
}

Ket ket_from_json(const json &j) {
    if (!j.is_array() || j.empty()) {
        malformed("ket must be a non-empty array of amplitudes");
    }
    std::vector<Complex> amps;
    amps.reserve(j.size());
    for (const auto &v : j) {
        amps.push_back(complex_from_json(v));
    }
    return Ket(std::move(amps));
}

PauliExpansion expansion_from_json(const json &j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("coeffs") ||
        !j["n"].is_number_unsigned() || !j["coeffs"].is_object()) {
        malformed("Pauli expansion must be {\"n\": int, \"coeffs\": {...}}");
    }
    const auto n = j["n"].get<std::size_t>();
    PauliExpansion::Map coeffs;
    for (const auto &[key, value] : j["coeffs"].items()) {
        if (!value.is_number()) {
            malformed("coefficient of " + key + " is not a number");
        }
        try {
            coeffs[PauliString::parse(key)] = value.get<double>();
        } catch (const Error &e) {
            malformed(e.what());
        }
    }
    try {
        return PauliExpansion(n, std::move(coeffs));
    } catch (const Error &e) {
        malformed(e.what());
    }
}

ComplexMatrix state_from_json(const json &j) {
    if (!j.is_array() || j.empty()) {
        malformed("state must be a matrix or a ket");
    }
    // ket entries are [re, im] pairs, matrix entries are rows of pairs
    if (is_complex_pair(j.front())) {
        return projector(ket_from_json(j));
    }
    return matrix_from_json(j);
}

MeasurementBasis basis_from_json(const json &j) {
    const json *kets = &j;
    std::vector<std::string> labels;
    if (j.is_object()) {
        if (!j.contains("kets")) {
            malformed("basis object needs a \"kets\" array");
        }
        kets = &j["kets"];
        if (j.contains("labels")) {
            if (!j["labels"].is_array()) {
                malformed("basis labels must be an array of strings");
            }
            for (const auto &l : j["labels"]) {
                if (!l.is_string()) {
                    malformed("basis labels must be strings");
                }
                labels.push_back(l.get<std::string>());
            }
        }
    }
    if (!kets->is_array() || kets->empty()) {
        malformed("basis must be a non-empty array of kets");
    }
    std::vector<Ket> vectors;
    for (const auto &k : *kets) {
        vectors.push_back(ket_from_json(k));
    }
    return MeasurementBasis::from_kets(std::move(vectors), std::move(labels));
}

json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        malformed("cannot open " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        malformed(path.string() + ": " + e.what());
    }
}

std::string format_exact(double v) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, clean(v));
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

std::string format_pretty(double v) {
    if (std::abs(v) <= kTolerance) {
        v = 0.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string format_pretty(Complex z) {
    const double re = std::abs(z.real()) <= kTolerance ? 0.0 : z.real();
    const double im = std::abs(z.imag()) <= kTolerance ? 0.0 : z.imag();
    if (im == 0.0) {
        return format_pretty(re);
    }
    if (re == 0.0) {
        return format_pretty(im) + "i";
    }
    return format_pretty(re) + (im < 0.0 ? "-" : "+") + format_pretty(std::abs(im)) + "i";
}

} // namespace quasiprob::io
