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
#include "quasiprob/ket.hpp"

#include <cmath>
#include <string>

#include "quasiprob/error.hpp"

namespace quasiprob {

Ket::Ket(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty()) {
        throw Error(ErrorCode::DimensionMismatch, "ket must have at least one amplitude");
    }
}

Ket::Ket(std::initializer_list<Complex> amplitudes)
    : Ket(std::vector<Complex>(amplitudes)) {}

double Ket::norm_squared() const {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

Ket Ket::with_canonical_phase() const {
    for (const auto &a : amps_) {
        if (std::abs(a) > kTolerance) {
            const Complex phase = std::conj(a) / std::abs(a);
            std::vector<Complex> out;
            out.reserve(amps_.size());
            for (const auto &b : amps_) {
                out.push_back(b * phase);
            }
            // the leading amplitude is real by construction; drop rounding residue
            for (auto &b : out) {
                if (std::abs(b) > kTolerance) {
                    b = Complex{std::abs(b), 0.0};
                    break;
                }
            }
            return Ket(std::move(out));
        }
    }
    return *this;
}

bool Ket::approx_equal(const Ket &other, double tol) const {
    if (dim() != other.dim()) {
        return false;
    }
    for (std::size_t i = 0; i < dim(); ++i) {
        if (std::abs(amps_[i] - other.amps_[i]) > tol) {
            return false;
        }
    }
    return true;
}

Complex inner(const Ket &a, const Ket &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "inner: dimensions " + std::to_string(a.dim()) + " and " +
                        std::to_string(b.dim()));
    }
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

ComplexMatrix outer(const Ket &a, const Ket &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "outer: dimensions " + std::to_string(a.dim()) + " and " +
                        std::to_string(b.dim()));
    }
    const auto n = static_cast<Eigen::Index>(a.dim());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            m(r, c) = a[static_cast<std::size_t>(r)] * std::conj(b[static_cast<std::size_t>(c)]);
        }
    }
    return ComplexMatrix(std::move(m));
}

ComplexMatrix projector(const Ket &k) { return outer(k, k); }

Ket dominant_eigenvector(const ComplexMatrix &m) {
    const Eigen::MatrixXcd herm = 0.5 * (m.eigen() + m.eigen().adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
    const Eigen::Index last = herm.rows() - 1;
    const Eigen::VectorXcd v = solver.eigenvectors().col(last).normalized();
    return Ket(std::vector<Complex>(v.data(), v.data() + v.size())).with_canonical_phase();
}

} // namespace quasiprob
