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
#include "quasiprob/complex_matrix.hpp"

#include <algorithm>
#include <string>

#include "quasiprob/error.hpp"

namespace quasiprob {

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b,
                      const char *what) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + ": dimensions " + std::to_string(a.dim()) +
                        " and " + std::to_string(b.dim()));
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) {
    if (dim == 0) {
        throw Error(ErrorCode::NotSquare, "matrix dimension must be at least 1");
    }
    const auto n = static_cast<Eigen::Index>(dim);
    data_ = Eigen::MatrixXcd::Zero(n, n);
}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd data) : data_(std::move(data)) {
    if (data_.rows() != data_.cols() || data_.rows() == 0) {
        throw Error(ErrorCode::NotSquare,
                    "matrix is " + std::to_string(data_.rows()) + "x" +
                        std::to_string(data_.cols()));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    std::vector<std::vector<Complex>> tmp;
    tmp.reserve(rows.size());
    for (const auto &r : rows) {
        tmp.emplace_back(r);
    }
    *this = from_rows(tmp);
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    if (dim == 0) {
        throw Error(ErrorCode::NotSquare, "matrix dimension must be at least 1");
    }
    const auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix(Eigen::MatrixXcd::Identity(n, n));
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>> &rows) {
    const auto n = rows.size();
    if (n == 0) {
        throw Error(ErrorCode::NotSquare, "matrix has no rows");
    }
    Eigen::MatrixXcd data(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != n) {
            throw Error(ErrorCode::NotSquare, "row " + std::to_string(r) + " has " +
                                                  std::to_string(rows[r].size()) +
                                                  " entries, expected " +
                                                  std::to_string(n));
        }
        for (std::size_t c = 0; c < n; ++c) {
            data(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
        }
    }
    return ComplexMatrix(std::move(data));
}

Complex ComplexMatrix::trace() const { return data_.trace(); }

ComplexMatrix ComplexMatrix::adjoint() const { return ComplexMatrix(data_.adjoint().eval()); }

bool ComplexMatrix::is_hermitian(double tol) const {
    return max_abs_diff(adjoint()) <= tol;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    require_same_dim(*this, other, "max_abs_diff");
    return (data_ - other.data_).cwiseAbs().maxCoeff();
}

bool ComplexMatrix::approx_equal(const ComplexMatrix &other, double tol) const {
    return dim() == other.dim() && max_abs_diff(other) <= tol;
}

std::vector<double> ComplexMatrix::hermitian_eigenvalues() const {
    const Eigen::MatrixXcd herm = 0.5 * (data_ + data_.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "operator+");
    return ComplexMatrix((a.data_ + b.data_).eval());
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "operator-");
    return ComplexMatrix((a.data_ - b.data_).eval());
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "operator*");
    return ComplexMatrix((a.data_ * b.data_).eval());
}

ComplexMatrix operator*(Complex s, const ComplexMatrix &m) {
    return ComplexMatrix((s * m.data_).eval());
}

ComplexMatrix operator*(double s, const ComplexMatrix &m) {
    return ComplexMatrix((s * m.data_).eval());
}

bool operator==(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a.data_.rows() == b.data_.rows() && a.data_ == b.data_;
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    const auto na = static_cast<Eigen::Index>(a.dim());
    const auto nb = static_cast<Eigen::Index>(b.dim());
    Eigen::MatrixXcd out(na * nb, na * nb);
    for (Eigen::Index i = 0; i < na; ++i) {
        for (Eigen::Index j = 0; j < na; ++j) {
            out.block(i * nb, j * nb, nb, nb) = a.eigen()(i, j) * b.eigen();
        }
    }
    return ComplexMatrix(std::move(out));
}

ComplexMatrix symmetric_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "symmetric_product");
    const Eigen::MatrixXcd ab = a.eigen() * b.eigen();
    const Eigen::MatrixXcd ba = b.eigen() * a.eigen();
    return ComplexMatrix((0.5 * (ab + ba)).eval());
}

bool is_projector(const ComplexMatrix &m, double tol) {
    return m.is_hermitian(tol) && (m * m).approx_equal(m, tol);
}

bool is_density_matrix(const ComplexMatrix &m) {
    if (!m.is_hermitian() || std::abs(m.trace() - Complex{1.0, 0.0}) > kTolerance) {
        return false;
    }
    const auto ev = m.hermitian_eigenvalues();
    return ev.front() >= -kPsdTolerance;
}

} // namespace quasiprob
