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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

namespace quasiprob {

using Complex = std::complex<double>;

/// Absolute elementwise tolerance for every equality test in the library.
inline constexpr double kTolerance = 1e-12;

/// Lower bound on eigenvalues accepted as "non-negative" when validating
/// density matrices. Looser than kTolerance to absorb eigensolver rounding.
inline constexpr double kPsdTolerance = 1e-10;

/// Dense square matrix of complex amplitudes.
///
/// Values are immutable once built: all arithmetic returns new matrices.
class ComplexMatrix {
  public:
    /// Zero matrix of the given dimension (dim >= 1).
    explicit ComplexMatrix(std::size_t dim);
    explicit ComplexMatrix(Eigen::MatrixXcd data);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix from_rows(const std::vector<std::vector<Complex>> &rows);

    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(data_.rows());
    }
    [[nodiscard]] Complex operator()(std::size_t row, std::size_t col) const {
        return data_(static_cast<Eigen::Index>(row),
                     static_cast<Eigen::Index>(col));
    }
    [[nodiscard]] const Eigen::MatrixXcd &eigen() const noexcept { return data_; }

    [[nodiscard]] Complex trace() const;
    [[nodiscard]] ComplexMatrix adjoint() const;
    [[nodiscard]] bool is_hermitian(double tol = kTolerance) const;
    /// Largest elementwise modulus of (*this - other).
    [[nodiscard]] double max_abs_diff(const ComplexMatrix &other) const;
    [[nodiscard]] bool approx_equal(const ComplexMatrix &other,
                                    double tol = kTolerance) const;
    /// Eigenvalues in ascending order; the Hermitian part is used.
    [[nodiscard]] std::vector<double> hermitian_eigenvalues() const;

    friend ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix &m);
    friend ComplexMatrix operator*(double s, const ComplexMatrix &m);
    friend bool operator==(const ComplexMatrix &a, const ComplexMatrix &b);

  private:
    Eigen::MatrixXcd data_;
};

/// Kronecker product; the left operand is the leftmost tensor factor.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

/// (ab + ba) / 2. Throws DimensionMismatch.
ComplexMatrix symmetric_product(const ComplexMatrix &a, const ComplexMatrix &b);

/// Hermitian and idempotent within tol.
bool is_projector(const ComplexMatrix &m, double tol = kTolerance);

/// Hermitian, unit trace, and eigenvalues >= -kPsdTolerance.
bool is_density_matrix(const ComplexMatrix &m);

} // namespace quasiprob
