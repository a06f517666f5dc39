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

// Reference arithmetic for tests: plain nested vectors and hand-written loops,
// deliberately sharing no code with the library's Eigen-backed paths.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <vector>

#include "quasiprob/complex_matrix.hpp"
#include "quasiprob/ket.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;
using Vec = std::vector<C>;

inline Mat zeros(std::size_t n) { return Mat(n, std::vector<C>(n, C{})); }

inline Mat eye(std::size_t n) {
    auto m = zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1.0;
    }
    return m;
}

inline Mat pauli(char p) {
    const C i{0.0, 1.0};
    switch (p) {
    case 'X':
        return {{0.0, 1.0}, {1.0, 0.0}};
    case 'Y':
        return {{0.0, -i}, {i, 0.0}};
    case 'Z':
        return {{1.0, 0.0}, {0.0, -1.0}};
    default:
        return {{1.0, 0.0}, {0.0, 1.0}};
    }
}

inline Mat mul(const Mat &a, const Mat &b) {
    const auto n = a.size();
    auto out = zeros(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t k = 0; k < n; ++k) {
                out[r][c] += a[r][k] * b[k][c];
            }
        }
    }
    return out;
}

inline Mat add(const Mat &a, const Mat &b, C sb = 1.0) {
    auto out = a;
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a.size(); ++c) {
            out[r][c] += sb * b[r][c];
        }
    }
    return out;
}

inline Mat scale(C s, const Mat &a) {
    auto out = a;
    for (auto &row : out) {
        for (auto &v : row) {
            v *= s;
        }
    }
    return out;
}

inline Mat kron(const Mat &a, const Mat &b) {
    const auto na = a.size();
    const auto nb = b.size();
    auto out = zeros(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) {
                    out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return out;
}

inline C trace(const Mat &a) {
    C s{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i][i];
    }
    return s;
}

inline Mat dagger(const Mat &a) {
    auto out = zeros(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a.size(); ++c) {
            out[r][c] = std::conj(a[c][r]);
        }
    }
    return out;
}

inline Mat outer(const Vec &a) {
    auto out = zeros(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a.size(); ++c) {
            out[r][c] = a[r] * std::conj(a[c]);
        }
    }
    return out;
}

/// Matrix of a Pauli string such as "XZ", leftmost letter = leftmost factor.
inline Mat pauli_string(std::string_view s) {
    Mat m = pauli(s.front());
    for (std::size_t k = 1; k < s.size(); ++k) {
        m = kron(m, pauli(s[k]));
    }
    return m;
}

struct Term {
    std::string_view pauli;
    double coeff;
};

inline Mat pauli_sum(std::size_t n, std::initializer_list<Term> terms) {
    auto out = zeros(std::size_t{1} << n);
    for (const auto &t : terms) {
        out = add(out, pauli_string(t.pauli), t.coeff);
    }
    return out;
}

inline double max_diff(const Mat &a, const quasiprob::ComplexMatrix &b) {
    double d = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a.size(); ++c) {
            d = std::max(d, std::abs(a[r][c] - b(r, c)));
        }
    }
    return d;
}

inline quasiprob::ComplexMatrix to_lib(const Mat &a) {
    return quasiprob::ComplexMatrix::from_rows(a);
}

inline Mat from_lib(const quasiprob::ComplexMatrix &m) {
    auto out = zeros(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            out[r][c] = m(r, c);
        }
    }
    return out;
}

/// Closed-form eigenvalues (lower, upper) of a 2x2 Hermitian matrix.
inline std::pair<double, double> eig2(const Mat &a) {
    const double tr = (a[0][0] + a[1][1]).real();
    const double det = (a[0][0] * a[1][1] - a[0][1] * a[1][0]).real();
    const double disc = std::sqrt(tr * tr - 4.0 * det);
    return {(tr - disc) / 2.0, (tr + disc) / 2.0};
}

class Random {
  public:
    explicit Random(std::uint64_t seed) : gen_(seed) {}

    C gaussian() { return {normal_(gen_), normal_(gen_)}; }
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }

    Mat ginibre(std::size_t n) {
        auto m = zeros(n);
        for (auto &row : m) {
            for (auto &v : row) {
                v = gaussian();
            }
        }
        return m;
    }

    Mat hermitian(std::size_t n) {
        const auto g = ginibre(n);
        return scale(0.5, add(g, dagger(g)));
    }

    /// Full-rank mixed state G G^dagger / tr.
    Mat density(std::size_t n) {
        const auto g = ginibre(n);
        auto rho = mul(g, dagger(g));
        const double tr = trace(rho).real();
        rho = scale(1.0 / tr, rho);
        // exact Hermiticity
        return scale(0.5, add(rho, dagger(rho)));
    }

    /// Orthonormal basis by modified Gram-Schmidt on Gaussian vectors.
    std::vector<Vec> basis(std::size_t n) {
        std::vector<Vec> out;
        while (out.size() < n) {
            Vec v(n);
            for (auto &x : v) {
                x = gaussian();
            }
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto &u : out) {
                    C dot{};
                    for (std::size_t i = 0; i < n; ++i) {
                        dot += std::conj(u[i]) * v[i];
                    }
                    for (std::size_t i = 0; i < n; ++i) {
                        v[i] -= dot * u[i];
                    }
                }
            }
            double norm = 0.0;
            for (const auto &x : v) {
                norm += std::norm(x);
            }
            norm = std::sqrt(norm);
            for (auto &x : v) {
                x /= norm;
            }
            out.push_back(std::move(v));
        }
        return out;
    }

    std::vector<quasiprob::Ket> basis_kets(std::size_t n) {
        std::vector<quasiprob::Ket> out;
        for (auto &v : basis(n)) {
            out.emplace_back(std::move(v));
        }
        return out;
    }

  private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace oracle
