// Copyright 2026 The imprecise-q Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IMPQ_MATRIX_H
#define IMPQ_MATRIX_H

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>

namespace impq {

using Complex = std::complex<double>;

/// Small dense row-major complex matrix. Only D = 2 and D = 4 are used.
template <std::size_t D>
struct SquareMatrix {
    std::array<Complex, D * D> entries{};

    static constexpr std::size_t dim = D;

    SquareMatrix() = default;
    SquareMatrix(std::initializer_list<Complex> values) {
        std::copy_n(values.begin(), std::min(values.size(), D * D), entries.begin());
    }

    static SquareMatrix identity() {
        SquareMatrix m;
        for (std::size_t k = 0; k < D; k++) {
            m(k, k) = 1.0;
        }
        return m;
    }

    Complex &operator()(std::size_t row, std::size_t col) { return entries[row * D + col]; }
    const Complex &operator()(std::size_t row, std::size_t col) const { return entries[row * D + col]; }

    SquareMatrix adjoint() const {
        SquareMatrix m;
        for (std::size_t r = 0; r < D; r++) {
            for (std::size_t c = 0; c < D; c++) {
                m(c, r) = std::conj((*this)(r, c));
            }
        }
        return m;
    }

    friend SquareMatrix operator*(const SquareMatrix &a, const SquareMatrix &b) {
        SquareMatrix m;
        for (std::size_t r = 0; r < D; r++) {
            for (std::size_t c = 0; c < D; c++) {
                Complex acc = 0;
                for (std::size_t k = 0; k < D; k++) {
                    acc += a(r, k) * b(k, c);
                }
                m(r, c) = acc;
            }
        }
        return m;
    }

    friend SquareMatrix operator*(Complex s, const SquareMatrix &a) {
        SquareMatrix m = a;
        for (auto &e : m.entries) {
            e *= s;
        }
        return m;
    }

    bool operator==(const SquareMatrix &) const = default;
};

using Matrix2 = SquareMatrix<2>;
using Matrix4 = SquareMatrix<4>;

/// max_{r,c} |a(r,c) - b(r,c)|
template <std::size_t D>
double max_abs_diff(const SquareMatrix<D> &a, const SquareMatrix<D> &b) {
    double worst = 0;
    for (std::size_t k = 0; k < D * D; k++) {
        worst = std::max(worst, std::abs(a.entries[k] - b.entries[k]));
    }
    return worst;
}

/// ||U^dagger U - I||_max
template <std::size_t D>
double unitarity_defect(const SquareMatrix<D> &u) {
    return max_abs_diff(u.adjoint() * u, SquareMatrix<D>::identity());
}

/// Kronecker product of two 2x2 matrices; `a` acts on the more significant qubit.
inline Matrix4 kron(const Matrix2 &a, const Matrix2 &b) {
    Matrix4 m;
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            m(r, c) = a(r >> 1, c >> 1) * b(r & 1, c & 1);
        }
    }
    return m;
}

}  // namespace impq

#endif
