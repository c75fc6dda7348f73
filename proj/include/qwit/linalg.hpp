// Copyright 2026 The qwit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Small dense linear algebra: Hermitian eigenvalues by cyclic Jacobi.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "errors.hpp"

namespace qwit::linalg {

/// Row-major square complex matrix.
struct ComplexMatrix {
    std::size_t dim{0};
    std::vector<std::complex<double>> data;

    explicit ComplexMatrix(std::size_t d) : dim{d}, data(d * d) {}

    std::complex<double> &operator()(std::size_t r, std::size_t c) {
        return data[r * dim + c];
    }
    const std::complex<double> &operator()(std::size_t r, std::size_t c) const {
        return data[r * dim + c];
    }
};

/// Largest |A - A^H| entry.
[[nodiscard]] inline double hermiticity_defect(const ComplexMatrix &a) {
    double defect = 0.0;
    for (std::size_t r = 0; r < a.dim; ++r) {
        for (std::size_t c = r; c < a.dim; ++c) {
            defect = std::max(defect, std::abs(a(r, c) - std::conj(a(c, r))));
        }
    }
    return defect;
}

/**
 * @brief Eigenvalues of a real symmetric matrix (row-major, size m x m),
 * sorted in descending order. The input is consumed.
 */
[[nodiscard]] inline std::vector<double>
symmetric_eigenvalues(std::vector<double> a, std::size_t m) {
    auto at = [&a, m](std::size_t r, std::size_t c) -> double & {
        return a[r * m + c];
    };
    double scale = 0.0;
    for (double v : a) {
        scale += v * v;
    }
    constexpr int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                off += at(p, q) * at(p, q);
            }
        }
        if (off <= 1e-32 * scale || off == 0.0) {
            break;
        }
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < m; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(m);
    for (std::size_t i = 0; i < m; ++i) {
        eig[i] = at(i, i);
    }
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

/**
 * @brief Eigenvalues of a Hermitian matrix, descending.
 *
 * Uses the real embedding [[Re A, -Im A], [Im A, Re A]], whose spectrum is
 * that of A with every eigenvalue doubled.
 */
[[nodiscard]] inline std::vector<double>
hermitian_eigenvalues(const ComplexMatrix &a, double hermitian_tolerance = 1e-10) {
    if (hermiticity_defect(a) > hermitian_tolerance) {
        throw ArgumentError("matrix is not Hermitian within tolerance");
    }
    const std::size_t d = a.dim;
    const std::size_t m = 2 * d;
    std::vector<double> real(m * m);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            // symmetrize to remove round-off asymmetry
            const auto v = 0.5 * (a(r, c) + std::conj(a(c, r)));
            real[r * m + c] = v.real();
            real[(r + d) * m + (c + d)] = v.real();
            real[r * m + (c + d)] = -v.imag();
            real[(r + d) * m + c] = v.imag();
        }
    }
    const auto doubled = symmetric_eigenvalues(std::move(real), m);
    std::vector<double> eig(d);
    for (std::size_t i = 0; i < d; ++i) {
        eig[i] = doubled[2 * i];
    }
    return eig;
}

} // namespace qwit::linalg
