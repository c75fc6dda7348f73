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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "qwit/linalg.hpp"
#include "qwit/rng.hpp"

using namespace qwit;
using linalg::ComplexMatrix;
using Complex = std::complex<double>;

namespace {

/// Random unitary by Gram-Schmidt on Gaussian columns.
std::vector<std::vector<Complex>> random_unitary(std::size_t d, Rng &rng) {
    std::vector<std::vector<Complex>> cols(d, std::vector<Complex>(d));
    for (std::size_t k = 0; k < d; ++k) {
        auto &v = cols[k];
        for (auto &z : v) z = Complex(standard_normal(rng), standard_normal(rng));
        for (std::size_t j = 0; j < k; ++j) {
            Complex dot = 0.0;
            for (std::size_t i = 0; i < d; ++i) dot += std::conj(cols[j][i]) * v[i];
            for (std::size_t i = 0; i < d; ++i) v[i] -= dot * cols[j][i];
        }
        double norm = 0.0;
        for (auto &z : v) norm += std::norm(z);
        for (auto &z : v) z /= std::sqrt(norm);
    }
    return cols;
}

/// U diag(lambda) U^H with U's columns from `cols`.
ComplexMatrix conjugated(const std::vector<std::vector<Complex>> &cols,
                         const std::vector<double> &lambda) {
    const auto d = lambda.size();
    ComplexMatrix m(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t k = 0; k < d; ++k)
                m(r, c) += cols[k][r] * lambda[k] * std::conj(cols[k][c]);
    return m;
}

} // namespace

TEST(SymmetricEigenvalues, Diagonal) {
    const auto ev = linalg::symmetric_eigenvalues({3.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 2.0}, 3);
    EXPECT_EQ(ev, (std::vector<double>{3.0, 2.0, -1.0}));
}

TEST(SymmetricEigenvalues, TwoByTwoClosedForm) {
    auto rng = make_rng(RngSeed{1});
    for (int t = 0; t < 100; ++t) {
        const double a = standard_normal(rng), b = standard_normal(rng), c = standard_normal(rng);
        const double mean = (a + c) / 2, radius = std::hypot((a - c) / 2, b);
        const auto ev = linalg::symmetric_eigenvalues({a, b, b, c}, 2);
        ASSERT_NEAR(ev[0], mean + radius, 1e-12);
        ASSERT_NEAR(ev[1], mean - radius, 1e-12);
    }
}

TEST(SymmetricEigenvalues, TraceAndFrobeniusIdentities) {
    auto rng = make_rng(RngSeed{2});
    for (std::size_t m = 1; m <= 8; ++m) {
        std::vector<double> a(m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j)
                a[i * m + j] = a[j * m + i] = standard_normal(rng);
        double trace = 0.0, frob = 0.0;
        for (std::size_t i = 0; i < m; ++i) trace += a[i * m + i];
        for (double x : a) frob += x * x;
        const auto ev = linalg::symmetric_eigenvalues(a, m);
        ASSERT_TRUE(std::is_sorted(ev.begin(), ev.end(), std::greater<>()));
        double s1 = 0.0, s2 = 0.0;
        for (double l : ev) {
            s1 += l;
            s2 += l * l;
        }
        EXPECT_NEAR(s1, trace, 1e-10);
        EXPECT_NEAR(s2, frob, 1e-10);
    }
}

TEST(HermitianEigenvalues, PauliY) {
    ComplexMatrix y(2);
    y(0, 1) = Complex(0, -1);
    y(1, 0) = Complex(0, 1);
    const auto ev = linalg::hermitian_eigenvalues(y);
    ASSERT_EQ(ev.size(), 2U);
    EXPECT_NEAR(ev[0], 1.0, 1e-14);
    EXPECT_NEAR(ev[1], -1.0, 1e-14);
}

TEST(HermitianEigenvalues, RecoversPlantedSpectrum) {
    auto rng = make_rng(RngSeed{3});
    for (std::size_t d = 1; d <= 8; ++d) {
        for (int t = 0; t < 10; ++t) {
            std::vector<double> lambda(d);
            for (auto &l : lambda) l = uniform(rng, -2.0, 2.0);
            const auto m = conjugated(random_unitary(d, rng), lambda);
            std::sort(lambda.begin(), lambda.end(), std::greater<>());
            const auto ev = linalg::hermitian_eigenvalues(m);
            ASSERT_EQ(ev.size(), d);
            for (std::size_t k = 0; k < d; ++k) {
                ASSERT_NEAR(ev[k], lambda[k], 1e-10);
            }
        }
    }
}

TEST(HermitianEigenvalues, DegenerateSpectrum) {
    auto rng = make_rng(RngSeed{4});
    const auto m = conjugated(random_unitary(4, rng), {0.5, 0.5, 0.0, 0.0});
    const auto ev = linalg::hermitian_eigenvalues(m);
    EXPECT_NEAR(ev[0], 0.5, 1e-12);
    EXPECT_NEAR(ev[1], 0.5, 1e-12);
    EXPECT_NEAR(ev[2], 0.0, 1e-12);
    EXPECT_NEAR(ev[3], 0.0, 1e-12);
}

TEST(HermitianEigenvalues, RejectsNonHermitian) {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    EXPECT_GT(linalg::hermiticity_defect(m), 0.5);
    EXPECT_THROW((void)linalg::hermitian_eigenvalues(m), ArgumentError);
}
