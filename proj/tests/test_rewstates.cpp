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

#include <cmath>

#include "qwit/rewstates.hpp"
#include "test_support.hpp"

using namespace qwit;
using qwit::testing::dense_unitary;
using qwit::testing::fidelity;
using qwit::testing::matvec;

namespace {

SignVector sv(std::initializer_list<int> bits) {
    std::vector<std::uint8_t> v;
    for (int b : bits) v.push_back(static_cast<std::uint8_t>(b));
    return SignVector(std::move(v));
}

const SignVector fig4 = sv({0, 0, 0, 0, 0, 1, 1, 0});

/// Sign pattern left by a list of Z-type gates on the uniform state,
/// evaluated gate by gate through dense matrices.
std::vector<Complex> dense_encode(std::size_t n, const std::vector<Gate> &gates) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(std::size_t{1} << n));
    std::vector<Complex> v(std::size_t{1} << n, amp);
    for (const auto &g : gates) {
        v = matvec(dense_unitary(g, n), v);
    }
    return v;
}

double perceptron(const SignVector &h, const SignVector &g) {
    const auto out = run_circuit(witness_circuit(h), run_circuit(encoding_circuit(g),
                                                                 zero_state(h.n_qubits())));
    return basis_probability(out, all_ones_index(h.n_qubits()));
}

} // namespace

TEST(SignVectorTest, IdRoundTrip) {
    for (StateId id = 0; id < 256; ++id) {
        ASSERT_EQ(SignVector::from_id(3, id).id(), id);
    }
    EXPECT_EQ(fig4.id(), 96U);
    EXPECT_EQ(SignVector::from_id(3, 96), fig4);
    EXPECT_EQ(SignVector::from_id(6, ~StateId{0}).id(), ~StateId{0});
}

TEST(SignVectorTest, Validation) {
    EXPECT_THROW(sv({0, 1, 0}), SizeError);
    EXPECT_THROW(sv({0}), SizeError);
    EXPECT_THROW(sv({0, 2}), ArgumentError);
    EXPECT_THROW((void)SignVector::from_id(3, 256), ArgumentError);
    EXPECT_THROW((void)SignVector::from_id(7, 0), SizeError);
    EXPECT_THROW((void)sign_vector_count(5), ResourceError);
    EXPECT_EQ(sign_vector_count(3), 256U);
    EXPECT_EQ(all_sign_vectors(2).size(), 16U);
}

TEST(SignVectorTest, FormatAndParse) {
    EXPECT_EQ(format_sign_vector(fig4), "[0, 0, 0, 0, 0, 1, 1, 0]");
    EXPECT_EQ(to_bitstring(fig4), "00000110");
    EXPECT_EQ(parse_sign_vector("[0, 0, 0, 0, 0, 1, 1, 0]"), fig4);
    EXPECT_EQ(parse_sign_vector("[0,0,0,0,0,1,1,0]"), fig4);
    EXPECT_EQ(parse_sign_vector(" 0000 0110 "), fig4);
}

TEST(SignVectorTest, ParseRoundTripProperty) {
    for (StateId id = 0; id < 256; ++id) {
        const auto f = SignVector::from_id(3, id);
        ASSERT_EQ(parse_sign_vector(format_sign_vector(f)), f);
        ASSERT_EQ(parse_sign_vector(to_bitstring(f)), f);
    }
    auto rng = make_rng(RngSeed{1});
    for (int t = 0; t < 50; ++t) {
        const auto f = SignVector::from_id(5, rng() & 0xffffffffULL);
        ASSERT_EQ(parse_sign_vector(format_sign_vector(f)), f);
    }
}

TEST(SignVectorTest, ParseErrors) {
    for (const char *bad : {"", "[]", "[0, 1", "0, 1]", "[0, 2]", "[0,,1]", "012", "abc",
                            "[0, 1, 0]", "000", "[0;1]"}) {
        EXPECT_THROW((void)parse_sign_vector(bad), ParseError) << '"' << bad << '"';
    }
}

TEST(RewState, Examples) {
    const auto plus = rew_state(SignVector::zeros(3));
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(plus[i].real(), 1 / std::sqrt(8.0), 1e-16);
    }
    const auto fig2 = rew_state(sv({0, 0, 0, 0, 1, 1, 1, 1}));
    const auto ref = rew_state(fig4);
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_EQ(fig2[i].real() < 0, i >= 4);
        EXPECT_EQ(ref[i].real() < 0, i == 5 || i == 6);
    }
}

TEST(Complement, Examples) {
    EXPECT_EQ(complement(SignVector::zeros(3)), sv({1, 1, 1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(complement(fig4), sv({1, 1, 1, 1, 1, 0, 0, 1}));
    EXPECT_EQ(complement(complement(fig4)), fig4);
    EXPECT_EQ(representative(complement(fig4)), fig4);
    EXPECT_TRUE(is_representative(fig4));
    EXPECT_FALSE(is_representative(complement(fig4)));
}

TEST(Hsgs, ZeroTargetEmitsNothing) {
    EXPECT_TRUE(hsgs(SignVector::zeros(3)).empty());
    EXPECT_TRUE(hsgs(complement(SignVector::zeros(3))).empty());
}

TEST(Hsgs, WeightOneTargetWithCorrections) {
    // f = 1 only at x = 4 (qubit 0): Z(0) flips 4..7, then 5, 6 and 7 are restored
    const auto f = sv({0, 0, 0, 0, 1, 0, 0, 0});
    const auto gates = hsgs(f);
    ASSERT_FALSE(gates.empty());
    EXPECT_EQ(gates[0].kind, GateKind::MCZ);
    EXPECT_EQ(gates[0].qubits, std::vector<std::size_t>{0});
    const auto encoded = dense_encode(3, gates);
    EXPECT_NEAR(fidelity(encoded, rew_state(f).amplitudes()), 1.0, 1e-14);
}

TEST(Hsgs, TopWireStringIsSingleZ) {
    const auto gates = hsgs(sv({0, 0, 0, 0, 1, 1, 1, 1}));
    ASSERT_EQ(gates.size(), 1U);
    EXPECT_EQ(gates[0].qubits, std::vector<std::size_t>{0});
}

TEST(Hsgs, EveryGateTargetsAnOpenDiscrepancy) {
    for (const auto &f : all_sign_vectors(3)) {
        const auto target = representative(f);
        std::vector<std::uint8_t> current(8, 0);
        for (const auto &g : hsgs(f)) {
            std::size_t x = 0;
            for (auto q : g.qubits) x |= qubit_mask(3, q);
            ASSERT_NE(current[x], target.bit(x));
            for (std::size_t y = 0; y < 8; ++y) {
                if ((y & x) == x) current[y] ^= 1U;
            }
        }
        ASSERT_EQ(current, target.bits());
    }
}

TEST(EncodingCircuit, Examples) {
    const auto c0 = encoding_circuit(SignVector::zeros(3));
    EXPECT_EQ(c0.size(), 3U);
    EXPECT_EQ(c0.count(GateKind::H), 3U);

    const auto c7 = encoding_circuit(sv({0, 0, 0, 0, 0, 0, 0, 1}));
    ASSERT_EQ(c7.size(), 4U);
    EXPECT_EQ(c7.gates()[3].kind, GateKind::MCZ);
    EXPECT_EQ(c7.gates()[3].qubits, (std::vector<std::size_t>{0, 1, 2}));
    const auto out = run_circuit(c7, zero_state(3));
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_EQ(out[i].real() < 0, i == 7);
    }
}

TEST(EncodingCircuit, ExhaustiveAgainstDenseOracle) {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto &f : all_sign_vectors(n)) {
            const auto target = rew_state(f);
            const auto fast = run_circuit(encoding_circuit(f), zero_state(n));
            ASSERT_NEAR(fidelity(fast.amplitudes(), target.amplitudes()), 1.0, 1e-12);
            ASSERT_NEAR(fidelity(dense_encode(n, hsgs(f)), target.amplitudes()), 1.0, 1e-12);
        }
    }
}

TEST(EncodingCircuit, RepresentativesMatchWithoutPhase) {
    for (const auto &f : all_sign_vectors(3)) {
        const auto out = run_circuit(encoding_circuit(f), zero_state(3));
        const auto rep = rew_state(representative(f));
        for (std::size_t i = 0; i < 8; ++i) {
            ASSERT_NEAR(std::abs(out[i] - rep[i]), 0.0, 1e-12);
        }
    }
}

TEST(EncodingCircuit, FourQubitSample) {
    auto rng = make_rng(RngSeed{4});
    for (int t = 0; t < 200; ++t) {
        const auto f = SignVector::from_id(4, rng() & 0xffffU);
        const auto out = run_circuit(encoding_circuit(f), zero_state(4));
        ASSERT_NEAR(fidelity(out.amplitudes(), rew_state(f).amplitudes()), 1.0, 1e-12);
    }
}

TEST(WitnessCircuit, Examples) {
    EXPECT_NEAR(perceptron(fig4, fig4), 1.0, 1e-12);
    EXPECT_NEAR(perceptron(fig4, complement(fig4)), 1.0, 1e-12);
    const auto g = sv({1, 1, 1, 1, 0, 1, 1, 0});
    ASSERT_EQ(hamming_distance(fig4, g), 4U);
    EXPECT_NEAR(perceptron(fig4, g), 0.0, 1e-12);
}

TEST(WitnessCircuit, PerceptronFormulaAllPairs) {
    std::vector<Circuit> enc, wit;
    for (const auto &f : all_sign_vectors(3)) {
        enc.push_back(encoding_circuit(f));
        wit.push_back(witness_circuit(f));
    }
    for (StateId h = 0; h < 256; ++h) {
        for (StateId g = 0; g < 256; ++g) {
            const auto out = run_circuit(wit[h], run_circuit(enc[g], zero_state(3)));
            const double d = static_cast<double>(
                hamming_distance(SignVector::from_id(3, h), SignVector::from_id(3, g)));
            const double expected = std::pow(1.0 - 2.0 * d / 8.0, 2);
            ASSERT_NEAR(basis_probability(out, 7), expected, 1e-12) << h << ' ' << g;
        }
    }
}

TEST(WitnessCircuit, SignFlipSymmetry) {
    auto rng = make_rng(RngSeed{6});
    for (int t = 0; t < 200; ++t) {
        const auto h = SignVector::from_id(3, uniform_below(rng, 256));
        const auto g = SignVector::from_id(3, uniform_below(rng, 256));
        const double a = perceptron(h, g);
        EXPECT_EQ(a, perceptron(h, complement(g)));
        EXPECT_EQ(a, perceptron(complement(h), g));
    }
}
