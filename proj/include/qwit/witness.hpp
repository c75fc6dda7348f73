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
 * Projective entanglement witness W = alpha(H) I - |H><H|.
 *
 * Tr[W rho] = alpha(H) - |<H|psi>|^2, and the overlap is read out as the
 * probability of |1...1> after U_w(H) U_i(psi) |0...0>. A negative value
 * certifies entanglement.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "entanglement.hpp"
#include "errors.hpp"
#include "qstate.hpp"
#include "rewstates.hpp"

namespace qwit {

/// Reference state, its threshold alpha, and the circuit that reads it out.
struct WitnessSpec {
    SignVector reference;
    double alpha;
    double E;
    Circuit circuit;

    /// True when E reaches the largest value found among REW states of this
    /// width (1/2 for three qubits).
    [[nodiscard]] bool maximally_entangled() const {
        return E >= 0.5 - entanglement_tolerance;
    }
};

/// Throws ArgumentError when `reference` is separable: such a witness is
/// nonnegative on every state and detects nothing.
[[nodiscard]] inline WitnessSpec make_witness(const SignVector &reference) {
    const auto measure = entanglement_measure(rew_state(reference));
    if (measure.E < entanglement_tolerance) {
        throw ArgumentError("witness reference " + format_sign_vector(reference) +
                            " is separable");
    }
    return WitnessSpec{reference, measure.alpha, measure.E,
                       witness_circuit(reference)};
}

/// Fidelity of rew_state(input) with the reference, via the perceptron
/// circuit.
[[nodiscard]] inline double witness_activation(const WitnessSpec &w,
                                               const SignVector &input,
                                               const Readout &readout = {}) {
    if (input.n_qubits() != w.reference.n_qubits()) {
        throw SizeError("input and reference widths differ");
    }
    Circuit full = encoding_circuit(input);
    full.append(w.circuit);
    return read_all_ones(run_circuit(full, zero_state(input.n_qubits())), readout);
}

/// alpha - activation; negative means `input` is detected as entangled.
[[nodiscard]] inline double witness_value(const WitnessSpec &w,
                                          const SignVector &input,
                                          const Readout &readout = {}) {
    return w.alpha - witness_activation(w, input, readout);
}

struct DetectionRecord {
    StateId state_id;
    double activation;
    bool detected;
    double E;
};

struct DetectionReport {
    SignVector reference;
    double alpha;
    std::vector<DetectionRecord> records;
    std::size_t detected_count{0};

    /// Bucketed E -> number of detected states with that E.
    [[nodiscard]] std::map<double, std::size_t> detected_histogram() const {
        std::map<double, std::size_t> histogram;
        for (const auto &r : records) {
            if (r.detected) {
                ++histogram[entanglement_bucket(r.E)];
            }
        }
        return histogram;
    }
};

/**
 * @brief Evaluates the witness on every REW state of the reference's width.
 *
 * Detection is the strict comparison activation > alpha. In shots mode each
 * state gets its own seed derived from `readout.seed` and its StateId.
 * `entanglement` may carry precomputed E values indexed by StateId.
 */
[[nodiscard]] inline DetectionReport
detection_sweep(const WitnessSpec &w, const Readout &readout = {},
                const std::vector<double> *entanglement = nullptr) {
    const std::size_t n = w.reference.n_qubits();
    std::vector<double> computed;
    if (entanglement == nullptr) {
        computed = entanglement_table(n);
        entanglement = &computed;
    }
    const auto count = sign_vector_count(n);
    if (entanglement->size() != count) {
        throw SizeError("entanglement table does not cover every REW state");
    }
    DetectionReport report{w.reference, w.alpha, {}, 0};
    report.records.reserve(count);
    for (StateId id = 0; id < count; ++id) {
        auto local = readout;
        local.seed = derive_seed(readout.seed, id);
        const double activation =
            witness_activation(w, SignVector::from_id(n, id), local);
        const bool detected = activation > w.alpha;
        report.records.push_back({id, activation, detected, (*entanglement)[id]});
        report.detected_count += detected ? 1 : 0;
    }
    return report;
}

} // namespace qwit
