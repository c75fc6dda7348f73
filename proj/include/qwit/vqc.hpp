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
 * Variational perceptron: layered Ry rotations and CNOT ladders applied to
 * an encoded REW input, read out on |1...1>.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"
#include "qstate.hpp"
#include "rewstates.hpp"
#include "rng.hpp"

namespace qwit {

struct AnsatzConfig {
    std::size_t n_qubits{3};
    std::size_t layers{2};

    /// One Ry per qubit for each layer plus a closing Ry column.
    [[nodiscard]] std::size_t parameter_count() const noexcept {
        return n_qubits * (layers + 1);
    }

    void validate() const {
        if (n_qubits < 1 || n_qubits > max_qubits) {
            throw ArgumentError("ansatz n_qubits out of range");
        }
        if (layers < 1) {
            throw ArgumentError("ansatz needs at least one layer");
        }
    }

    friend bool operator==(const AnsatzConfig &, const AnsatzConfig &) = default;
};

/// Rotation angles in radians, ordered column by column (theta_0 acts on
/// qubit 0 in the first column).
struct Params {
    std::vector<double> theta;

    friend bool operator==(const Params &, const Params &) = default;
};

/// Angles drawn uniformly from [0, 2 pi).
[[nodiscard]] inline Params random_params(const AnsatzConfig &config, Rng &rng) {
    Params p;
    p.theta.resize(config.parameter_count());
    for (auto &t : p.theta) {
        t = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    }
    return p;
}

/**
 * @brief V(theta): for each layer an Ry column followed by CNOTs i -> j for
 * every pair i < j in lexicographic order, then a final Ry column.
 */
[[nodiscard]] inline Circuit ansatz_circuit(const AnsatzConfig &config,
                                            const Params &params) {
    config.validate();
    if (params.theta.size() != config.parameter_count()) {
        throw ArgumentError("ansatz expects " +
                            std::to_string(config.parameter_count()) +
                            " parameters, got " +
                            std::to_string(params.theta.size()));
    }
    Circuit circuit(config.n_qubits);
    std::size_t k = 0;
    for (std::size_t layer = 0; layer <= config.layers; ++layer) {
        for (std::size_t q = 0; q < config.n_qubits; ++q) {
            circuit.add(Gate::ry(q, params.theta[k++]));
        }
        if (layer == config.layers) {
            break;
        }
        for (std::size_t i = 0; i < config.n_qubits; ++i) {
            for (std::size_t j = i + 1; j < config.n_qubits; ++j) {
                circuit.add(Gate::cnot(i, j));
            }
        }
    }
    return circuit;
}

/// Activation on an already encoded input state.
[[nodiscard]] inline double vqc_activation(const Circuit &ansatz,
                                           const PureState &encoded,
                                           const Readout &readout = {}) {
    return read_all_ones(run_circuit(ansatz, encoded), readout);
}

/// Probability (or shot estimate) of |1...1> after V(theta) U_i(input) |0>.
[[nodiscard]] inline double vqc_activation(const AnsatzConfig &config,
                                           const Params &params,
                                           const SignVector &input,
                                           const Readout &readout = {}) {
    if (input.n_qubits() != config.n_qubits) {
        throw SizeError("input width does not match the ansatz");
    }
    Circuit full = encoding_circuit(input);
    full.append(ansatz_circuit(config, params));
    return read_all_ones(run_circuit(full, zero_state(config.n_qubits)), readout);
}

/// Strict threshold test on the activation.
[[nodiscard]] inline bool classify(const AnsatzConfig &config, const Params &params,
                                   const SignVector &input, double threshold,
                                   const Readout &readout = {}) {
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        throw ArgumentError("threshold must lie in (0, 1]");
    }
    return vqc_activation(config, params, input, readout) > threshold;
}

} // namespace qwit
