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
 * Dense statevector simulation: pure states, the gate set, circuits, and
 * measurement (exact probabilities and sampled shots).
 *
 * Qubit 0 is the most significant bit of a basis index, i.e. for three qubits
 * the basis state |q0 q1 q2> has index 4*q0 + 2*q1 + q2.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace qwit {

using Complex = std::complex<double>;

inline constexpr std::size_t max_qubits = 20;
inline constexpr double norm_tolerance = 1e-12;

/// Bit mask selecting `qubit` in a basis index of an `n_qubits` register.
[[nodiscard]] constexpr std::size_t qubit_mask(std::size_t n_qubits,
                                               std::size_t qubit) noexcept {
    return std::size_t{1} << (n_qubits - 1 - qubit);
}

/**
 * @brief Normalized pure state of `n` qubits stored as 2^n dense amplitudes.
 *
 * Construction validates the length and the norm; afterwards the state is a
 * plain value that can be copied and shared freely.
 */
class PureState {
  public:
    /// Takes ownership of `amplitudes`; throws unless they form a unit vector
    /// of length 2^n, 1 <= n <= max_qubits.
    explicit PureState(std::vector<Complex> amplitudes)
        : n_qubits_{qubits_for_length(amplitudes.size())},
          amplitudes_{std::move(amplitudes)} {
        const double norm = squared_norm();
        if (std::abs(norm - 1.0) > norm_tolerance) {
            throw ArgumentError("state is not normalized: squared norm " +
                                std::to_string(norm));
        }
    }

    /// Rescales `amplitudes` to unit norm before constructing the state.
    [[nodiscard]] static PureState normalized(std::vector<Complex> amplitudes) {
        double norm = 0.0;
        for (const auto &a : amplitudes) {
            norm += std::norm(a);
        }
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            throw ArgumentError("cannot normalize a zero or non-finite vector");
        }
        const double scale = 1.0 / std::sqrt(norm);
        for (auto &a : amplitudes) {
            a *= scale;
        }
        return PureState(std::move(amplitudes));
    }

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept {
        return amplitudes_.size();
    }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] const Complex &operator[](std::size_t index) const {
        return amplitudes_[index];
    }

    [[nodiscard]] double squared_norm() const noexcept {
        double norm = 0.0;
        for (const auto &a : amplitudes_) {
            norm += std::norm(a);
        }
        return norm;
    }

    friend bool operator==(const PureState &, const PureState &) = default;

  private:
    friend class StateBuffer;

    static std::size_t qubits_for_length(std::size_t length) {
        if (length < 2 || (length & (length - 1)) != 0) {
            throw SizeError("amplitude count must be a power of two >= 2, got " +
                            std::to_string(length));
        }
        std::size_t n = 0;
        while ((std::size_t{1} << n) < length) {
            ++n;
        }
        if (n > max_qubits) {
            throw SizeError("too many qubits: " + std::to_string(n));
        }
        return n;
    }

    struct Unchecked {};
    PureState(Unchecked, std::size_t n_qubits, std::vector<Complex> amplitudes)
        : n_qubits_{n_qubits}, amplitudes_{std::move(amplitudes)} {}

    std::size_t n_qubits_;
    std::vector<Complex> amplitudes_;
};

[[nodiscard]] inline PureState zero_state(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > max_qubits) {
        throw SizeError("n_qubits must be in [1, " + std::to_string(max_qubits) +
                        "], got " + std::to_string(n_qubits));
    }
    std::vector<Complex> amplitudes(std::size_t{1} << n_qubits);
    amplitudes[0] = 1.0;
    return PureState(std::move(amplitudes));
}

enum class GateKind { H, X, Z, Ry, CNOT, MCZ, MCX };

[[nodiscard]] inline const char *gate_name(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::H:
        return "H";
    case GateKind::X:
        return "X";
    case GateKind::Z:
        return "Z";
    case GateKind::Ry:
        return "Ry";
    case GateKind::CNOT:
        return "CNOT";
    case GateKind::MCZ:
        return "MCZ";
    case GateKind::MCX:
        return "MCX";
    }
    return "?";
}

/**
 * @brief One element of the fixed gate set.
 *
 * `qubits` lists every wire the gate touches. For CNOT and MCX the last entry
 * is the target and the rest are controls; MCZ is symmetric in its wires, and
 * an MCZ on one wire is a plain Z. Use the factory functions below, which
 * validate the invariants.
 */
struct Gate {
    GateKind kind{GateKind::H};
    std::vector<std::size_t> qubits;
    double angle{0.0};

    [[nodiscard]] static Gate h(std::size_t q) { return make(GateKind::H, {q}); }
    [[nodiscard]] static Gate x(std::size_t q) { return make(GateKind::X, {q}); }
    [[nodiscard]] static Gate z(std::size_t q) { return make(GateKind::Z, {q}); }
    [[nodiscard]] static Gate ry(std::size_t q, double theta) {
        if (!std::isfinite(theta)) {
            throw ArgumentError("Ry angle must be finite");
        }
        return make(GateKind::Ry, {q}, theta);
    }
    [[nodiscard]] static Gate cnot(std::size_t control, std::size_t target) {
        return make(GateKind::CNOT, {control, target});
    }
    [[nodiscard]] static Gate mcz(std::vector<std::size_t> wires) {
        if (wires.empty()) {
            throw ArgumentError("MCZ needs at least one wire");
        }
        std::sort(wires.begin(), wires.end());
        return make(GateKind::MCZ, std::move(wires));
    }
    [[nodiscard]] static Gate mcx(std::vector<std::size_t> controls,
                                  std::size_t target) {
        controls.push_back(target);
        return make(GateKind::MCX, std::move(controls));
    }

    /// Inverse gate: every kind is self-inverse except Ry(t) -> Ry(-t).
    [[nodiscard]] Gate inverse() const {
        Gate inv = *this;
        if (kind == GateKind::Ry) {
            inv.angle = -angle;
        }
        return inv;
    }

    [[nodiscard]] std::size_t max_qubit() const {
        return *std::max_element(qubits.begin(), qubits.end());
    }

    friend bool operator==(const Gate &, const Gate &) = default;

  private:
    static Gate make(GateKind kind, std::vector<std::size_t> qubits,
                     double angle = 0.0) {
        auto sorted = qubits;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw ArgumentError(std::string("repeated qubit in ") +
                                gate_name(kind) + " gate");
        }
        return Gate{kind, std::move(qubits), angle};
    }
};

/// Ordered gate list over a fixed register width.
class Circuit {
  public:
    explicit Circuit(std::size_t n_qubits) : n_qubits_{n_qubits} {
        if (n_qubits < 1 || n_qubits > max_qubits) {
            throw SizeError("circuit width out of range: " +
                            std::to_string(n_qubits));
        }
    }

    Circuit &add(Gate gate) {
        if (gate.max_qubit() >= n_qubits_) {
            throw IndexError(std::string(gate_name(gate.kind)) +
                             " gate index " + std::to_string(gate.max_qubit()) +
                             " exceeds circuit width " +
                             std::to_string(n_qubits_));
        }
        gates_.push_back(std::move(gate));
        return *this;
    }

    Circuit &append(const Circuit &other) {
        if (other.n_qubits_ != n_qubits_) {
            throw SizeError("cannot append circuits of different widths");
        }
        gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
        return *this;
    }

    /// Gates reversed and individually inverted.
    [[nodiscard]] Circuit inverse() const {
        Circuit inv(n_qubits_);
        for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
            inv.gates_.push_back(it->inverse());
        }
        return inv;
    }

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }

    [[nodiscard]] std::size_t count(GateKind kind) const {
        return static_cast<std::size_t>(
            std::count_if(gates_.begin(), gates_.end(),
                          [kind](const Gate &g) { return g.kind == kind; }));
    }

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    std::size_t n_qubits_;
    std::vector<Gate> gates_;
};

/// Mutable amplitude buffer used while a circuit runs; yields a PureState.
class StateBuffer {
  public:
    explicit StateBuffer(const PureState &state)
        : n_qubits_{state.n_qubits()}, amps_{state.amplitudes_} {}

    void apply(const Gate &gate) {
        for (auto q : gate.qubits) {
            if (q >= n_qubits_) {
                throw IndexError("gate qubit " + std::to_string(q) +
                                 " out of range for " +
                                 std::to_string(n_qubits_) + " qubits");
            }
        }
        const std::size_t dim = amps_.size();
        switch (gate.kind) {
        case GateKind::H: {
            constexpr double r = 0.70710678118654752440084436210485;
            const auto m = qubit_mask(n_qubits_, gate.qubits[0]);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & m) == 0) {
                    const Complex a0 = amps_[i];
                    const Complex a1 = amps_[i | m];
                    amps_[i] = r * (a0 + a1);
                    amps_[i | m] = r * (a0 - a1);
                }
            }
            break;
        }
        case GateKind::X: {
            const auto m = qubit_mask(n_qubits_, gate.qubits[0]);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & m) == 0) {
                    std::swap(amps_[i], amps_[i | m]);
                }
            }
            break;
        }
        case GateKind::Z:
        case GateKind::MCZ: {
            const auto m = mask_of(gate.qubits);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & m) == m) {
                    amps_[i] = -amps_[i];
                }
            }
            break;
        }
        case GateKind::Ry: {
            // Ry(t) = exp(-i t Y / 2) = [[c, -s], [s, c]]
            const double c = std::cos(gate.angle / 2.0);
            const double s = std::sin(gate.angle / 2.0);
            const auto m = qubit_mask(n_qubits_, gate.qubits[0]);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & m) == 0) {
                    const Complex a0 = amps_[i];
                    const Complex a1 = amps_[i | m];
                    amps_[i] = c * a0 - s * a1;
                    amps_[i | m] = s * a0 + c * a1;
                }
            }
            break;
        }
        case GateKind::CNOT:
        case GateKind::MCX: {
            const auto target = qubit_mask(n_qubits_, gate.qubits.back());
            const auto controls = mask_of(
                std::span(gate.qubits).first(gate.qubits.size() - 1));
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & controls) == controls && (i & target) == 0) {
                    std::swap(amps_[i], amps_[i | target]);
                }
            }
            break;
        }
        }
    }

    [[nodiscard]] PureState release() && {
        return PureState(PureState::Unchecked{}, n_qubits_, std::move(amps_));
    }

  private:
    [[nodiscard]] std::size_t
    mask_of(std::span<const std::size_t> qubits) const {
        std::size_t m = 0;
        for (auto q : qubits) {
            m |= qubit_mask(n_qubits_, q);
        }
        return m;
    }

    std::size_t n_qubits_;
    std::vector<Complex> amps_;
};

[[nodiscard]] inline PureState apply_gate(const PureState &state,
                                          const Gate &gate) {
    StateBuffer buffer(state);
    buffer.apply(gate);
    return std::move(buffer).release();
}

[[nodiscard]] inline PureState run_circuit(const Circuit &circuit,
                                           const PureState &input) {
    if (circuit.n_qubits() != input.n_qubits()) {
        throw SizeError("circuit acts on " + std::to_string(circuit.n_qubits()) +
                        " qubits but the input has " +
                        std::to_string(input.n_qubits()));
    }
    StateBuffer buffer(input);
    for (const auto &gate : circuit.gates()) {
        buffer.apply(gate);
    }
    return std::move(buffer).release();
}

/// <a|b>
[[nodiscard]] inline Complex inner_product(const PureState &a,
                                           const PureState &b) {
    if (a.dimension() != b.dimension()) {
        throw SizeError("inner product of states with different dimensions");
    }
    Complex sum = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

/// |<a|b>|^2
[[nodiscard]] inline double overlap_probability(const PureState &a,
                                                const PureState &b) {
    return std::min(1.0, std::norm(inner_product(a, b)));
}

[[nodiscard]] inline double basis_probability(const PureState &state,
                                              std::size_t basis_index) {
    if (basis_index >= state.dimension()) {
        throw IndexError("basis index " + std::to_string(basis_index) +
                         " out of range for dimension " +
                         std::to_string(state.dimension()));
    }
    return std::norm(state[basis_index]);
}

/// Index of |1...1>.
[[nodiscard]] inline std::size_t all_ones_index(std::size_t n_qubits) noexcept {
    return (std::size_t{1} << n_qubits) - 1;
}

/**
 * @brief Measures `state` in the computational basis `shots` times and
 * returns the fraction of outcomes equal to `observable_index`.
 */
[[nodiscard]] inline double sample_shots(const PureState &state,
                                         std::size_t observable_index,
                                         std::int64_t shots, RngSeed seed) {
    if (shots < 1) {
        throw ArgumentError("shots must be >= 1, got " + std::to_string(shots));
    }
    if (observable_index >= state.dimension()) {
        throw IndexError("observable index out of range");
    }
    std::vector<double> cumulative(state.dimension());
    double total = 0.0;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        total += std::norm(state[i]);
        cumulative[i] = total;
    }
    auto rng = make_rng(seed);
    std::int64_t hits = 0;
    for (std::int64_t s = 0; s < shots; ++s) {
        const double u = uniform01(rng) * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        if (it == cumulative.end()) {
            // u rounded up to total: fall back to the last non-empty outcome
            it = std::lower_bound(cumulative.begin(), cumulative.end(), total);
        }
        const auto outcome = static_cast<std::size_t>(it - cumulative.begin());
        hits += (outcome == observable_index) ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(shots);
}

/// How activations are read out of a circuit.
enum class EvalMode { Exact, Shots };

/// Readout configuration shared by every activation routine.
struct Readout {
    EvalMode mode{EvalMode::Exact};
    std::int64_t shots{1024};
    RngSeed seed{};
};

/// Probability (exact) or shot estimate of |1...1> in `state`.
[[nodiscard]] inline double read_all_ones(const PureState &state,
                                          const Readout &readout) {
    const auto index = all_ones_index(state.n_qubits());
    if (readout.mode == EvalMode::Exact) {
        return basis_probability(state, index);
    }
    return sample_shots(state, index, readout.shots, readout.seed);
}

} // namespace qwit
