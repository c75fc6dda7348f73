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
 * Real equally weighted (REW) states, i.e. hypergraph states:
 *
 *     |psi_f> = 2^{-n/2} sum_x (-1)^{f(x)} |x>
 *
 * together with the circuits that prepare them (Hadamard layer followed by
 * multi-controlled Z gates) and the matching "witness" circuits that rotate a
 * reference state onto |1...1>.
 */
#pragma once

#include <bit>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "qstate.hpp"

namespace qwit {

/// Largest register for which a SignVector still fits a 64-bit StateId.
inline constexpr std::size_t max_state_id_qubits = 6;

/// Integer name of a REW state: bit x holds f(x).
using StateId = std::uint64_t;

/**
 * @brief Truth table of a Boolean function f : {0,1}^n -> {0,1}.
 *
 * `bit(x)` is f(x) for the basis index x (qubit 0 most significant).
 */
class SignVector {
  public:
    explicit SignVector(std::vector<std::uint8_t> bits) : bits_{std::move(bits)} {
        const auto length = bits_.size();
        if (length < 2 || (length & (length - 1)) != 0) {
            throw SizeError("sign vector length must be a power of two >= 2, got " +
                            std::to_string(length));
        }
        n_qubits_ = static_cast<std::size_t>(std::countr_zero(length));
        if (n_qubits_ > max_qubits) {
            throw SizeError("sign vector too long");
        }
        for (auto &b : bits_) {
            if (b > 1) {
                throw ArgumentError("sign vector entries must be 0 or 1");
            }
        }
    }

    /// f == 0 on `n_qubits` qubits.
    [[nodiscard]] static SignVector zeros(std::size_t n_qubits) {
        if (n_qubits < 1 || n_qubits > max_qubits) {
            throw SizeError("n_qubits out of range");
        }
        return SignVector(std::vector<std::uint8_t>(std::size_t{1} << n_qubits, 0));
    }

    [[nodiscard]] static SignVector from_id(std::size_t n_qubits, StateId id) {
        if (n_qubits < 1 || n_qubits > max_state_id_qubits) {
            throw SizeError("state ids are defined for 1..6 qubits");
        }
        const std::size_t length = std::size_t{1} << n_qubits;
        if (length < 64 && id >> length != 0) {
            throw ArgumentError("state id " + std::to_string(id) +
                                " out of range for " + std::to_string(n_qubits) +
                                " qubits");
        }
        std::vector<std::uint8_t> bits(length);
        for (std::size_t x = 0; x < length; ++x) {
            bits[x] = static_cast<std::uint8_t>((id >> x) & 1U);
        }
        return SignVector(std::move(bits));
    }

    [[nodiscard]] StateId id() const {
        if (n_qubits_ > max_state_id_qubits) {
            throw SizeError("state ids are defined for 1..6 qubits");
        }
        StateId id = 0;
        for (std::size_t x = 0; x < bits_.size(); ++x) {
            id |= StateId{bits_[x]} << x;
        }
        return id;
    }

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] std::uint8_t bit(std::size_t x) const { return bits_.at(x); }
    [[nodiscard]] const std::vector<std::uint8_t> &bits() const noexcept {
        return bits_;
    }

    friend bool operator==(const SignVector &, const SignVector &) = default;

  private:
    std::size_t n_qubits_{0};
    std::vector<std::uint8_t> bits_;
};

/// Number of 2^(2^n) sign vectors on `n_qubits` qubits; bounded for n <= 4.
[[nodiscard]] inline std::uint64_t sign_vector_count(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > 4) {
        throw ResourceError("exhaustive REW enumeration supports 1..4 qubits, got " +
                            std::to_string(n_qubits));
    }
    return std::uint64_t{1} << (std::size_t{1} << n_qubits);
}

/// Every sign vector on `n_qubits` qubits, ordered by StateId.
[[nodiscard]] inline std::vector<SignVector> all_sign_vectors(std::size_t n_qubits) {
    const auto count = sign_vector_count(n_qubits);
    std::vector<SignVector> out;
    out.reserve(count);
    for (StateId id = 0; id < count; ++id) {
        out.push_back(SignVector::from_id(n_qubits, id));
    }
    return out;
}

[[nodiscard]] inline SignVector complement(const SignVector &f) {
    auto bits = f.bits();
    for (auto &b : bits) {
        b ^= 1U;
    }
    return SignVector(std::move(bits));
}

/// The member of {f, complement(f)} with f(0) = 0.
[[nodiscard]] inline SignVector representative(const SignVector &f) {
    return f.bit(0) == 0 ? f : complement(f);
}

[[nodiscard]] inline bool is_representative(const SignVector &f) {
    return f.bit(0) == 0;
}

[[nodiscard]] inline std::size_t hamming_distance(const SignVector &a,
                                                  const SignVector &b) {
    if (a.size() != b.size()) {
        throw SizeError("hamming distance of sign vectors with different lengths");
    }
    std::size_t d = 0;
    for (std::size_t x = 0; x < a.size(); ++x) {
        d += a.bit(x) != b.bit(x) ? 1 : 0;
    }
    return d;
}

/// Bracketed form used in figure captions, e.g. "[0, 0, 0, 0, 0, 1, 1, 0]".
[[nodiscard]] inline std::string format_sign_vector(const SignVector &f) {
    std::string out = "[";
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (x != 0) {
            out += ", ";
        }
        out += f.bit(x) != 0 ? '1' : '0';
    }
    out += ']';
    return out;
}

/// Compact form, f(0) first, e.g. "00000110".
[[nodiscard]] inline std::string to_bitstring(const SignVector &f) {
    std::string out;
    out.reserve(f.size());
    for (auto b : f.bits()) {
        out += b != 0 ? '1' : '0';
    }
    return out;
}

/**
 * @brief Parses either the bracketed comma form or a compact bitstring.
 *
 * Whitespace is ignored everywhere; the brackets must come as a pair.
 */
[[nodiscard]] inline SignVector parse_sign_vector(std::string_view text) {
    std::string compact;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) == 0) {
            compact += c;
        }
    }
    if (compact.empty()) {
        throw ParseError("empty sign vector");
    }
    std::vector<std::uint8_t> bits;
    const bool bracketed = compact.front() == '[';
    if (bracketed != (compact.back() == ']')) {
        throw ParseError("unbalanced brackets in sign vector '" +
                         std::string(text) + "'");
    }
    if (bracketed) {
        const std::string_view body =
            std::string_view(compact).substr(1, compact.size() - 2);
        std::size_t pos = 0;
        while (pos <= body.size()) {
            const auto comma = body.find(',', pos);
            const auto token = body.substr(
                pos, comma == std::string_view::npos ? std::string_view::npos
                                                     : comma - pos);
            if (token != "0" && token != "1") {
                throw ParseError("sign vector entries must be 0 or 1, got '" +
                                 std::string(token) + "'");
            }
            bits.push_back(token == "1" ? 1 : 0);
            if (comma == std::string_view::npos) {
                break;
            }
            pos = comma + 1;
        }
    } else {
        for (char c : compact) {
            if (c != '0' && c != '1') {
                throw ParseError("invalid character '" + std::string(1, c) +
                                 "' in sign vector");
            }
            bits.push_back(c == '1' ? 1 : 0);
        }
    }
    try {
        return SignVector(std::move(bits));
    } catch (const SizeError &e) {
        throw ParseError(e.what());
    }
}

[[nodiscard]] inline PureState rew_state(const SignVector &f) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(f.size()));
    std::vector<Complex> amplitudes(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
        amplitudes[x] = f.bit(x) != 0 ? -amp : amp;
    }
    return PureState(std::move(amplitudes));
}

/// Wires set in basis index `x`, ascending.
[[nodiscard]] inline std::vector<std::size_t> support(std::size_t n_qubits,
                                                      std::size_t x) {
    std::vector<std::size_t> wires;
    for (std::size_t q = 0; q < n_qubits; ++q) {
        if ((x & qubit_mask(n_qubits, q)) != 0) {
            wires.push_back(q);
        }
    }
    return wires;
}

/**
 * @brief Hypergraph-state generation subroutine.
 *
 * Greedy synthesis of the diagonal sign pattern `target_signs` with
 * (multi-controlled) Z gates, assuming a preceding Hadamard layer. Targets
 * with f(0) = 1 are replaced by their complement (same state up to a global
 * sign). Indices are visited by Hamming weight 1..n, ascending index within
 * a weight; whenever the accumulated sign at x disagrees with the target a
 * Z controlled on support(x) is emitted, flipping every y that contains x.
 */
[[nodiscard]] inline std::vector<Gate> hsgs(const SignVector &target_signs) {
    const auto target = representative(target_signs);
    const std::size_t n = target.n_qubits();
    const std::size_t dim = target.size();
    std::vector<std::uint8_t> current(dim, 0);
    std::vector<Gate> gates;
    for (std::size_t weight = 1; weight <= n; ++weight) {
        for (std::size_t x = 1; x < dim; ++x) {
            if (static_cast<std::size_t>(std::popcount(x)) != weight ||
                current[x] == target.bit(x)) {
                continue;
            }
            gates.push_back(Gate::mcz(support(n, x)));
            for (std::size_t y = x; y < dim; ++y) {
                if ((y & x) == x) {
                    current[y] ^= 1U;
                }
            }
        }
    }
    return gates;
}

/// U_i: Hadamard on every wire, then the HSGS sign pattern of `f`.
[[nodiscard]] inline Circuit encoding_circuit(const SignVector &f) {
    Circuit circuit(f.n_qubits());
    for (std::size_t q = 0; q < f.n_qubits(); ++q) {
        circuit.add(Gate::h(q));
    }
    for (auto &gate : hsgs(f)) {
        circuit.add(std::move(gate));
    }
    return circuit;
}

/// U_w: inverse of the encoding circuit of `h` followed by X on every wire,
/// mapping rew_state(h) to |1...1> up to a global sign.
[[nodiscard]] inline Circuit witness_circuit(const SignVector &h) {
    Circuit circuit = encoding_circuit(h).inverse();
    for (std::size_t q = 0; q < h.n_qubits(); ++q) {
        circuit.add(Gate::x(q));
    }
    return circuit;
}

} // namespace qwit
