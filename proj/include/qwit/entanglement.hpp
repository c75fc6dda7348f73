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
 * Multipartite entanglement of pure states.
 *
 * For a bipartition A|B the largest overlap of |psi> with a product state
 * |phi_A>|phi_B> is the largest squared Schmidt coefficient alpha^{AB}. The
 * state's alpha is the maximum of alpha^{AB} over all bipartitions and the
 * entanglement measure is E = 1 - alpha (0 for biseparable states, 1/2 for
 * maximally entangled three-qubit REW states).
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "qstate.hpp"
#include "rewstates.hpp"

namespace qwit {

/// Threshold below which E counts as zero, and the census bucket width.
inline constexpr double entanglement_tolerance = 1e-9;

/// Split of the register into side A and its complement B.
class Bipartition {
  public:
    /// `side_a` must be a nonempty proper subset of [0, n_qubits).
    Bipartition(std::size_t n_qubits, std::vector<std::size_t> side_a)
        : n_qubits_{n_qubits}, side_a_{std::move(side_a)} {
        std::sort(side_a_.begin(), side_a_.end());
        side_a_.erase(std::unique(side_a_.begin(), side_a_.end()), side_a_.end());
        if (side_a_.empty() || side_a_.size() >= n_qubits_) {
            throw ArgumentError("side A must be a nonempty proper subset");
        }
        if (side_a_.back() >= n_qubits_) {
            throw IndexError("bipartition qubit out of range");
        }
    }

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<std::size_t> &side_a() const noexcept {
        return side_a_;
    }
    [[nodiscard]] std::vector<std::size_t> side_b() const {
        std::vector<std::size_t> b;
        for (std::size_t q = 0; q < n_qubits_; ++q) {
            if (!std::binary_search(side_a_.begin(), side_a_.end(), q)) {
                b.push_back(q);
            }
        }
        return b;
    }

    /// "{0}|{1,2}"
    [[nodiscard]] std::string label() const {
        auto set = [](const std::vector<std::size_t> &qs) {
            std::string s = "{";
            for (std::size_t i = 0; i < qs.size(); ++i) {
                s += (i ? "," : "") + std::to_string(qs[i]);
            }
            return s + "}";
        };
        return set(side_a_) + "|" + set(side_b());
    }

    friend bool operator==(const Bipartition &, const Bipartition &) = default;
    friend auto operator<=>(const Bipartition &, const Bipartition &) = default;

  private:
    std::size_t n_qubits_;
    std::vector<std::size_t> side_a_;
};

/**
 * @brief Every unordered bipartition exactly once: side A is the smaller
 * side, and contains qubit 0 when both sides have equal size. Ordered by
 * |A|, then lexicographically.
 */
[[nodiscard]] inline std::vector<Bipartition>
enumerate_bipartitions(std::size_t n_qubits) {
    if (n_qubits < 2 || n_qubits > max_qubits) {
        throw ArgumentError("bipartitions need at least 2 qubits, got " +
                            std::to_string(n_qubits));
    }
    std::vector<Bipartition> out;
    for (std::size_t size = 1; 2 * size <= n_qubits; ++size) {
        std::vector<std::size_t> subset(size);
        for (std::size_t i = 0; i < size; ++i) {
            subset[i] = i;
        }
        while (true) {
            if (2 * size < n_qubits || subset[0] == 0) {
                out.emplace_back(n_qubits, subset);
            }
            // next combination in lexicographic order
            std::size_t i = size;
            while (i > 0 && subset[i - 1] == n_qubits - size + i - 1) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++subset[i - 1];
            for (std::size_t j = i; j < size; ++j) {
                subset[j] = subset[j - 1] + 1;
            }
        }
    }
    return out;
}

/// Row/column index of basis state `x` restricted to `wires`.
[[nodiscard]] inline std::size_t restrict_index(std::size_t n_qubits,
                                                std::size_t x,
                                                const std::vector<std::size_t> &wires) {
    std::size_t r = 0;
    for (auto q : wires) {
        r = (r << 1U) | ((x & qubit_mask(n_qubits, q)) != 0 ? 1U : 0U);
    }
    return r;
}

/**
 * @brief Squared Schmidt coefficients s_k^2 of `state` across `split`,
 * descending. They sum to one for a normalized state.
 *
 * The amplitudes are reshaped into M (rows: side-A bits, columns: side-B
 * bits) and the spectrum of the smaller Gram matrix (M M^H or M^H M) is
 * returned.
 */
[[nodiscard]] inline std::vector<double> schmidt_spectrum(const PureState &state,
                                                          const Bipartition &split) {
    const std::size_t n = state.n_qubits();
    if (split.n_qubits() != n) {
        throw SizeError("bipartition width does not match the state");
    }
    const auto a = split.side_a();
    const auto b = split.side_b();
    const std::size_t rows = std::size_t{1} << a.size();
    const std::size_t cols = std::size_t{1} << b.size();
    std::vector<Complex> m(rows * cols);
    for (std::size_t x = 0; x < state.dimension(); ++x) {
        m[restrict_index(n, x, a) * cols + restrict_index(n, x, b)] = state[x];
    }
    const bool rows_smaller = rows <= cols;
    const std::size_t d = rows_smaller ? rows : cols;
    linalg::ComplexMatrix gram(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Complex sum = 0.0;
            if (rows_smaller) {
                for (std::size_t k = 0; k < cols; ++k) {
                    sum += m[i * cols + k] * std::conj(m[j * cols + k]);
                }
            } else {
                for (std::size_t k = 0; k < rows; ++k) {
                    sum += std::conj(m[k * cols + i]) * m[k * cols + j];
                }
            }
            gram(i, j) = sum;
        }
    }
    auto spectrum = linalg::hermitian_eigenvalues(gram);
    for (auto &s : spectrum) {
        s = std::clamp(s, 0.0, 1.0);
    }
    return spectrum;
}

/// alpha^{AB}: largest squared Schmidt coefficient across `split`.
[[nodiscard]] inline double schmidt_alpha(const PureState &state,
                                          const Bipartition &split) {
    return schmidt_spectrum(state, split).front();
}

struct BipartitionAlpha {
    Bipartition split;
    double alpha;
};

/// E and alpha of a state, with the per-bipartition alphas behind them.
struct EntanglementResult {
    double E{0.0};
    double alpha{1.0};
    std::vector<BipartitionAlpha> per_bipartition;
};

[[nodiscard]] inline EntanglementResult entanglement_measure(const PureState &state) {
    if (state.n_qubits() < 2) {
        throw ArgumentError("entanglement measure needs at least 2 qubits");
    }
    EntanglementResult result;
    result.alpha = 0.0;
    for (auto &split : enumerate_bipartitions(state.n_qubits())) {
        const double alpha = schmidt_alpha(state, split);
        result.alpha = std::max(result.alpha, alpha);
        result.per_bipartition.push_back({std::move(split), alpha});
    }
    result.E = 1.0 - result.alpha;
    return result;
}

[[nodiscard]] inline bool is_separable(const PureState &state) {
    return entanglement_measure(state).E < entanglement_tolerance;
}

/// E snapped to the census bucket grid.
[[nodiscard]] inline double entanglement_bucket(double e) {
    return std::round(e / entanglement_tolerance) * entanglement_tolerance + 0.0;
}

/// One census row.
struct EntanglementRecord {
    StateId state_id{0};
    SignVector signs = SignVector::zeros(1);
    double E{0.0};
    double alpha{1.0};
    std::vector<BipartitionAlpha> per_bipartition;
};

[[nodiscard]] inline EntanglementRecord entanglement_record(const SignVector &f) {
    auto result = entanglement_measure(rew_state(f));
    return EntanglementRecord{f.id(), f, result.E, result.alpha,
                              std::move(result.per_bipartition)};
}

/// Records for every REW state on `n_qubits` qubits (2 <= n <= 4), by id.
[[nodiscard]] inline std::vector<EntanglementRecord> census_records(std::size_t n_qubits) {
    if (n_qubits < 2) {
        throw ArgumentError("census needs at least 2 qubits");
    }
    const auto count = sign_vector_count(n_qubits);
    std::vector<EntanglementRecord> records;
    records.reserve(count);
    for (StateId id = 0; id < count; ++id) {
        records.push_back(entanglement_record(SignVector::from_id(n_qubits, id)));
    }
    return records;
}

/// Histogram of bucketed E values over `records`.
[[nodiscard]] inline std::map<double, std::size_t>
census_histogram(const std::vector<EntanglementRecord> &records) {
    std::map<double, std::size_t> histogram;
    for (const auto &r : records) {
        ++histogram[entanglement_bucket(r.E)];
    }
    return histogram;
}

/// E bucket -> number of REW states with that E.
[[nodiscard]] inline std::map<double, std::size_t> rew_census(std::size_t n_qubits) {
    return census_histogram(census_records(n_qubits));
}

/// E for every REW state on `n_qubits` qubits, indexed by StateId.
[[nodiscard]] inline std::vector<double> entanglement_table(std::size_t n_qubits) {
    std::vector<double> table;
    for (const auto &r : census_records(n_qubits)) {
        table.push_back(r.E);
    }
    return table;
}

} // namespace qwit
