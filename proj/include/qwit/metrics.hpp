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
 * Binary classification metrics and the two training costs.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "errors.hpp"

namespace qwit {

inline constexpr double probability_clamp = 1e-12;

/// -sum_i [y_i ln p_i + (1 - y_i) ln(1 - p_i)], p clamped to
/// [1e-12, 1 - 1e-12]. Labels may be soft (any value in [0, 1]).
[[nodiscard]] inline double cross_entropy(std::span<const double> labels,
                                          std::span<const double> probs) {
    if (labels.size() != probs.size()) {
        throw ArgumentError("cross entropy: " + std::to_string(labels.size()) +
                            " labels but " + std::to_string(probs.size()) +
                            " probabilities");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const double p = std::clamp(probs[i], probability_clamp, 1.0 - probability_clamp);
        sum -= labels[i] * std::log(p) + (1.0 - labels[i]) * std::log1p(-p);
    }
    return sum;
}

/// (1 + b^2) P R / (b^2 P + R); zero when P = R = 0.
[[nodiscard]] inline double f_beta(double precision, double recall, double beta) {
    if (!(beta > 0.0)) {
        throw ArgumentError("beta must be positive");
    }
    const double b2 = beta * beta;
    const double denominator = b2 * precision + recall;
    if (denominator <= 0.0) {
        return 0.0;
    }
    return (1.0 + b2) * precision * recall / denominator;
}

struct Metrics {
    std::size_t tp{0};
    std::size_t fp{0};
    std::size_t fn{0};
    std::size_t tn{0};
    /// Empty when nothing was predicted positive.
    std::optional<double> precision;
    /// Empty when there are no positive labels.
    std::optional<double> recall;
    double f_beta{0.0};
    std::optional<double> cross_entropy;

    /// 1 - F_beta, the cost minimized when learning an unknown witness.
    [[nodiscard]] double f_beta_cost() const { return 1.0 - f_beta; }
};

/**
 * @brief Confusion counts and scores. For F_beta an undefined precision
 * counts as 1 and an undefined recall as 0, so "predict nothing" scores 0.
 */
[[nodiscard]] inline Metrics compute_metrics(const std::vector<bool> &predictions,
                                             std::span<const int> labels,
                                             double beta) {
    if (predictions.size() != labels.size()) {
        throw ArgumentError("metrics: predictions and labels differ in length");
    }
    Metrics m;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != 0 && labels[i] != 1) {
            throw ArgumentError("labels must be 0 or 1");
        }
        const bool positive = labels[i] == 1;
        if (predictions[i]) {
            ++(positive ? m.tp : m.fp);
        } else {
            ++(positive ? m.fn : m.tn);
        }
    }
    if (m.tp + m.fp > 0) {
        m.precision = static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fp);
    }
    if (m.tp + m.fn > 0) {
        m.recall = static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fn);
    }
    m.f_beta = f_beta(m.precision.value_or(1.0), m.recall.value_or(0.0), beta);
    return m;
}

} // namespace qwit
