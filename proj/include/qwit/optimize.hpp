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
 * Derivative-free minimization on a polytope of N+1 points (Nelder-Mead).
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace qwit {

struct OptimizerConfig {
    std::size_t max_iterations{2000};
    /// Edge length of the initial simplex.
    double initial_step{0.5};
    /// Stop once every vertex lies within this distance (max norm) of the best.
    double convergence_tolerance{1e-6};
    /// Independent optimizer runs made by the training loops.
    std::size_t restarts{50};
    /// A finished run whose cost is below this level seeds the next run.
    /// Zero or negative selects 1.5 x the best cost seen so far.
    double warm_start_threshold{0.0};
    RngSeed seed{};

    void validate() const {
        if (max_iterations == 0 || !(initial_step > 0.0) ||
            !(convergence_tolerance > 0.0) || restarts == 0) {
            throw ArgumentError(
                "optimizer iterations, step, tolerance and restarts must be positive");
        }
    }
};

struct MinimizeResult {
    std::vector<double> x;
    double cost{0.0};
    /// Best cost after each iteration (non-increasing).
    std::vector<double> trace;
    std::size_t iterations{0};
    std::size_t evaluations{0};
    bool converged{false};
};

using CostFunction = std::function<double(const std::vector<double> &)>;

/**
 * @brief Nelder-Mead simplex search from `x0`.
 *
 * Deterministic for a given `x0` and config. Reflection 1, expansion 2,
 * contraction 1/2, shrink 1/2; ties keep the earlier vertex, so a constant
 * cost returns `x0` unchanged. Throws OptimizationError on a non-finite cost.
 */
[[nodiscard]] inline MinimizeResult minimize(const CostFunction &cost,
                                             const std::vector<double> &x0,
                                             const OptimizerConfig &config) {
    config.validate();
    const std::size_t dim = x0.size();
    if (dim == 0) {
        throw ArgumentError("cannot minimize over zero parameters");
    }
    MinimizeResult result;
    auto evaluate = [&](const std::vector<double> &x) {
        const double value = cost(x);
        ++result.evaluations;
        if (!std::isfinite(value)) {
            std::ostringstream msg;
            msg << "cost returned " << value << " at [";
            for (std::size_t i = 0; i < x.size(); ++i) {
                msg << (i ? ", " : "") << x[i];
            }
            msg << "]";
            throw OptimizationError(msg.str());
        }
        return value;
    };

    std::vector<std::vector<double>> simplex(dim + 1, x0);
    std::vector<double> values(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) {
        simplex[i + 1][i] += config.initial_step;
    }
    for (std::size_t i = 0; i <= dim; ++i) {
        values[i] = evaluate(simplex[i]);
    }

    std::vector<std::size_t> order(dim + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return values[a] < values[b];
        });
        std::vector<std::vector<double>> s(dim + 1);
        std::vector<double> v(dim + 1);
        for (std::size_t i = 0; i <= dim; ++i) {
            s[i] = std::move(simplex[order[i]]);
            v[i] = values[order[i]];
        }
        simplex = std::move(s);
        values = std::move(v);
    };
    auto simplex_size = [&] {
        double size = 0.0;
        for (std::size_t i = 1; i <= dim; ++i) {
            for (std::size_t k = 0; k < dim; ++k) {
                size = std::max(size, std::abs(simplex[i][k] - simplex[0][k]));
            }
        }
        return size;
    };
    auto along = [&](const std::vector<double> &centroid, double t) {
        // centroid + t * (centroid - worst)
        std::vector<double> p(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            p[k] = centroid[k] + t * (centroid[k] - simplex[dim][k]);
        }
        return p;
    };

    sort_simplex();
    while (result.iterations < config.max_iterations) {
        if (simplex_size() < config.convergence_tolerance) {
            result.converged = true;
            break;
        }
        ++result.iterations;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t k = 0; k < dim; ++k) {
                centroid[k] += simplex[i][k];
            }
        }
        for (auto &c : centroid) {
            c /= static_cast<double>(dim);
        }

        auto reflected = along(centroid, 1.0);
        const double f_reflected = evaluate(reflected);
        if (f_reflected < values[0]) {
            auto expanded = along(centroid, 2.0);
            const double f_expanded = evaluate(expanded);
            if (f_expanded < f_reflected) {
                simplex[dim] = std::move(expanded);
                values[dim] = f_expanded;
            } else {
                simplex[dim] = std::move(reflected);
                values[dim] = f_reflected;
            }
        } else if (f_reflected < values[dim - 1]) {
            simplex[dim] = std::move(reflected);
            values[dim] = f_reflected;
        } else {
            const bool outside = f_reflected < values[dim];
            auto contracted = along(centroid, outside ? 0.5 : -0.5);
            const double f_contracted = evaluate(contracted);
            if (f_contracted < (outside ? f_reflected : values[dim])) {
                simplex[dim] = std::move(contracted);
                values[dim] = f_contracted;
            } else {
                for (std::size_t i = 1; i <= dim; ++i) {
                    for (std::size_t k = 0; k < dim; ++k) {
                        simplex[i][k] = simplex[0][k] + 0.5 * (simplex[i][k] - simplex[0][k]);
                    }
                    values[i] = evaluate(simplex[i]);
                }
            }
        }
        sort_simplex();
        result.trace.push_back(values[0]);
    }
    if (!result.converged && simplex_size() < config.convergence_tolerance) {
        result.converged = true;
    }
    result.x = simplex[0];
    result.cost = values[0];
    return result;
}

} // namespace qwit
