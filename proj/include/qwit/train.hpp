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
 * Training loops for the variational witness.
 *
 * Both loops run the simplex optimizer from `restarts` starting points. A
 * start is either a fresh random angle vector or, right after a run that
 * ended below the warm-start threshold, that run's minimum.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dataset.hpp"
#include "metrics.hpp"
#include "optimize.hpp"
#include "qstate.hpp"
#include "rewstates.hpp"
#include "vqc.hpp"
#include "witness.hpp"

namespace qwit {

inline constexpr double default_threshold = 0.5;
inline constexpr double default_beta = 1.0 / 30.0;

struct TrainOptions {
    double threshold{default_threshold};
    double beta{default_beta};
    /// Readout used inside the cost; exact unless reproducing shot noise.
    Readout readout{};
};

struct RestartSummary {
    std::size_t index{0};
    bool warm_start{false};
    double cost{0.0};
    std::size_t iterations{0};
    std::size_t evaluations{0};
    std::vector<double> theta;
    /// Train-set confusion counts of this run's minimum.
    std::size_t tp{0};
    std::size_t fp{0};
};

struct TrainRun {
    AnsatzConfig config;
    Params best_params;
    double best_cost{0.0};
    std::size_t best_restart{0};
    std::vector<double> cost_trace;
    Metrics train_metrics;
    std::optional<Metrics> test_metrics;
    RngSeed seed{};
    std::string cost_name;
    double threshold{default_threshold};
    double beta{default_beta};
    std::vector<RestartSummary> restarts;
};

/// Encoded inputs of a dataset with cached activations for a parameter set.
class DatasetEvaluator {
  public:
    DatasetEvaluator(const AnsatzConfig &config, const Dataset &dataset)
        : config_{config}, labels_{dataset.labels()} {
        if (dataset.n_qubits != config.n_qubits) {
            throw SizeError("dataset width does not match the ansatz");
        }
        for (const auto &item : dataset.items) {
            const auto f = SignVector::from_id(dataset.n_qubits, item.state_id);
            inputs_.push_back(run_circuit(encoding_circuit(f), zero_state(dataset.n_qubits)));
        }
    }

    /// Activations in dataset order. In shots mode, `stream` selects the
    /// sampling seeds so repeated evaluations stay reproducible.
    [[nodiscard]] std::vector<double> activations(const std::vector<double> &theta,
                                                  const Readout &readout,
                                                  std::uint64_t stream = 0) const {
        const auto ansatz = ansatz_circuit(config_, Params{theta});
        std::vector<double> out(inputs_.size());
        for (std::size_t i = 0; i < inputs_.size(); ++i) {
            auto local = readout;
            local.seed = derive_seed(derive_seed(readout.seed, stream), i);
            out[i] = vqc_activation(ansatz, inputs_[i], local);
        }
        return out;
    }

    [[nodiscard]] Metrics metrics(const std::vector<double> &activations,
                                  double threshold, double beta) const {
        std::vector<bool> predicted(activations.size());
        for (std::size_t i = 0; i < activations.size(); ++i) {
            predicted[i] = activations[i] > threshold;
        }
        auto m = compute_metrics(predicted, labels_, beta);
        std::vector<double> y(labels_.begin(), labels_.end());
        m.cross_entropy = cross_entropy(y, activations);
        return m;
    }

    [[nodiscard]] const std::vector<int> &labels() const noexcept { return labels_; }
    [[nodiscard]] std::size_t size() const noexcept { return inputs_.size(); }

  private:
    AnsatzConfig config_;
    std::vector<int> labels_;
    std::vector<PureState> inputs_;
};

namespace detail {

/// Orders two finished runs; true when `a` should replace `b` as best.
using RunPreference = std::function<bool(const RestartSummary &a, const RestartSummary &b)>;

struct RestartOutcome {
    MinimizeResult best;
    std::size_t best_index{0};
    std::vector<RestartSummary> summaries;
};

inline RestartOutcome run_restarts(const AnsatzConfig &config, const OptimizerConfig &opt,
                                   const CostFunction &cost,
                                   const std::function<Metrics(const std::vector<double> &)> &train_metrics,
                                   const RunPreference &prefer) {
    opt.validate();
    config.validate();
    RestartOutcome outcome;
    std::optional<std::vector<double>> pending_warm;
    double best_cost_seen = INFINITY;
    for (std::size_t r = 0; r < opt.restarts; ++r) {
        const bool warm = pending_warm.has_value();
        std::vector<double> x0;
        if (warm) {
            x0 = std::move(*pending_warm);
            pending_warm.reset();
        } else {
            auto rng = make_rng(derive_seed(opt.seed, r));
            x0 = random_params(config, rng).theta;
        }
        auto result = minimize(cost, x0, opt);
        const auto m = train_metrics(result.x);
        RestartSummary summary{r, warm, result.cost, result.iterations, result.evaluations,
                               result.x, m.tp, m.fp};
        best_cost_seen = std::min(best_cost_seen, result.cost);
        const double threshold =
            opt.warm_start_threshold > 0.0 ? opt.warm_start_threshold : 1.5 * best_cost_seen;
        if (!warm && result.cost < threshold) {
            pending_warm = result.x;
        }
        if (outcome.summaries.empty() || prefer(summary, outcome.summaries[outcome.best_index])) {
            outcome.best = std::move(result);
            outcome.best_index = outcome.summaries.size();
        }
        outcome.summaries.push_back(std::move(summary));
    }
    return outcome;
}

} // namespace detail

/**
 * @brief Learns the exact witness of `reference` by minimizing the cross
 * entropy between dataset labels and activations.
 *
 * The best run is the one with the lowest cost. `test_metrics` scores the
 * learnt classifier on every REW state against the exact witness detections.
 */
[[nodiscard]] inline TrainRun train_known(const SignVector &reference, const Dataset &dataset,
                                          const AnsatzConfig &config,
                                          const OptimizerConfig &opt,
                                          const TrainOptions &options = {}) {
    const DatasetEvaluator evaluator(config, dataset);
    std::vector<double> labels(evaluator.labels().begin(), evaluator.labels().end());
    std::uint64_t stream = 0;
    const CostFunction cost = [&](const std::vector<double> &theta) {
        return cross_entropy(labels, evaluator.activations(theta, options.readout, stream++));
    };
    const auto exact_metrics = [&](const std::vector<double> &theta) {
        return evaluator.metrics(evaluator.activations(theta, Readout{}), options.threshold,
                                 options.beta);
    };
    auto outcome = detail::run_restarts(
        config, opt, cost, exact_metrics,
        [](const RestartSummary &a, const RestartSummary &b) { return a.cost < b.cost; });

    TrainRun run;
    run.config = config;
    run.best_params = Params{outcome.best.x};
    run.best_cost = outcome.best.cost;
    run.best_restart = outcome.best_index;
    run.cost_trace = outcome.best.trace;
    run.train_metrics = exact_metrics(outcome.best.x);
    run.seed = opt.seed;
    run.cost_name = "cross_entropy";
    run.threshold = options.threshold;
    run.beta = options.beta;
    run.restarts = std::move(outcome.summaries);

    // full sweep against the exact witness
    const auto witness = make_witness(reference);
    Dataset everything{reference.n_qubits(), {}, Split::Test, Provenance::Known, dataset.seed};
    const auto report = detection_sweep(witness);
    for (const auto &r : report.records) {
        everything.items.push_back({r.state_id, r.detected ? 1 : 0});
    }
    const DatasetEvaluator full(config, everything);
    run.test_metrics =
        full.metrics(full.activations(run.best_params.theta, Readout{}), options.threshold,
                     options.beta);
    return run;
}

/**
 * @brief Learns a witness from entangled/separable labels by minimizing
 * 1 - F_beta at the classification threshold.
 *
 * Runs that make no false positive while detecting at least one entangled
 * train state are always preferred; within each group the lowest cost wins.
 */
[[nodiscard]] inline TrainRun train_unknown(const Dataset &train, const Dataset &test,
                                            const AnsatzConfig &config,
                                            const OptimizerConfig &opt,
                                            const TrainOptions &options = {}) {
    if (!(options.beta > 0.0)) {
        throw ArgumentError("beta must be positive");
    }
    const DatasetEvaluator evaluator(config, train);
    std::uint64_t stream = 0;
    const CostFunction cost = [&](const std::vector<double> &theta) {
        const auto activations = evaluator.activations(theta, options.readout, stream++);
        return evaluator.metrics(activations, options.threshold, options.beta).f_beta_cost();
    };
    const auto exact_metrics = [&](const std::vector<double> &theta) {
        return evaluator.metrics(evaluator.activations(theta, Readout{}), options.threshold,
                                 options.beta);
    };
    auto clean = [](const RestartSummary &s) { return s.fp == 0 && s.tp > 0; };
    auto outcome = detail::run_restarts(
        config, opt, cost, exact_metrics,
        [&](const RestartSummary &a, const RestartSummary &b) {
            if (clean(a) != clean(b)) {
                return clean(a);
            }
            return a.cost < b.cost;
        });

    TrainRun run;
    run.config = config;
    run.best_params = Params{outcome.best.x};
    run.best_cost = outcome.best.cost;
    run.best_restart = outcome.best_index;
    run.cost_trace = outcome.best.trace;
    run.train_metrics = exact_metrics(outcome.best.x);
    run.seed = opt.seed;
    run.cost_name = "one_minus_f_beta";
    run.threshold = options.threshold;
    run.beta = options.beta;
    run.restarts = std::move(outcome.summaries);

    const DatasetEvaluator test_eval(config, test);
    run.test_metrics = test_eval.metrics(test_eval.activations(run.best_params.theta, Readout{}),
                                         options.threshold, options.beta);
    return run;
}

/// Activation of the learnt circuit on every REW state, indexed by StateId.
[[nodiscard]] inline std::vector<double> activation_spectrum(const AnsatzConfig &config,
                                                             const Params &params,
                                                             const Readout &readout = {}) {
    const auto count = sign_vector_count(config.n_qubits);
    const auto ansatz = ansatz_circuit(config, params);
    std::vector<double> out(count);
    for (StateId id = 0; id < count; ++id) {
        const auto f = SignVector::from_id(config.n_qubits, id);
        auto local = readout;
        local.seed = derive_seed(readout.seed, id);
        out[id] = vqc_activation(ansatz,
                                 run_circuit(encoding_circuit(f), zero_state(config.n_qubits)),
                                 local);
    }
    return out;
}

/// Mean over states of the soft cross entropy -[a ln p + (1-a) ln(1-p)]
/// between exact activations `a` and learnt activations `p`.
[[nodiscard]] inline double mean_activation_cross_entropy(const std::vector<double> &exact,
                                                          const std::vector<double> &learnt) {
    if (exact.empty()) {
        return 0.0;
    }
    return cross_entropy(exact, learnt) / static_cast<double>(exact.size());
}

/// Mean |exact - learnt| over states.
[[nodiscard]] inline double mean_activation_gap(const std::vector<double> &exact,
                                                const std::vector<double> &learnt) {
    if (exact.size() != learnt.size()) {
        throw SizeError("activation spectra differ in length");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < exact.size(); ++i) {
        sum += std::abs(exact[i] - learnt[i]);
    }
    return exact.empty() ? 0.0 : sum / static_cast<double>(exact.size());
}

} // namespace qwit
