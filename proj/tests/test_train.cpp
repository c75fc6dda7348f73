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

#include "qwit/train.hpp"

using namespace qwit;

namespace {

const SignVector fig4 = SignVector::from_id(3, 96);

const std::vector<double> &table3() {
    static const auto t = entanglement_table(3);
    return t;
}

OptimizerConfig optimizer(std::size_t restarts, std::uint64_t seed) {
    OptimizerConfig opt;
    opt.restarts = restarts;
    opt.seed = RngSeed{seed};
    return opt;
}

void expect_non_increasing(const std::vector<double> &trace) {
    for (std::size_t i = 1; i < trace.size(); ++i) {
        ASSERT_LE(trace[i], trace[i - 1]) << "at " << i;
    }
}

void expect_warm_start_rule(const std::vector<RestartSummary> &runs) {
    // a warm run follows a random run that beat 1.5x the best cost so far
    double best = INFINITY;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        best = std::min(best, runs[r].cost);
        const bool seeds_next = !runs[r].warm_start && runs[r].cost < 1.5 * best;
        if (r + 1 < runs.size()) {
            ASSERT_EQ(runs[r + 1].warm_start, seeds_next) << "restart " << r + 1;
        }
    }
}

} // namespace

TEST(TrainKnown, ReproducesExactWitness) {
    const auto ds = build_known_dataset(fig4, RngSeed{1}, &table3());
    const auto run = train_known(fig4, ds, AnsatzConfig{}, optimizer(50, 1));
    EXPECT_EQ(run.cost_name, "cross_entropy");
    EXPECT_EQ(run.restarts.size(), 50U);
    EXPECT_EQ(run.train_metrics.tp, 18U);
    EXPECT_EQ(run.train_metrics.fp, 0U);
    EXPECT_EQ(run.train_metrics.fn, 0U);
    ASSERT_TRUE(run.test_metrics.has_value());
    EXPECT_EQ(run.test_metrics->tp, 18U);
    EXPECT_EQ(run.test_metrics->fp, 0U);
    EXPECT_EQ(run.test_metrics->tp + run.test_metrics->fp + run.test_metrics->fn +
                  run.test_metrics->tn,
              256U);

    const auto exact = detection_sweep(make_witness(fig4), {}, &table3());
    std::vector<double> exact_acts;
    for (const auto &r : exact.records) exact_acts.push_back(r.activation);
    const auto learnt = activation_spectrum(run.config, run.best_params);
    EXPECT_LT(mean_activation_gap(exact_acts, learnt), 0.15);
    for (StateId id = 0; id < 256; ++id) {
        ASSERT_EQ(learnt[id] > 0.5, exact.records[id].detected) << id;
    }
    const double ce = mean_activation_cross_entropy(exact_acts, learnt);
    EXPECT_GT(ce, 0.0);
    EXPECT_TRUE(std::isfinite(ce));
}

TEST(TrainKnown, BestRunIsLowestCostAndTraceNonIncreasing) {
    const auto ds = build_known_dataset(fig4, RngSeed{2}, &table3());
    const auto run = train_known(fig4, ds, AnsatzConfig{}, optimizer(6, 2));
    const auto lowest = std::min_element(
        run.restarts.begin(), run.restarts.end(),
        [](const RestartSummary &a, const RestartSummary &b) { return a.cost < b.cost; });
    EXPECT_EQ(run.best_restart, lowest->index);
    EXPECT_EQ(run.best_cost, lowest->cost);
    EXPECT_EQ(run.best_params.theta, lowest->theta);
    expect_non_increasing(run.cost_trace);
    expect_warm_start_rule(run.restarts);
    ASSERT_TRUE(run.train_metrics.cross_entropy.has_value());
    EXPECT_NEAR(*run.train_metrics.cross_entropy, run.best_cost, 1e-12);
}

TEST(TrainKnown, SingleStateDataset) {
    Dataset ds{3, {{96, 1}}, Split::Train, Provenance::Known, RngSeed{0}};
    const auto run = train_known(fig4, ds, AnsatzConfig{}, optimizer(3, 4));
    EXPECT_GT(vqc_activation(run.config, run.best_params, fig4), 0.5);
    EXPECT_EQ(run.train_metrics.tp, 1U);
}

TEST(TrainKnown, Deterministic) {
    const auto ds = build_known_dataset(fig4, RngSeed{5}, &table3());
    const auto a = train_known(fig4, ds, AnsatzConfig{}, optimizer(2, 5));
    const auto b = train_known(fig4, ds, AnsatzConfig{}, optimizer(2, 5));
    EXPECT_EQ(a.best_params, b.best_params);
    EXPECT_EQ(a.cost_trace, b.cost_trace);
}

TEST(TrainKnown, ShotsModeIsReproducible) {
    Dataset ds{3, {{96, 1}, {0, 0}}, Split::Train, Provenance::Known, RngSeed{0}};
    auto opt = optimizer(1, 6);
    opt.max_iterations = 40;
    TrainOptions options;
    options.readout = Readout{EvalMode::Shots, 256, RngSeed{6}};
    const auto a = train_known(fig4, ds, AnsatzConfig{}, opt, options);
    const auto b = train_known(fig4, ds, AnsatzConfig{}, opt, options);
    EXPECT_EQ(a.cost_trace, b.cost_trace);
    EXPECT_EQ(a.best_params, b.best_params);
}

TEST(TrainKnown, WidthMismatch) {
    Dataset ds{2, {{1, 1}}, Split::Train, Provenance::Known, RngSeed{0}};
    EXPECT_THROW((void)train_known(fig4, ds, AnsatzConfig{}, optimizer(1, 1)), SizeError);
}

TEST(TrainUnknown, PrecisionFirstSelection) {
    const auto [train, test] = build_unknown_dataset(3, RngSeed{1}, &table3());
    const auto run = train_unknown(train, test, AnsatzConfig{}, optimizer(20, 1));
    EXPECT_EQ(run.cost_name, "one_minus_f_beta");
    EXPECT_NEAR(run.beta, 1.0 / 30.0, 0);

    auto clean = [](const RestartSummary &s) { return s.fp == 0 && s.tp > 0; };
    const bool any_clean = std::any_of(run.restarts.begin(), run.restarts.end(), clean);
    const auto &best = run.restarts[run.best_restart];
    EXPECT_EQ(clean(best), any_clean);
    for (const auto &r : run.restarts) {
        if (clean(r) == clean(best)) {
            EXPECT_GE(r.cost, best.cost);
        }
    }
    expect_warm_start_rule(run.restarts);
    EXPECT_NEAR(run.train_metrics.f_beta_cost(), run.best_cost, 1e-12);
    ASSERT_TRUE(run.test_metrics.has_value());
    EXPECT_EQ(run.test_metrics->tp + run.test_metrics->fn, test.count_label(1));

    // no activation of the learnt witness reaches 1
    const auto spectrum = activation_spectrum(run.config, run.best_params);
    EXPECT_LT(*std::max_element(spectrum.begin(), spectrum.end()), 1.0 - 1e-6);
}

TEST(TrainUnknown, Succeeds) {
    const auto [train, test] = build_unknown_dataset(3, RngSeed{1}, &table3());
    const auto run = train_unknown(train, test, AnsatzConfig{}, optimizer(100, 1));
    EXPECT_EQ(run.train_metrics.fp, 0U);
    EXPECT_GT(run.train_metrics.tp, 0U);
    EXPECT_EQ(*run.train_metrics.precision, 1.0);
    EXPECT_EQ(run.test_metrics->fp, 0U);
}

TEST(TrainUnknown, RejectsBadBeta) {
    const auto [train, test] = build_unknown_dataset(3, RngSeed{1}, &table3());
    TrainOptions options;
    options.beta = 0.0;
    EXPECT_THROW((void)train_unknown(train, test, AnsatzConfig{}, optimizer(1, 1), options),
                 ArgumentError);
}

TEST(Spectrum, HelpersAndComplementSymmetry) {
    auto rng = make_rng(RngSeed{3});
    const auto p = random_params(AnsatzConfig{}, rng);
    const auto s = activation_spectrum(AnsatzConfig{}, p);
    ASSERT_EQ(s.size(), 256U);
    for (StateId id = 0; id < 256; ++id) {
        ASSERT_EQ(s[id], s[255 - id]);
    }
    EXPECT_EQ(mean_activation_gap(s, s), 0.0);
    EXPECT_NEAR(mean_activation_gap({0.0, 1.0}, {0.5, 0.5}), 0.5, 1e-15);
    EXPECT_NEAR(mean_activation_cross_entropy({0.5}, {0.5}), std::log(2.0), 1e-15);
    EXPECT_THROW((void)mean_activation_gap({0.0}, {0.0, 1.0}), SizeError);
}
