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
 * Implementation of the `qwit` command-line subcommands. Each command
 * returns the process exit code: 0 when its post-condition holds.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dataset.hpp"
#include "entanglement.hpp"
#include "errors.hpp"
#include "optimize.hpp"
#include "report.hpp"
#include "rewstates.hpp"
#include "train.hpp"
#include "vqc.hpp"
#include "witness.hpp"

namespace qwit::cli {

enum ExitCode : int {
    ok = 0,
    failure = 1,       // unexpected error
    usage = 2,         // bad input (parse errors, separable reference, ...)
    io = 3,            // output could not be written
    not_achieved = 4,  // ran to completion but the post-condition failed
};

struct RunConfig {
    std::size_t n_qubits{3};
    std::size_t layers{2};
    std::int64_t shots{1024};
    EvalMode mode{EvalMode::Exact};
    double beta{default_beta};
    double threshold{default_threshold};
    std::uint64_t seed{1};
    std::size_t restarts{50};
    std::size_t max_iterations{2000};
    double initial_step{0.5};
    double tolerance{1e-6};
    std::filesystem::path out_dir{"."};

    [[nodiscard]] Readout readout() const { return Readout{mode, shots, RngSeed{seed}}; }
    [[nodiscard]] AnsatzConfig ansatz() const { return AnsatzConfig{n_qubits, layers}; }
    [[nodiscard]] OptimizerConfig optimizer() const {
        OptimizerConfig opt;
        opt.max_iterations = max_iterations;
        opt.initial_step = initial_step;
        opt.convergence_tolerance = tolerance;
        opt.restarts = restarts;
        opt.seed = RngSeed{seed};
        return opt;
    }
};

[[nodiscard]] inline EvalMode parse_mode(const std::string &text) {
    if (text == "exact") {
        return EvalMode::Exact;
    }
    if (text == "shots") {
        return EvalMode::Shots;
    }
    throw ParseError("mode must be 'exact' or 'shots', got '" + text + "'");
}

namespace detail {

inline std::filesystem::path prepare_out_dir(const RunConfig &config) {
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec || !std::filesystem::is_directory(config.out_dir)) {
        throw IoError("cannot create output directory " + config.out_dir.string());
    }
    return config.out_dir;
}

inline std::string dump(const json &j) { return j.dump(2) + "\n"; }

inline std::string optional_text(const std::optional<double> &v) {
    return v ? format_double(*v) : std::string("undefined");
}

/// Runs `body`, mapping library exceptions to exit codes.
template <class Body>
int guarded(std::ostream &err, Body &&body) {
    try {
        return body();
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return io;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const ArgumentError &e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const ResourceError &e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const SizeError &e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }
}

inline SignVector parse_reference(const RunConfig &config, const std::string &text) {
    auto reference = parse_sign_vector(text);
    if (reference.n_qubits() != config.n_qubits) {
        throw ArgumentError("reference has " + std::to_string(reference.n_qubits()) +
                            " qubits but --n-qubits is " + std::to_string(config.n_qubits));
    }
    return reference;
}

} // namespace detail

/// census: writes census.csv and prints the E histogram.
inline int cmd_census(const RunConfig &config, std::ostream &out, std::ostream &err) {
    return detail::guarded(err, [&] {
        const auto records = census_records(config.n_qubits);
        const auto dir = detail::prepare_out_dir(config);
        std::ostringstream csv;
        write_census_csv(csv, records);
        write_file_atomic(dir / "census.csv", csv.str());

        const auto histogram = census_histogram(records);
        std::size_t entangled = 0;
        out << "REW census, " << config.n_qubits << " qubits, " << records.size() << " states\n";
        for (const auto &[e, count] : histogram) {
            out << "  E=" << format_double(e) << ": " << count << '\n';
            entangled += e > 0.0 ? count : 0;
        }
        out << "  entangled: " << entangled << '\n';
        return static_cast<int>(ok);
    });
}

/// witness: exact (or sampled) detection sweep for one reference state.
inline int cmd_witness(const RunConfig &config, const std::string &reference_text,
                       std::ostream &out, std::ostream &err) {
    return detail::guarded(err, [&] {
        const auto reference = detail::parse_reference(config, reference_text);
        const auto witness = make_witness(reference);
        if (!witness.maximally_entangled()) {
            err << "warning: reference has E=" << format_double(witness.E)
                << ", not maximally entangled\n";
        }
        const auto dir = detail::prepare_out_dir(config);
        const auto report = detection_sweep(witness, config.readout());

        std::ostringstream csv;
        write_detection_csv(csv, report);
        write_file_atomic(dir / "activations.csv", csv.str());
        write_file_atomic(dir / "summary.json", detail::dump(detection_summary_json(report)));

        out << "reference " << format_sign_vector(reference) << ", alpha "
            << format_double(witness.alpha) << '\n';
        out << "detected_count: " << report.detected_count << '\n';
        for (const auto &[e, count] : report.detected_histogram()) {
            out << "  detected with E=" << format_double(e) << ": " << count << '\n';
        }
        return static_cast<int>(ok);
    });
}

/// train-known: learns the exact witness of a reference state.
inline int cmd_train_known(const RunConfig &config, const std::string &reference_text,
                           std::ostream &out, std::ostream &err) {
    return detail::guarded(err, [&] {
        const auto reference = detail::parse_reference(config, reference_text);
        const auto witness = make_witness(reference);
        const auto dir = detail::prepare_out_dir(config);
        const auto entanglement = entanglement_table(config.n_qubits);
        const auto dataset = build_known_dataset(reference, RngSeed{config.seed}, &entanglement);

        TrainOptions options;
        options.threshold = config.threshold;
        options.beta = config.beta;
        options.readout = config.readout();
        const auto run = train_known(reference, dataset, config.ansatz(), config.optimizer(), options);

        const auto exact = detection_sweep(witness, Readout{}, &entanglement);
        const auto learnt = activation_spectrum(config.ansatz(), run.best_params);
        std::vector<double> exact_activations;
        for (const auto &r : exact.records) {
            exact_activations.push_back(r.activation);
        }
        std::size_t mismatches = 0;
        std::ostringstream csv;
        csv << "state_id,sign_vector,exact_activation,learnt_activation,E,exact_detected,"
               "learnt_detected\n";
        for (const auto &r : exact.records) {
            const bool learnt_detected = learnt[r.state_id] > config.threshold;
            mismatches += learnt_detected != r.detected ? 1 : 0;
            csv << r.state_id << ','
                << to_bitstring(SignVector::from_id(config.n_qubits, r.state_id)) << ','
                << format_double(r.activation) << ',' << format_double(learnt[r.state_id]) << ','
                << format_double(entanglement_bucket(r.E)) << ',' << (r.detected ? 1 : 0) << ','
                << (learnt_detected ? 1 : 0) << '\n';
        }
        const double mean_ce = mean_activation_cross_entropy(exact_activations, learnt);
        const double gap = mean_activation_gap(exact_activations, learnt);

        json metrics;
        metrics["reference"] = format_sign_vector(reference);
        metrics["alpha"] = witness.alpha;
        metrics["train"] = metrics_json(run.train_metrics);
        metrics["all_states"] = metrics_json(*run.test_metrics);
        metrics["classification_mismatches"] = mismatches;
        metrics["mean_cross_entropy_vs_exact"] = mean_ce;
        metrics["mean_activation_gap"] = gap;

        std::ostringstream ds_csv;
        write_dataset_csv(ds_csv, {&dataset});
        write_file_atomic(dir / "dataset.csv", ds_csv.str());
        write_file_atomic(dir / "activations.csv", csv.str());
        write_file_atomic(dir / "trainrun.json", detail::dump(train_run_json(run)));
        write_file_atomic(dir / "metrics.json", detail::dump(metrics));

        const auto &m = run.train_metrics;
        out << "known witness for " << format_sign_vector(reference) << '\n';
        out << "  dataset: " << dataset.items.size() << " states (" << dataset.count_label(1)
            << " labeled 1)\n";
        out << "  best restart " << run.best_restart << ", cross entropy "
            << format_double(run.best_cost) << '\n';
        out << "  train: tp=" << m.tp << " fp=" << m.fp << " fn=" << m.fn << " tn=" << m.tn << '\n';
        out << "  all states: " << mismatches << " classification mismatches vs exact witness\n";
        out << "  mean cross entropy vs exact activations: " << format_double(mean_ce) << '\n';
        out << "  mean |learnt - exact| activation: " << format_double(gap) << '\n';
        if (m.fp != 0 || m.fn != 0) {
            err << "training did not separate the dataset; best run written to trainrun.json\n";
            return static_cast<int>(not_achieved);
        }
        return static_cast<int>(ok);
    });
}

/// train-unknown: learns a witness from entangled/separable labels.
inline int cmd_train_unknown(const RunConfig &config, std::ostream &out, std::ostream &err) {
    return detail::guarded(err, [&] {
        const auto dir = detail::prepare_out_dir(config);
        const auto entanglement = entanglement_table(config.n_qubits);
        const auto [train, test] =
            build_unknown_dataset(config.n_qubits, RngSeed{config.seed}, &entanglement);

        TrainOptions options;
        options.threshold = config.threshold;
        options.beta = config.beta;
        options.readout = config.readout();
        const auto run = train_unknown(train, test, config.ansatz(), config.optimizer(), options);
        const auto spectrum = activation_spectrum(config.ansatz(), run.best_params);

        // Test restricted to representatives never seen in training.
        Dataset fresh = test;
        std::erase_if(fresh.items, [](const LabeledState &s) { return (s.state_id & 1U) != 0; });
        const DatasetEvaluator fresh_eval(config.ansatz(), fresh);
        const auto fresh_metrics = fresh_eval.metrics(
            fresh_eval.activations(run.best_params.theta, Readout{}), config.threshold, config.beta);

        std::ostringstream csv;
        csv << "state_id,sign_vector,activation,E,entangled,detected\n";
        json detected = json::array();
        for (StateId id = 0; id < spectrum.size(); id += 2) {
            const double e = entanglement_bucket(entanglement[id]);
            const bool hit = spectrum[id] > config.threshold;
            csv << id << ',' << to_bitstring(SignVector::from_id(config.n_qubits, id)) << ','
                << format_double(spectrum[id]) << ',' << format_double(e) << ','
                << (e > 0.0 ? 1 : 0) << ',' << (hit ? 1 : 0) << '\n';
            if (hit) {
                json d;
                d["state_id"] = id;
                d["complement_id"] = id ^ (spectrum.size() - 1);
                d["sign_vector"] = format_sign_vector(SignVector::from_id(config.n_qubits, id));
                d["activation"] = spectrum[id];
                d["E"] = e;
                detected.push_back(std::move(d));
            }
        }
        auto table_row = [](const Metrics &m) {
            json r = metrics_json(m);
            return r;
        };
        json metrics;
        metrics["beta"] = config.beta;
        metrics["threshold"] = config.threshold;
        metrics["train"] = table_row(run.train_metrics);
        metrics["test"] = table_row(*run.test_metrics);
        metrics["test_representatives"] = table_row(fresh_metrics);
        metrics["max_activation"] = *std::max_element(spectrum.begin(), spectrum.end());
        metrics["detected_representatives"] = std::move(detected);

        std::ostringstream ds_csv;
        write_dataset_csv(ds_csv, {&train, &test});
        write_file_atomic(dir / "dataset.csv", ds_csv.str());
        write_file_atomic(dir / "activations.csv", csv.str());
        write_file_atomic(dir / "trainrun.json", detail::dump(train_run_json(run)));
        write_file_atomic(dir / "metrics.json", detail::dump(metrics));

        auto row = [&](const char *name, const Metrics &m) {
            out << "  " << std::left << std::setw(24) << name << std::setw(10)
                << format_double(std::round(m.f_beta * 1e4) / 1e4) << std::setw(11)
                << detail::optional_text(m.precision) << detail::optional_text(m.recall) << '\n';
        };
        out << "unknown witness, beta " << format_double(config.beta) << ", best restart "
            << run.best_restart << '\n';
        out << "  " << std::left << std::setw(24) << "" << std::setw(10) << "F_beta"
            << std::setw(11) << "precision" << "recall\n";
        row("train", run.train_metrics);
        row("test", *run.test_metrics);
        row("test (representatives)", fresh_metrics);
        out << "  detected representatives:";
        for (StateId id = 0; id < spectrum.size(); id += 2) {
            if (spectrum[id] > config.threshold) {
                out << ' ' << id << "(E=" << format_double(entanglement_bucket(entanglement[id]))
                    << ')';
            }
        }
        out << '\n';
        const auto &m = run.train_metrics;
        if (m.fp != 0 || m.tp == 0) {
            err << "no run reached precision 1 with a detection; best run written to "
                   "trainrun.json\n";
            return static_cast<int>(not_achieved);
        }
        return static_cast<int>(ok);
    });
}

/// classify: evaluates a saved model on one state. `shape_overridden` marks
/// whether --n-qubits/--layers were given and must match the model.
inline int cmd_classify(const RunConfig &config, const std::filesystem::path &model_path,
                        const std::string &state_text, bool shape_overridden, std::ostream &out,
                        std::ostream &err) {
    return detail::guarded(err, [&] {
        const auto model = parse_model(read_file(model_path));
        if (shape_overridden && !(model.config == config.ansatz())) {
            throw ArgumentError("model shape (" + std::to_string(model.config.n_qubits) +
                                " qubits, " + std::to_string(model.config.layers) +
                                " layers) does not match the requested configuration");
        }
        const auto state = parse_sign_vector(state_text);
        if (state.n_qubits() != model.config.n_qubits) {
            throw ArgumentError("state has " + std::to_string(state.n_qubits()) +
                                " qubits but the model expects " +
                                std::to_string(model.config.n_qubits));
        }
        const double activation =
            vqc_activation(model.config, model.params, state, config.readout());
        const bool detected = activation > config.threshold;
        out << "activation: " << format_double(activation) << '\n';
        out << "verdict: " << (detected ? "entangled" : "not detected") << '\n';
        return static_cast<int>(ok);
    });
}

} // namespace qwit::cli
