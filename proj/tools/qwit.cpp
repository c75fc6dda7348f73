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

// qwit command-line front end.
//
//   qwit census        [--n-qubits N]
//   qwit witness       REFERENCE
//   qwit train-known   REFERENCE
//   qwit train-unknown
//   qwit classify      MODEL STATE
//
// Settings come from flags, then from a JSON --config file, then defaults.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qwit/cli.hpp"

namespace {

using qwit::json;

/// Fills settings that were not given on the command line from `path`.
void apply_config_file(const std::string &path, CLI::App &app, qwit::cli::RunConfig &config,
                       std::string &mode) {
    json j;
    try {
        j = json::parse(qwit::read_file(path));
    } catch (const json::exception &e) {
        throw qwit::ParseError("config " + path + ": " + e.what());
    }
    if (!j.is_object()) {
        throw qwit::ParseError("config " + path + " must be a JSON object");
    }
    auto unset = [&app](const char *flag) { return app.get_option(flag)->count() == 0; };
    try {
        for (const auto &[key, value] : j.items()) {
            if (key == "n_qubits" && unset("--n-qubits")) {
                config.n_qubits = value.get<std::size_t>();
            } else if (key == "layers" && unset("--layers")) {
                config.layers = value.get<std::size_t>();
            } else if (key == "shots" && unset("--shots")) {
                config.shots = value.get<std::int64_t>();
            } else if (key == "mode" && unset("--mode")) {
                mode = value.get<std::string>();
            } else if (key == "beta" && unset("--beta")) {
                config.beta = value.get<double>();
            } else if (key == "threshold" && unset("--threshold")) {
                config.threshold = value.get<double>();
            } else if (key == "seed" && unset("--seed")) {
                config.seed = value.get<std::uint64_t>();
            } else if (key == "restarts" && unset("--restarts")) {
                config.restarts = value.get<std::size_t>();
            } else if (key == "max_iterations" && unset("--max-iterations")) {
                config.max_iterations = value.get<std::size_t>();
            } else if (key == "initial_step" && unset("--initial-step")) {
                config.initial_step = value.get<double>();
            } else if (key == "tolerance" && unset("--tolerance")) {
                config.tolerance = value.get<double>();
            } else if (key == "out_dir" && unset("--out-dir")) {
                config.out_dir = value.get<std::string>();
            }
        }
    } catch (const json::exception &e) {
        throw qwit::ParseError("config " + path + ": " + e.what());
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Entanglement witnesses for REW hypergraph states"};
    app.require_subcommand(1);

    qwit::cli::RunConfig config;
    std::string mode = "exact";
    std::string config_path;
    std::string out_dir = config.out_dir.string();

    app.add_option("--n-qubits", config.n_qubits, "Register width")->capture_default_str();
    app.add_option("--layers", config.layers, "Entangling layers of the ansatz")
        ->capture_default_str();
    app.add_option("--shots", config.shots, "Shots per estimate in shots mode")
        ->capture_default_str();
    app.add_option("--mode", mode, "Readout: exact or shots")->capture_default_str();
    app.add_option("--beta", config.beta, "F_beta weight of recall")->capture_default_str();
    app.add_option("--threshold", config.threshold, "Classification threshold")
        ->capture_default_str();
    app.add_option("--seed", config.seed, "Seed for datasets, restarts and sampling")
        ->capture_default_str();
    app.add_option("--restarts", config.restarts, "Optimizer runs per training")
        ->capture_default_str();
    app.add_option("--max-iterations", config.max_iterations, "Simplex iterations per run")
        ->capture_default_str();
    app.add_option("--initial-step", config.initial_step, "Initial simplex edge (radians)")
        ->capture_default_str();
    app.add_option("--tolerance", config.tolerance, "Simplex size at convergence")
        ->capture_default_str();
    app.add_option("--out-dir", out_dir, "Directory for output files")->capture_default_str();
    app.add_option("--config", config_path, "JSON file with default settings");

    std::string reference;
    std::string model_path;
    std::string state;

    auto *census = app.add_subcommand("census", "Entanglement census of all REW states");
    auto *witness = app.add_subcommand("witness", "Exact projective witness sweep");
    witness->add_option("reference", reference, "Reference sign vector")->required();
    auto *known = app.add_subcommand("train-known", "Learn the exact witness of a reference");
    known->add_option("reference", reference, "Reference sign vector")->required();
    auto *unknown = app.add_subcommand("train-unknown", "Learn a witness from E labels");
    auto *classify = app.add_subcommand("classify", "Classify a state with a saved model");
    classify->add_option("model", model_path, "Model or trainrun JSON")->required();
    classify->add_option("state", state, "Sign vector to classify")->required();

    for (auto *sub : {census, witness, known, unknown, classify}) {
        sub->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            apply_config_file(config_path, app, config, mode);
            if (app.get_option("--out-dir")->count() == 0) {
                out_dir = config.out_dir.string();
            }
        }
        config.out_dir = out_dir;
        config.mode = qwit::cli::parse_mode(mode);
        if (!(config.threshold > 0.0 && config.threshold <= 1.0)) {
            throw qwit::ArgumentError("--threshold must lie in (0, 1]");
        }
        if (!(config.beta > 0.0)) {
            throw qwit::ArgumentError("--beta must be positive");
        }
        if (config.shots < 1) {
            throw qwit::ArgumentError("--shots must be >= 1");
        }
    } catch (const qwit::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return qwit::cli::usage;
    }

    if (*census) {
        return qwit::cli::cmd_census(config, std::cout, std::cerr);
    }
    if (*witness) {
        return qwit::cli::cmd_witness(config, reference, std::cout, std::cerr);
    }
    if (*known) {
        return qwit::cli::cmd_train_known(config, reference, std::cout, std::cerr);
    }
    if (*unknown) {
        return qwit::cli::cmd_train_unknown(config, std::cout, std::cerr);
    }
    const bool shape_overridden =
        app.get_option("--n-qubits")->count() > 0 || app.get_option("--layers")->count() > 0;
    return qwit::cli::cmd_classify(config, model_path, state, shape_overridden, std::cout,
                                   std::cerr);
}
