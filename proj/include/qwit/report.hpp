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
 * CSV and JSON serialization of census rows, detection reports, datasets,
 * models and training runs.
 *
 * Sign vectors are written as compact bitstrings (f(0) first) in CSV files
 * and in the bracketed form in JSON.
 */
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dataset.hpp"
#include "entanglement.hpp"
#include "errors.hpp"
#include "metrics.hpp"
#include "train.hpp"
#include "vqc.hpp"
#include "witness.hpp"

namespace qwit {

using json = nlohmann::ordered_json;

/// Shortest stable text for a double: 15 significant digits.
[[nodiscard]] inline std::string format_double(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.15g", value + 0.0);
    return buffer;
}

/// Writes `contents` to `path` through a sibling temporary and a rename.
inline void write_file_atomic(const std::filesystem::path &path, const std::string &contents) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        out << contents;
        out.flush();
        if (!out) {
            throw IoError("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move " + tmp.string() + " to " + path.string());
    }
}

[[nodiscard]] inline std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// census.csv: state_id,sign_vector,E,alpha (both snapped to the 1e-9 grid)
inline void write_census_csv(std::ostream &out, const std::vector<EntanglementRecord> &records) {
    out << "state_id,sign_vector,E,alpha\n";
    for (const auto &r : records) {
        out << r.state_id << ',' << to_bitstring(r.signs) << ','
            << format_double(entanglement_bucket(r.E)) << ','
            << format_double(entanglement_bucket(r.alpha)) << '\n';
    }
}

[[nodiscard]] inline json histogram_json(const std::map<double, std::size_t> &histogram) {
    json h = json::object();
    for (const auto &[e, count] : histogram) {
        h[format_double(e)] = count;
    }
    return h;
}

// activations.csv for the exact witness:
// state_id,sign_vector,activation,E,detected
inline void write_detection_csv(std::ostream &out, const DetectionReport &report) {
    const auto n = report.reference.n_qubits();
    out << "state_id,sign_vector,activation,E,detected\n";
    for (const auto &r : report.records) {
        out << r.state_id << ',' << to_bitstring(SignVector::from_id(n, r.state_id)) << ','
            << format_double(r.activation) << ',' << format_double(entanglement_bucket(r.E)) << ','
            << (r.detected ? 1 : 0) << '\n';
    }
}

[[nodiscard]] inline json detection_summary_json(const DetectionReport &report) {
    json j;
    j["reference"] = format_sign_vector(report.reference);
    j["reference_id"] = report.reference.id();
    j["n_qubits"] = report.reference.n_qubits();
    j["alpha"] = report.alpha;
    j["detected_count"] = report.detected_count;
    j["detected_E_histogram"] = histogram_json(report.detected_histogram());
    return j;
}

// dataset.csv: state_id,sign_vector,label,split
inline void write_dataset_csv(std::ostream &out, const std::vector<const Dataset *> &sets) {
    out << "state_id,sign_vector,label,split\n";
    for (const auto *ds : sets) {
        for (const auto &item : ds->items) {
            out << item.state_id << ','
                << to_bitstring(SignVector::from_id(ds->n_qubits, item.state_id)) << ','
                << item.label << ',' << split_name(ds->split) << '\n';
        }
    }
}

[[nodiscard]] inline json metrics_json(const Metrics &m) {
    json j;
    j["tp"] = m.tp;
    j["fp"] = m.fp;
    j["fn"] = m.fn;
    j["tn"] = m.tn;
    j["precision"] = m.precision ? json(*m.precision) : json(nullptr);
    j["recall"] = m.recall ? json(*m.recall) : json(nullptr);
    j["f_beta"] = m.f_beta;
    j["cross_entropy"] = m.cross_entropy ? json(*m.cross_entropy) : json(nullptr);
    return j;
}

/// Persisted model: ansatz shape, seed, and angles.
[[nodiscard]] inline json params_json(const AnsatzConfig &config, const Params &params,
                                      RngSeed seed) {
    json j;
    j["n_qubits"] = config.n_qubits;
    j["layers"] = config.layers;
    j["seed"] = seed.value;
    j["theta"] = params.theta;
    return j;
}

struct Model {
    AnsatzConfig config;
    Params params;
    RngSeed seed;
};

/// Reads a model from either a params object or a training run (its
/// "model" member). Throws ParseError on malformed or inconsistent input.
[[nodiscard]] inline Model parse_model(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw ParseError(std::string("model is not valid JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("model")) {
        j = j["model"];
    }
    try {
        Model m;
        m.config.n_qubits = j.at("n_qubits").get<std::size_t>();
        m.config.layers = j.at("layers").get<std::size_t>();
        m.seed.value = j.value("seed", std::uint64_t{0});
        m.params.theta = j.at("theta").get<std::vector<double>>();
        m.config.validate();
        if (m.params.theta.size() != m.config.parameter_count()) {
            throw ParseError("model has " + std::to_string(m.params.theta.size()) +
                             " angles but its ansatz needs " +
                             std::to_string(m.config.parameter_count()));
        }
        for (double t : m.params.theta) {
            if (!std::isfinite(t)) {
                throw ParseError("model angles must be finite");
            }
        }
        return m;
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed model: ") + e.what());
    } catch (const ArgumentError &e) {
        throw ParseError(std::string("malformed model: ") + e.what());
    }
}

[[nodiscard]] inline json train_run_json(const TrainRun &run) {
    json j;
    j["model"] = params_json(run.config, run.best_params, run.seed);
    j["cost"] = run.cost_name;
    j["threshold"] = run.threshold;
    j["beta"] = run.beta;
    j["best_cost"] = run.best_cost;
    j["best_restart"] = run.best_restart;
    j["train_metrics"] = metrics_json(run.train_metrics);
    j["test_metrics"] = run.test_metrics ? metrics_json(*run.test_metrics) : json(nullptr);
    j["cost_trace"] = run.cost_trace;
    json restarts = json::array();
    for (const auto &r : run.restarts) {
        json s;
        s["index"] = r.index;
        s["warm_start"] = r.warm_start;
        s["cost"] = r.cost;
        s["iterations"] = r.iterations;
        s["evaluations"] = r.evaluations;
        s["tp"] = r.tp;
        s["fp"] = r.fp;
        s["theta"] = r.theta;
        restarts.push_back(std::move(s));
    }
    j["restarts"] = std::move(restarts);
    return j;
}

} // namespace qwit
