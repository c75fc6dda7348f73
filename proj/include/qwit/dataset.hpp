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
 * Labeled REW datasets for known- and unknown-witness learning.
 *
 * Complementary states (f and NOT f) are the same physical state, so only the
 * representative with f(0) = 0 of each pair is sampled where a construction
 * asks for "half" of a class.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "entanglement.hpp"
#include "errors.hpp"
#include "rewstates.hpp"
#include "rng.hpp"
#include "witness.hpp"

namespace qwit {

struct LabeledState {
    StateId state_id;
    int label;

    friend bool operator==(const LabeledState &, const LabeledState &) = default;
};

enum class Split { Train, Test };
enum class Provenance { Known, Unknown };

[[nodiscard]] inline const char *split_name(Split s) {
    return s == Split::Train ? "train" : "test";
}
[[nodiscard]] inline const char *provenance_name(Provenance p) {
    return p == Provenance::Known ? "known" : "unknown";
}

struct Dataset {
    std::size_t n_qubits{3};
    std::vector<LabeledState> items;
    Split split{Split::Train};
    Provenance provenance{Provenance::Known};
    RngSeed seed{};

    [[nodiscard]] std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(items.size());
        for (const auto &item : items) {
            out.push_back(item.label);
        }
        return out;
    }

    [[nodiscard]] std::size_t count_label(int label) const {
        std::size_t count = 0;
        for (const auto &item : items) {
            count += item.label == label ? 1 : 0;
        }
        return count;
    }

    /// Throws if a StateId occurs twice.
    void check_unique() const {
        std::unordered_set<StateId> seen;
        for (const auto &item : items) {
            if (!seen.insert(item.state_id).second) {
                throw ArgumentError("duplicate state " + std::to_string(item.state_id) +
                                    " in dataset");
            }
        }
    }

    friend bool operator==(const Dataset &, const Dataset &) = default;
};

/// floor(fraction * size) with a small guard against 0.6 * 95 style round-off.
[[nodiscard]] inline std::size_t fraction_count(double fraction, std::size_t size) {
    return static_cast<std::size_t>(std::floor(fraction * static_cast<double>(size) + 1e-9));
}

namespace detail {

inline void append_labeled(std::vector<LabeledState> &out,
                           std::span<const StateId> ids, int label) {
    for (auto id : ids) {
        out.push_back({id, label});
    }
}

} // namespace detail

/// Fractions used by build_known_dataset.
struct KnownDatasetFractions {
    double undetected_entangled{0.6};
    double separable{0.5};
};

/**
 * @brief Training set for reproducing the exact witness of `reference`.
 *
 * Label 1: every state the exact witness detects (both members of each
 * pair). Label 0: a sample of the undetected entangled representatives and a
 * sample of the separable representatives. Items are shuffled with `seed`.
 */
[[nodiscard]] inline Dataset
build_known_dataset(const SignVector &reference, RngSeed seed,
                    const std::vector<double> *entanglement = nullptr,
                    KnownDatasetFractions fractions = {}) {
    const std::size_t n = reference.n_qubits();
    std::vector<double> computed;
    if (entanglement == nullptr) {
        computed = entanglement_table(n);
        entanglement = &computed;
    }
    const auto witness = make_witness(reference);
    const auto report = detection_sweep(witness, Readout{}, entanglement);

    std::vector<StateId> detected;
    std::vector<StateId> undetected_entangled;
    std::vector<StateId> separable;
    for (const auto &r : report.records) {
        if (r.detected) {
            detected.push_back(r.state_id);
            continue;
        }
        if ((r.state_id & 1U) != 0) {
            continue; // f(0) = 1: not a representative
        }
        (r.E < entanglement_tolerance ? separable : undetected_entangled)
            .push_back(r.state_id);
    }

    auto rng = make_rng(seed);
    const auto negatives_entangled = sample_without_replacement(
        undetected_entangled,
        fraction_count(fractions.undetected_entangled, undetected_entangled.size()),
        rng);
    const auto negatives_separable = sample_without_replacement(
        separable, fraction_count(fractions.separable, separable.size()), rng);

    Dataset ds{n, {}, Split::Train, Provenance::Known, seed};
    detail::append_labeled(ds.items, detected, 1);
    detail::append_labeled(ds.items, negatives_entangled, 0);
    detail::append_labeled(ds.items, negatives_separable, 0);
    shuffle(std::span(ds.items), rng);
    return ds;
}

struct UnknownDatasetFractions {
    double entangled{0.6};
    double separable{0.9};
};

/**
 * @brief Train/test split for learning an unknown witness.
 *
 * Labels are 1 for entangled (E > 0) and 0 for separable states. Train holds
 * a sample of the entangled and separable representatives; test holds the
 * remaining representatives plus the complement of every train state.
 */
[[nodiscard]] inline std::pair<Dataset, Dataset>
build_unknown_dataset(std::size_t n_qubits, RngSeed seed,
                      const std::vector<double> *entanglement = nullptr,
                      UnknownDatasetFractions fractions = {}) {
    std::vector<double> computed;
    if (entanglement == nullptr) {
        computed = entanglement_table(n_qubits);
        entanglement = &computed;
    }
    const auto count = sign_vector_count(n_qubits);
    if (entanglement->size() != count) {
        throw SizeError("entanglement table does not cover every REW state");
    }
    const StateId all_ones = count - 1; // id of the complement is id ^ all_ones

    std::vector<StateId> entangled;
    std::vector<StateId> separable;
    for (StateId id = 0; id < count; id += 2) {
        ((*entanglement)[id] < entanglement_tolerance ? separable : entangled).push_back(id);
    }

    auto rng = make_rng(seed);
    const auto train_entangled = sample_without_replacement(
        entangled, fraction_count(fractions.entangled, entangled.size()), rng);
    const auto train_separable = sample_without_replacement(
        separable, fraction_count(fractions.separable, separable.size()), rng);

    Dataset train{n_qubits, {}, Split::Train, Provenance::Unknown, seed};
    detail::append_labeled(train.items, train_entangled, 1);
    detail::append_labeled(train.items, train_separable, 0);

    std::unordered_set<StateId> in_train;
    for (const auto &item : train.items) {
        in_train.insert(item.state_id);
    }
    Dataset test{n_qubits, {}, Split::Test, Provenance::Unknown, seed};
    for (auto id : entangled) {
        if (in_train.count(id) == 0) {
            test.items.push_back({id, 1});
        }
    }
    for (auto id : separable) {
        if (in_train.count(id) == 0) {
            test.items.push_back({id, 0});
        }
    }
    for (const auto &item : train.items) {
        test.items.push_back({item.state_id ^ all_ones, item.label});
    }
    shuffle(std::span(train.items), rng);
    shuffle(std::span(test.items), rng);
    return {std::move(train), std::move(test)};
}

} // namespace qwit
