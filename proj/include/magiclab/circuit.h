// Copyright 2026 The magiclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAGICLAB_CIRCUIT_H
#define MAGICLAB_CIRCUIT_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "magiclab/rng.h"

namespace magiclab {

enum class EventKind : uint8_t { Clifford2, Clifford1, T, Monitor };

/// Recorded monitor outcome; Unset lets downstream consumers choose it.
enum class Outcome : int8_t { Minus = -1, Unset = 0, Plus = +1 };

inline int outcome_sign(Outcome o) {
    return static_cast<int>(o);
}
inline Outcome outcome_of(int sign) {
    return sign > 0 ? Outcome::Plus : Outcome::Minus;
}

struct Event {
    EventKind kind;
    uint32_t layer;  // Clifford layer index; slot events carry the layer they follow
    uint32_t a;
    uint32_t b = 0;
    uint16_t gate = 0;  // C2 id for Clifford2, C1 id for Clifford1
    Outcome outcome = Outcome::Unset;

    bool operator==(const Event &other) const = default;
};

/// A monitored Clifford+T circuit on n qubits starting in |0...0>, followed by Z measurements
/// of the qubits in `outputs`.
struct Circuit {
    size_t n = 0;
    size_t depth = 0;
    std::vector<Event> events;
    std::vector<uint32_t> outputs;

    size_t t_count() const;
    size_t monitor_count() const;
    /// Monitor events in temporal order.
    std::vector<size_t> monitor_indices() const;
    /// Copies the given outcomes (one per monitor, temporal order) into the monitor events.
    void set_monitor_outcomes(const std::vector<Outcome> &outcomes);
    std::vector<Outcome> monitor_outcomes() const;

    /// One event per line: "layer kind qubits [gate|outcome]".
    std::string to_text() const;
    static Circuit from_text(std::string_view text);

    bool operator==(const Circuit &other) const = default;
};

enum class MonitorModel { Uncorrelated, TCorrelated };

struct ModelParams {
    size_t n = 8;
    size_t depth = 8;
    double p = 0.0;
    double q = 0.0;
    double alpha = 0.0;
    MonitorModel model = MonitorModel::Uncorrelated;

    double p_minus() const;
    double p_plus() const;
    /// Largest alpha keeping p_+ and p_- inside [0, 1].
    double alpha_max() const;
    /// Throws std::invalid_argument on out-of-range parameters.
    void validate() const;
};

/// Brickwork circuit: layer l places uniform C_2 gates on pairs (i, i+1) with i = l mod 2,
/// followed by a slot in which each qubit gets a T with probability q and then a monitor.
Circuit generate(const ModelParams &params, Rng &rng);

double expected_t_count(const ModelParams &params);

}  // namespace magiclab

#endif
