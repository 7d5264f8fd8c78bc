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

#ifndef MAGICLAB_SP_H
#define MAGICLAB_SP_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magiclab/tableau.h"

namespace magiclab {

/// A stabilizer code with one logical qubit holding the magic of a single T gate.
struct CodeState {
    size_t n = 0;
    std::vector<PauliString> generators;  // n - 1 rows of the code group
    PauliString zbar;
    PauliString xbar;
    bool purified = false;
    int d_star = -1;

    /// Logicals anti-commute, everything else commutes, rows are independent and Hermitian.
    bool check_invariants() const;
};

/// T on `qubit` of a pure stabilizer state; nullopt when Z_qubit is a stabilizer (trivial T).
std::optional<CodeState> inject_t(const StabilizerTableau &state, size_t qubit);

void step_clifford(CodeState &cs, const CliffordTableau &gate, size_t a, size_t b = 0);
void step_c2(CodeState &cs, size_t id, size_t a, size_t b);

enum class SpEvent { Trivial, NspUpdate, Sp };

/// Monitor Z_j at TCB depth `depth`. `coin` picks the outcome of an NSP update.
SpEvent step_monitor(CodeState &cs, size_t j, bool coin, int depth);

struct TcbShot {
    int d_star = -1;  // -1: no SP up to d_max
    bool trivial = false;  // the first injection attempt was trivial
};

struct TcbResult {
    size_t n = 0;
    double p = 0;
    size_t d_max = 0;
    std::vector<TcbShot> shots;
    std::vector<double> p_sp;  // [d-1] fraction of shots with d* <= d
    std::vector<double> se;
    size_t trivial_count = 0;
};

struct TcbOptions {
    size_t scramble_depth = 0;  // 0: n^2
    size_t threads = 1;
};

/// Scrambles |0...0> with monitored brickwork, injects one non-trivial T and runs monitored
/// brickwork layers until SP or d_max. Depth 1 holds only the monitors right after the T.
TcbResult tcb_experiment(size_t n, double p, size_t d_max, size_t shots, uint64_t seed, const TcbOptions &options = {});

struct DecayFit {
    double gamma = 0;
    double intercept = 0;
    double r2 = 0;
    size_t points = 0;
};

/// Weighted fit of ln(1 - P(SP)(d)) = c - Gamma d over depths with 1 - P(SP) > 5 / shots.
/// Throws std::runtime_error with fewer than two usable depths.
DecayFit fit_sp_decay(const TcbResult &result);

/// Smallest d with P(SP)(d) >= level.
std::optional<size_t> saturation_depth(const TcbResult &result, double level = 0.99);

struct LineFit {
    double slope = 0;
    double intercept = 0;
    double r2 = 0;
};

LineFit fit_line(const std::vector<double> &x, const std::vector<double> &y);

struct SpTheoryParams {
    size_t gamma = 1;
    double p = 0;
    double w = 1;
    size_t d = 1;
};

struct SpTheory {
    double f = 0;
    double step = 0;  // P(d* = k | NSP before k), k >= 2
    double p_sp = 0;
    double tau_sp = 0;  // infinity when f = 1 or p w = 0
};

/// f = (3/2) 2^gamma / (4^gamma - 1).
double favorable_fraction(size_t gamma);

SpTheory sp_theory(const SpTheoryParams &params);

/// p^{q n}.
double single_layer_sp(double p, double q, size_t n);

/// max_j |gamma_j - 2 S(j)| over the Z_j of a state, S(j) the entropy of qubits before j.
size_t gamma_entropy_gap(const StabilizerTableau &state);

std::string tcb_csv_header();
std::string tcb_csv_row(const TcbResult &result, size_t shot);

}  // namespace magiclab

#endif
