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

#ifndef MAGICLAB_SWEEP_H
#define MAGICLAB_SWEEP_H

#include <cstdint>
#include <string>
#include <vector>

#include "magiclab/circuit.h"
#include "magiclab/msr.h"

namespace magiclab {

struct RealizationOptions {
    /// Drop circuit clusters failing the min(s, d) > log2 n test before compiling.
    bool cluster_filter = true;
    bool compute_entanglement = true;
    QuotientMode quotient = QuotientMode::Group;
};

/// One realization of the sweep pipeline.
struct SweepRow {
    size_t n = 0;
    size_t depth = 0;
    double p = 0;
    double q = 0;
    double alpha = 0;
    uint64_t seed = 0;
    size_t t = 0;
    size_t K = 0;
    size_t K_prime = 0;
    size_t max_block = 0;
    double cpx_log2 = 0;
    double order_param_term = 0;
    size_t ee_half_cut = 0;
    std::vector<size_t> block_sizes;  // not persisted
};

/// generate -> cluster selection -> stitch -> PBC compile -> MSR partition, summed over the
/// retained clusters. The order-parameter term divides by the T count of the whole circuit.
SweepRow run_realization(const ModelParams &params, uint64_t seed, const RealizationOptions &options = {});

/// Same pipeline on a given circuit; `rng` draws the monitor and gadget coins.
SweepRow analyze_circuit(const Circuit &circuit, Rng &rng, const RealizationOptions &options = {});

/// Half-cut entropy (bits) of the Clifford skeleton: T gates dropped, monitors measured.
size_t skeleton_half_cut_entropy(const Circuit &circuit, Rng &rng);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow &row);

}  // namespace magiclab

#endif
