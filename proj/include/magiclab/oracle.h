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

#ifndef MAGICLAB_ORACLE_H
#define MAGICLAB_ORACLE_H

#include <cstddef>
#include <vector>

#include "magiclab/circuit.h"
#include "magiclab/pbc.h"
#include "magiclab/rng.h"

namespace magiclab {

constexpr size_t kMaxOracleAncillas = 10;

struct EquivalenceReport {
    size_t n = 0;
    size_t t = 0;
    size_t assignments = 0;  // gadget-outcome assignments enumerated
    double record_probability = 0;
    /// TV distance between the direct and PBC-reconstructed output distributions.
    double tv = 0;
    /// Largest |2^t * W(g) / P(record) - 1| over gadget assignments g.
    double gadget_weight_error = 0;
    bool direct_stabilizer = false;
    /// PBC verdict for the first assignment; `pbc_consistent` says all assignments agree.
    bool pbc_stabilizer = false;
    bool pbc_consistent = true;
    std::vector<double> direct;
    std::vector<double> reconstructed;
};

/// Samples a monitor record from the dense circuit (Unset monitors only), then rebuilds
/// the output distribution from the PBC by enumerating every gadget outcome and every
/// output branch, weighting leaves by (1/2)^{#replaced} <A|Pi|A>.
EquivalenceReport check_pbc_equivalence(const Circuit &circuit, Rng &rng, PbcOptions options = {});

}  // namespace magiclab

#endif
