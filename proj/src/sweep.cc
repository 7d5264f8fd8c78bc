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

#include "magiclab/sweep.h"

#include <cstdio>

#include "magiclab/pbc.h"
#include "magiclab/percolation.h"
#include "magiclab/tableau.h"

namespace magiclab {

SweepRow analyze_circuit(const Circuit &circuit, Rng &rng, const RealizationOptions &options) {
    SweepRow row;
    row.n = circuit.n;
    row.depth = circuit.depth;
    row.t = circuit.t_count();
    BigInt cpx = 0;
    for (const auto &cc : find_ccs(map_circuit(circuit), circuit.n)) {
        if (options.cluster_filter && !cc.retained) {
            continue;
        }
        Circuit part = stitch(cc, circuit);
        if (part.t_count() == 0) {
            continue;
        }
        PbcResult res = compile(part, rng);
        MsrPartition msr = partition(res.final_list, res.t, options.quotient);
        cpx += cpx_pbc(msr);
        row.K += msr.K();
        row.K_prime += msr.K_prime();
        row.max_block = std::max(row.max_block, msr.max_block());
        for (size_t s : msr.sizes()) {
            row.block_sizes.push_back(s);
        }
    }
    row.cpx_log2 = log2_big(cpx);
    row.order_param_term = order_param_term(cpx, row.t);
    if (options.compute_entanglement) {
        row.ee_half_cut = skeleton_half_cut_entropy(circuit, rng);
    }
    return row;
}

SweepRow run_realization(const ModelParams &params, uint64_t seed, const RealizationOptions &options) {
    Rng rng(seed);
    Circuit c = generate(params, rng);
    SweepRow row = analyze_circuit(c, rng, options);
    row.p = params.p;
    row.q = params.q;
    row.alpha = params.alpha;
    row.seed = seed;
    return row;
}

size_t skeleton_half_cut_entropy(const Circuit &circuit, Rng &rng) {
    StabilizerTableau tab(circuit.n);
    for (const auto &e : circuit.events) {
        switch (e.kind) {
            case EventKind::Clifford2:
                tab.apply_c2(e.gate, e.a, e.b);
                break;
            case EventKind::Clifford1:
                tab.apply_c1(e.gate, e.a);
                break;
            case EventKind::T:
                break;
            case EventKind::Monitor: {
                PauliString z = PauliString::single(circuit.n, e.a, 'Z');
                if (e.outcome == Outcome::Unset || !tab.postselect(z, outcome_sign(e.outcome))) {
                    tab.measure(z, rng);
                }
                break;
            }
        }
    }
    return entanglement_entropy(tab, circuit.n / 2 + 1);
}

std::string sweep_csv_header() {
    return "n,D,p,q,alpha,seed,t,K,K_prime,max_block,cpx_log2,order_param_term,ee_half_cut";
}

std::string sweep_csv_row(const SweepRow &r) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%zu,%zu,%.17g,%.17g,%.17g,%llu,%zu,%zu,%zu,%zu,%.17g,%.17g,%zu", r.n, r.depth, r.p,
                  r.q, r.alpha, static_cast<unsigned long long>(r.seed), r.t, r.K, r.K_prime, r.max_block, r.cpx_log2,
                  r.order_param_term, r.ee_half_cut);
    return buf;
}

}  // namespace magiclab
