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

#include "magiclab/oracle.h"

#include <cmath>
#include <stdexcept>

#include "magiclab/dense.h"

namespace magiclab {

namespace {

// Projections onto zero-probability branches leave round-off of this order.
constexpr double kPrune = 1e-13;

struct Branch {
    PbcCompiler pbc;
    DenseState msr;
    double factor;  // product of 1/2 per replaced measurement
};

// Applies a measurement result to the branch state.
void absorb(Branch &b, const PbcStep &step) {
    if (step.resolution == Resolution::Replaced) {
        b.factor *= 0.5;
    } else if (step.resolution == Resolution::Appended) {
        const auto &m = b.pbc.final_list().back();
        b.msr.project_pauli(m.op, m.outcome);
    }
}

void explore(const Branch &b, const std::vector<uint32_t> &outputs, size_t k, size_t index, std::vector<double> &dist) {
    double norm2 = b.msr.norm2();
    if (norm2 < kPrune) {
        return;
    }
    if (k == outputs.size()) {
        dist[index] += b.factor * norm2;
        return;
    }
    Branch probe = b;
    Rng scratch(0);
    PbcStep first = probe.pbc.output(outputs[k], Outcome::Unset, &scratch);
    if (first.resolution == Resolution::Deterministic) {
        explore(probe, outputs, k + 1, index | (first.outcome < 0 ? size_t{1} << k : 0), dist);
        return;
    }
    for (Outcome o : {Outcome::Plus, Outcome::Minus}) {
        Branch next = b;
        PbcStep step = next.pbc.output(outputs[k], o, nullptr);
        absorb(next, step);
        explore(next, outputs, k + 1, index | (o == Outcome::Minus ? size_t{1} << k : 0), dist);
    }
}

}  // namespace

EquivalenceReport check_pbc_equivalence(const Circuit &circuit, Rng &rng, PbcOptions options) {
    EquivalenceReport rep;
    rep.n = circuit.n;
    rep.t = circuit.t_count();
    if (rep.t > kMaxOracleAncillas) {
        throw std::invalid_argument("check_pbc_equivalence: too many T gates for exact enumeration");
    }
    if (circuit.outputs.size() > kMaxDenseQubits) {
        throw std::invalid_argument("check_pbc_equivalence: too many outputs");
    }
    DenseRun run = run_circuit(circuit, &rng);
    Circuit fixed = circuit;
    fixed.set_monitor_outcomes(run.record);
    rep.record_probability = run.record_probability;
    rep.direct = output_distribution(run.state, circuit.outputs);
    rep.direct_stabilizer = is_stabilizer(run.state);

    rep.reconstructed.assign(rep.direct.size(), 0.0);
    size_t assignments = options.preselect_gadgets ? 1 : size_t{1} << rep.t;
    rep.assignments = assignments;
    bool first_verdict = true;
    for (size_t g = 0; g < assignments; g++) {
        Branch b{PbcCompiler(circuit.n, rep.t, options), DenseState::magic(rep.t), 1.0};
        size_t gi = 0;
        for (const auto &e : fixed.events) {
            switch (e.kind) {
                case EventKind::Clifford2:
                    b.pbc.clifford_c2(e.gate, e.a, e.b);
                    break;
                case EventKind::Clifford1:
                    b.pbc.clifford_c1(e.gate, e.a);
                    break;
                case EventKind::T: {
                    Outcome o = ((g >> gi++) & 1) ? Outcome::Minus : Outcome::Plus;
                    absorb(b, b.pbc.gadget(e.a, o, nullptr));
                    break;
                }
                case EventKind::Monitor:
                    absorb(b, b.pbc.monitor(e.a, e.outcome, nullptr));
                    break;
            }
        }
        if (b.msr.norm2() > kPrune) {
            DenseState normalized = b.msr;
            normalized.normalize();
            bool verdict = is_stabilizer(normalized);
            if (first_verdict) {
                rep.pbc_stabilizer = verdict;
                first_verdict = false;
            } else if (verdict != rep.pbc_stabilizer) {
                rep.pbc_consistent = false;
            }
        }
        std::vector<double> part(rep.direct.size(), 0.0);
        explore(b, circuit.outputs, 0, 0, part);
        double total = 0;
        for (size_t s = 0; s < part.size(); s++) {
            rep.reconstructed[s] += part[s];
            total += part[s];
        }
        double scale = std::ldexp(1.0, static_cast<int>(rep.t));
        rep.gadget_weight_error = std::max(rep.gadget_weight_error, std::abs(scale * total / run.record_probability - 1));
    }
    double total = 0;
    for (double w : rep.reconstructed) {
        total += w;
    }
    if (total <= 0) {
        throw std::logic_error("check_pbc_equivalence: reconstruction has zero weight");
    }
    for (double &w : rep.reconstructed) {
        w /= total;
    }
    rep.tv = total_variation(rep.direct, rep.reconstructed);
    return rep;
}

}  // namespace magiclab
