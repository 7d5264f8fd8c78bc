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

#include "magiclab/pbc.h"

#include <sstream>
#include <stdexcept>

namespace magiclab {

namespace {

constexpr const char *kKindNames[] = {"dummy", "gadget", "monitor", "output"};

int64_t first_x_below(const PauliString &p, size_t n) {
    auto xs = p.xs();
    for (size_t w = 0; w * 64 < n; w++) {
        uint64_t bits = xs[w];
        if ((w + 1) * 64 > n) {
            bits &= (uint64_t{1} << (n - w * 64)) - 1;
        }
        if (bits) {
            return static_cast<int64_t>(w * 64 + std::countr_zero(bits));
        }
    }
    return -1;
}

}  // namespace

const char *kind_name(MeasurementKind kind) {
    return kKindNames[static_cast<size_t>(kind)];
}

MeasurementKind kind_from_name(std::string_view name) {
    for (size_t k = 0; k < 4; k++) {
        if (name == kKindNames[k]) {
            return static_cast<MeasurementKind>(k);
        }
    }
    throw std::invalid_argument("unknown measurement kind: " + std::string(name));
}

PbcCompiler::PbcCompiler(size_t n, size_t t, PbcOptions options)
    : n_(n), t_(t), options_(options), basis_(2 * t) {
    size_t total = n + t;
    frame_x_.reserve(total);
    frame_z_.reserve(total);
    for (size_t q = 0; q < total; q++) {
        frame_x_.push_back(PauliString::single(total, q, 'X'));
        frame_z_.push_back(PauliString::single(total, q, 'Z'));
    }
}

void PbcCompiler::prepend_local(const std::array<LocalPauli, 4> &images, uint8_t arity, size_t a, size_t b) {
    const PauliString *old_x[2] = {&frame_x_[a], arity == 2 ? &frame_x_[b] : nullptr};
    const PauliString *old_z[2] = {&frame_z_[a], arity == 2 ? &frame_z_[b] : nullptr};
    size_t total = n_ + t_;
    std::array<PauliString, 4> fresh;
    for (uint8_t k = 0; k < 2 * arity; k++) {
        const LocalPauli &im = images[k];
        PauliString acc(total);
        acc.set_phase(im.phase);
        for (uint8_t j = 0; j < arity; j++) {
            if ((im.x >> j) & 1) {
                acc *= *old_x[j];
            }
            if ((im.z >> j) & 1) {
                acc *= *old_z[j];
            }
        }
        fresh[k] = std::move(acc);
    }
    frame_x_[a] = std::move(fresh[0]);
    frame_z_[a] = std::move(fresh[1]);
    if (arity == 2) {
        frame_x_[b] = std::move(fresh[2]);
        frame_z_[b] = std::move(fresh[3]);
    }
}

void PbcCompiler::clifford(const CliffordTableau &c, size_t a, size_t b) {
    if (a >= n_ || (c.arity() == 2 && (b >= n_ || a == b))) {
        throw std::out_of_range("clifford: bad qubit indices");
    }
    std::array<LocalPauli, 4> images;
    for (uint8_t k = 0; k < 2 * c.arity(); k++) {
        LocalPauli p{};
        if (k % 2 == 0) {
            p.x = static_cast<uint8_t>(1 << (k / 2));
        } else {
            p.z = static_cast<uint8_t>(1 << (k / 2));
        }
        images[k] = c.fwd(p.index());
    }
    prepend_local(images, c.arity(), a, b);
}

void PbcCompiler::clifford_c2(size_t id, size_t a, size_t b) {
    clifford(C2Group::get()[id], a, b);
}

void PbcCompiler::clifford_c1(size_t id, size_t a) {
    clifford(C1Group::get()[id], a);
}

PauliString PbcCompiler::frame_image(const PauliString &p) const {
    size_t total = n_ + t_;
    if (p.num_qubits() != total) {
        throw std::invalid_argument("frame_image: dimension mismatch");
    }
    PauliString acc(total);
    acc.set_phase(p.phase());
    for (size_t q = 0; q < total; q++) {
        if (p.x(q)) {
            acc *= frame_x_[q];
        }
        if (p.z(q)) {
            acc *= frame_z_[q];
        }
    }
    return acc;
}

int PbcCompiler::draw(Outcome requested, Rng *rng) const {
    if (requested != Outcome::Unset) {
        return outcome_sign(requested);
    }
    if (rng == nullptr) {
        throw std::invalid_argument("random outcome requested without a generator");
    }
    return coin(*rng) ? +1 : -1;
}

PauliString PbcCompiler::embed_msr(const PauliString &r) const {
    PauliString full(n_ + t_);
    for (size_t q = 0; q < t_; q++) {
        full.set_x(n_ + q, r.x(q));
        full.set_z(n_ + q, r.z(q));
    }
    full.set_phase(r.phase());
    return full;
}

// V = (1 + A)/sqrt(2) with A^2 = -1; V^dag Q V = Q A when {Q, A} = 0.
void PbcCompiler::replace(const PauliString &generator) {
    for (auto *rows : {&frame_x_, &frame_z_}) {
        for (auto &row : *rows) {
            if (symplectic_product(row, generator)) {
                row *= generator;
            }
        }
    }
}

PbcStep PbcCompiler::record(MeasurementKind kind, PbcStep step) {
    tally_[static_cast<size_t>(kind)][static_cast<size_t>(step.resolution)]++;
    return step;
}

PbcStep PbcCompiler::measure(const PauliString &effective, MeasurementKind kind, Outcome requested, Rng *rng,
                             int64_t source) {
    if (effective.num_qubits() != n_ + t_) {
        throw std::invalid_argument("measure: dimension mismatch");
    }
    if (!effective.is_hermitian()) {
        throw std::invalid_argument("measure: operator is not Hermitian");
    }
    int64_t dummy = first_x_below(effective, n_);
    if (dummy >= 0) {
        int lambda = draw(requested, rng);
        PauliString gen = effective * PauliString::single(n_ + t_, static_cast<size_t>(dummy), 'Z');
        if (lambda < 0) {
            gen.negate();
        }
        replace(gen);
        return record(kind, {Resolution::Replaced, lambda});
    }
    PauliString restricted = effective.slice(n_, t_);
    if (restricted.is_identity_up_to_phase()) {
        int value = restricted.sign();
        if (requested != Outcome::Unset && outcome_sign(requested) != value) {
            throw std::domain_error("recorded outcome contradicts a deterministic measurement");
        }
        return record(kind, {Resolution::Deterministic, value});
    }
    for (const auto &member : final_list_) {
        if (symplectic_product(restricted, member.op)) {
            int lambda = draw(requested, rng);
            PauliString gen = restricted * member.op;
            if (lambda * member.outcome < 0) {
                gen.negate();
            }
            replace(embed_msr(gen));
            return record(kind, {Resolution::Replaced, lambda});
        }
    }
    BitRow bits = symplectic_row(restricted);
    BitRow rem = bits;
    BitRow combo = basis_.reduce(rem);
    if (!rem.any()) {
        PauliString prod(t_);
        for (size_t i = 0; i < signed_members_.size(); i++) {
            if (combo.get(i)) {
                prod *= signed_members_[i];
            }
        }
        // restricted = c * prod with c = +-1 since both are Hermitian and commute.
        uint8_t rel = static_cast<uint8_t>((restricted.phase() + 4 - prod.phase()) & 3);
        if (rel & 1) {
            throw std::logic_error("measure: inconsistent phase in dependent measurement");
        }
        int value = rel == 0 ? +1 : -1;
        if (requested != Outcome::Unset && outcome_sign(requested) != value) {
            throw std::domain_error("recorded outcome contradicts a deterministic measurement");
        }
        return record(kind, {Resolution::Deterministic, value});
    }
    int lambda = draw(requested, rng);
    basis_.insert(bits);
    PauliString stab = restricted;
    if (lambda < 0) {
        stab.negate();
    }
    signed_members_.push_back(std::move(stab));
    final_list_.push_back(FinalListEntry{std::move(restricted), kind, lambda, source});
    return record(kind, {Resolution::Appended, lambda});
}

PbcStep PbcCompiler::gadget(size_t c, Outcome requested, Rng *rng, int64_t source) {
    if (c >= n_) {
        throw std::out_of_range("gadget: bad qubit");
    }
    if (next_ancilla_ >= t_) {
        throw std::out_of_range("gadget: magic-state register exhausted");
    }
    size_t a = n_ + next_ancilla_++;
    if (options_.preselect_gadgets) {
        requested = Outcome::Minus;
    }
    PbcStep step = measure(frame_z_[c] * frame_z_[a], MeasurementKind::Gadget, requested, rng, source);
    // U = exp(-i pi/4 Z_c X_a): U^dag P U = -i P Z_c X_a for the anti-commuting rows X_c, Z_a.
    PauliString zx = frame_z_[c] * frame_x_[a];
    PauliString new_xc = frame_x_[c] * zx;
    PauliString new_za = frame_z_[a] * zx;
    new_xc.set_phase(static_cast<uint8_t>(new_xc.phase() + 3));
    new_za.set_phase(static_cast<uint8_t>(new_za.phase() + 3));
    frame_x_[c] = std::move(new_xc);
    frame_z_[a] = std::move(new_za);
    if (step.outcome > 0) {
        // S^dag: X -> Y = iXZ.
        PauliString y = frame_x_[c] * frame_z_[c];
        y.set_phase(static_cast<uint8_t>(y.phase() + 1));
        frame_x_[c] = std::move(y);
    }
    return step;
}

PbcStep PbcCompiler::monitor(size_t q, Outcome requested, Rng *rng, int64_t source) {
    if (q >= n_) {
        throw std::out_of_range("monitor: bad qubit");
    }
    return measure(frame_z_[q], MeasurementKind::Monitor, requested, rng, source);
}

PbcStep PbcCompiler::output(size_t q, Outcome requested, Rng *rng, int64_t source) {
    if (q >= n_) {
        throw std::out_of_range("output: bad qubit");
    }
    return measure(frame_z_[q], MeasurementKind::Output, requested, rng, source);
}

PbcResult compile(const Circuit &circuit, Rng &rng, PbcOptions options) {
    PbcResult res;
    res.n = circuit.n;
    res.t = circuit.t_count();
    PbcCompiler pbc(circuit.n, res.t, options);
    for (size_t i = 0; i < circuit.events.size(); i++) {
        const Event &e = circuit.events[i];
        auto src = static_cast<int64_t>(i);
        switch (e.kind) {
            case EventKind::Clifford2:
                pbc.clifford_c2(e.gate, e.a, e.b);
                break;
            case EventKind::Clifford1:
                pbc.clifford_c1(e.gate, e.a);
                break;
            case EventKind::T:
                res.outcomes.push_back(pbc.gadget(e.a, Outcome::Unset, &rng, src).outcome);
                break;
            case EventKind::Monitor:
                res.outcomes.push_back(pbc.monitor(e.a, e.outcome, &rng, src).outcome);
                break;
        }
    }
    for (uint32_t q : circuit.outputs) {
        res.outcomes.push_back(pbc.output(q, Outcome::Unset, &rng, -1).outcome);
    }
    res.final_list = pbc.final_list();
    res.tally = pbc.tally();
    return res;
}

bool final_list_is_valid(const std::vector<FinalListEntry> &fl) {
    if (fl.empty()) {
        return true;
    }
    size_t t = fl.front().op.num_qubits();
    Gf2Basis basis(2 * t);
    for (size_t i = 0; i < fl.size(); i++) {
        if (fl[i].op.num_qubits() != t || !fl[i].op.is_hermitian()) {
            return false;
        }
        for (size_t j = 0; j < i; j++) {
            if (symplectic_product(fl[i].op, fl[j].op)) {
                return false;
            }
        }
        if (!basis.insert(symplectic_row(fl[i].op))) {
            return false;
        }
    }
    return true;
}

std::string dump_final_list(const std::vector<FinalListEntry> &fl) {
    std::ostringstream out;
    for (const auto &e : fl) {
        std::string s = e.op.str();
        out << s[0] << ' ' << s.substr(1) << ' ' << kind_name(e.kind) << ' ' << (e.outcome > 0 ? "+1" : "-1")
            << '\n';
    }
    return out.str();
}

std::vector<FinalListEntry> parse_final_list(std::string_view text) {
    std::vector<FinalListEntry> fl;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        std::string sign, ops, kind, outcome;
        if (!(ls >> sign >> ops >> kind >> outcome) || (sign != "+" && sign != "-") ||
            (outcome != "+1" && outcome != "-1")) {
            throw std::invalid_argument("bad FinalList line: " + line);
        }
        FinalListEntry e;
        e.op = PauliString::from_str(sign + ops);
        e.kind = kind_from_name(kind);
        e.outcome = outcome == "+1" ? +1 : -1;
        fl.push_back(std::move(e));
    }
    return fl;
}

}  // namespace magiclab
