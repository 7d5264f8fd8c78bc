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

#include "magiclab/clifford.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace magiclab {

LocalPauli operator*(const LocalPauli &a, const LocalPauli &b) {
    LocalPauli r;
    r.x = a.x ^ b.x;
    r.z = a.z ^ b.z;
    r.phase = (a.phase + b.phase + 2 * (std::popcount(static_cast<unsigned>(a.z & b.x)) & 1)) & 3;
    return r;
}

bool anticommutes(const LocalPauli &a, const LocalPauli &b) {
    return std::popcount(static_cast<unsigned>((a.x & b.z) ^ (a.z & b.x))) & 1;
}

namespace {

LocalPauli basis(int i) {
    // X_0, Z_0, X_1, Z_1
    LocalPauli p;
    if (i & 1) {
        p.z = 1 << (i >> 1);
    } else {
        p.x = 1 << (i >> 1);
    }
    return p;
}

LocalPauli from_index(uint8_t index) {
    LocalPauli p;
    p.x = index & 3;
    p.z = (index >> 2) & 3;
    return p;
}

LocalPauli apply(const std::array<LocalPauli, 16> &table, const LocalPauli &p) {
    LocalPauli r = table[p.index()];
    r.phase = (r.phase + p.phase) & 3;
    return r;
}

}  // namespace

CliffordTableau::CliffordTableau(uint8_t arity, const std::array<LocalPauli, 4> &images)
    : arity_(arity), images_(images) {
    if (arity != 1 && arity != 2) {
        throw std::invalid_argument("Clifford arity must be 1 or 2");
    }
    if (arity == 1) {
        images_[2] = basis(2);
        images_[3] = basis(3);
    }
    for (uint8_t idx = 0; idx < 16; idx++) {
        LocalPauli acc;
        for (int q = 0; q < 2; q++) {
            if ((idx >> q) & 1) {
                acc = acc * images_[2 * q];
            }
            if ((idx >> (q + 2)) & 1) {
                acc = acc * images_[2 * q + 1];
            }
        }
        fwd_[idx] = acc;
    }
    for (uint8_t idx = 0; idx < 16; idx++) {
        LocalPauli r = from_index(idx);
        r.phase = (4 - fwd_[idx].phase) & 3;
        inv_[fwd_[idx].index()] = r;
    }
    for (int i = 0; i < 4; i++) {
        for (int j = i + 1; j < 4; j++) {
            bool expect = (i >> 1) == (j >> 1);
            if (anticommutes(images_[i], images_[j]) != expect) {
                throw std::invalid_argument("Clifford images violate the symplectic relations");
            }
        }
    }
}

CliffordTableau CliffordTableau::identity(uint8_t arity) {
    return CliffordTableau(arity, {basis(0), basis(1), basis(2), basis(3)});
}

CliffordTableau CliffordTableau::hadamard() {
    return CliffordTableau(1, {basis(1), basis(0), basis(2), basis(3)});
}

CliffordTableau CliffordTableau::phase_s() {
    // S^dag X S = -Y = i^3 X Z.
    return CliffordTableau(1, {LocalPauli{1, 1, 3}, basis(1), basis(2), basis(3)});
}

CliffordTableau CliffordTableau::pauli_x() {
    return CliffordTableau(1, {basis(0), LocalPauli{0, 1, 2}, basis(2), basis(3)});
}

CliffordTableau CliffordTableau::cx() {
    return CliffordTableau(2, {LocalPauli{3, 0, 0}, basis(1), basis(2), LocalPauli{0, 3, 0}});
}

CliffordTableau CliffordTableau::swap() {
    return CliffordTableau(2, {basis(2), basis(3), basis(0), basis(1)});
}

CliffordTableau CliffordTableau::embed(const CliffordTableau &one, uint8_t k) {
    if (one.arity() != 1 || k > 1) {
        throw std::invalid_argument("embed expects a 1-qubit tableau and k in {0,1}");
    }
    std::array<LocalPauli, 4> im{basis(0), basis(1), basis(2), basis(3)};
    for (int i = 0; i < 2; i++) {
        LocalPauli p = one.images()[i];
        p.x <<= k;
        p.z <<= k;
        im[2 * k + i] = p;
    }
    return CliffordTableau(2, im);
}

uint32_t CliffordTableau::key() const {
    uint32_t k = 0;
    for (int i = 0; i < 2 * arity_; i++) {
        const auto &p = images_[i];
        k = (k << 6) | (p.x) | (p.z << 2) | (p.phase << 4);
    }
    return k;
}

CliffordTableau CliffordTableau::then(const CliffordTableau &later) const {
    if (later.arity_ != arity_) {
        throw std::invalid_argument("Clifford arity mismatch");
    }
    std::array<LocalPauli, 4> im;
    for (int i = 0; i < 4; i++) {
        im[i] = apply(fwd_, later.images_[i]);
    }
    return CliffordTableau(arity_, im);
}

CliffordTableau CliffordTableau::inverse() const {
    std::array<LocalPauli, 4> im;
    for (int i = 0; i < 4; i++) {
        im[i] = inv_[basis(i).index()];
    }
    return CliffordTableau(arity_, im);
}

void CliffordTableau::conjugate_in_place(PauliString &p, size_t a, size_t b, bool inverse) const {
    const auto &table = inverse ? inv_ : fwd_;
    uint8_t idx = p.x(a) | (p.z(a) << 2);
    if (arity_ == 2) {
        idx |= (p.x(b) << 1) | (p.z(b) << 3);
    }
    const LocalPauli &r = table[idx];
    p.set_x(a, r.x & 1);
    p.set_z(a, r.z & 1);
    if (arity_ == 2) {
        p.set_x(b, r.x & 2);
        p.set_z(b, r.z & 2);
    }
    p.set_phase(p.phase() + r.phase);
}

PauliString conjugate(const PauliString &p, const CliffordTableau &c, size_t a, size_t b) {
    if (a >= p.num_qubits() || (c.arity() == 2 && (b >= p.num_qubits() || a == b))) {
        throw std::out_of_range("Clifford target out of range");
    }
    PauliString r = p;
    c.conjugate_in_place(r, a, b);
    return r;
}

namespace {

CliffordTableau generator_tableau(Generator g) {
    switch (g) {
        case Generator::H0:
            return CliffordTableau::embed(CliffordTableau::hadamard(), 0);
        case Generator::H1:
            return CliffordTableau::embed(CliffordTableau::hadamard(), 1);
        case Generator::S0:
            return CliffordTableau::embed(CliffordTableau::phase_s(), 0);
        case Generator::S1:
            return CliffordTableau::embed(CliffordTableau::phase_s(), 1);
        case Generator::CX01:
            return CliffordTableau::cx();
    }
    throw std::logic_error("unknown generator");
}

}  // namespace

void CliffordGroup::enumerate(uint8_t arity, const std::vector<Generator> &gens) {
    std::vector<CliffordTableau> gen_tabs;
    for (auto g : gens) {
        CliffordTableau t = generator_tableau(g);
        if (arity == 1) {
            t = CliffordTableau(1, {t.images()[0], t.images()[1], LocalPauli{}, LocalPauli{}});
        }
        gen_tabs.push_back(t);
    }
    std::unordered_map<uint32_t, uint32_t> seen;
    std::deque<uint32_t> frontier;
    elements_.push_back(CliffordTableau::identity(arity));
    words_.push_back({});
    seen[elements_[0].key()] = 0;
    frontier.push_back(0);
    while (!frontier.empty()) {
        uint32_t cur = frontier.front();
        frontier.pop_front();
        for (size_t gi = 0; gi < gens.size(); gi++) {
            // U' = U_cur * G: G acts first in time.
            CliffordTableau next = gen_tabs[gi].then(elements_[cur]);
            uint32_t k = next.key();
            if (seen.count(k)) {
                continue;
            }
            uint32_t id = elements_.size();
            seen[k] = id;
            elements_.push_back(next);
            auto w = words_[cur];
            w.push_back(gens[gi]);
            words_.push_back(std::move(w));
            frontier.push_back(id);
        }
    }
    for (const auto &[k, id] : seen) {
        sorted_keys_.emplace_back(k, id);
    }
    std::sort(sorted_keys_.begin(), sorted_keys_.end());
}

int64_t CliffordGroup::find(const CliffordTableau &c) const {
    if (elements_.empty() || c.arity() != elements_[0].arity()) {
        return -1;
    }
    uint32_t k = c.key();
    auto it = std::lower_bound(sorted_keys_.begin(), sorted_keys_.end(), std::make_pair(k, uint32_t{0}));
    if (it == sorted_keys_.end() || it->first != k) {
        return -1;
    }
    return it->second;
}

C1Group::C1Group() {
    enumerate(1, {Generator::H0, Generator::S0});
    identity_ = find(CliffordTableau::identity(1));
    x_ = find(CliffordTableau::pauli_x());
}

const C1Group &C1Group::get() {
    static const C1Group group;
    return group;
}

bool is_separable(const CliffordTableau &c) {
    if (c.arity() != 2) {
        throw std::invalid_argument("is_separable requires a 2-qubit Clifford");
    }
    const auto &im = c.images();
    for (int i = 0; i < 4; i++) {
        uint8_t other = (i < 2) ? 2 : 1;
        if ((im[i].x | im[i].z) & other) {
            return false;
        }
    }
    return true;
}

C2Group::C2Group() {
    enumerate(2, {Generator::H0, Generator::H1, Generator::S0, Generator::S1, Generator::CX01});
    const C1Group &c1 = C1Group::get();
    separable_.resize(size());
    factors_.resize(size(), {0, 0});
    for (size_t id = 0; id < size(); id++) {
        const auto &t = elements_[id];
        if (!is_separable(t)) {
            continue;
        }
        separable_[id] = 1;
        const auto &im = t.images();
        CliffordTableau u0(1, {im[0], im[1], LocalPauli{}, LocalPauli{}});
        LocalPauli a = im[2];
        LocalPauli b = im[3];
        a.x >>= 1;
        a.z >>= 1;
        b.x >>= 1;
        b.z >>= 1;
        CliffordTableau u1(1, {a, b, LocalPauli{}, LocalPauli{}});
        factors_[id] = {static_cast<uint16_t>(c1.find(u0)), static_cast<uint16_t>(c1.find(u1))};
    }
}

const C2Group &C2Group::get() {
    static const C2Group group;
    return group;
}

size_t C2Group::num_separable() const {
    return std::count(separable_.begin(), separable_.end(), 1);
}

std::pair<size_t, size_t> C2Group::local_factors(size_t id) const {
    if (!separable(id)) {
        throw std::invalid_argument("local_factors of a non-separable Clifford");
    }
    return factors_[id];
}

}  // namespace magiclab
