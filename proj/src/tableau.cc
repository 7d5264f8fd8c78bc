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

#include "magiclab/tableau.h"

#include <stdexcept>

#include "magiclab/gf2.h"

namespace magiclab {

StabilizerTableau::StabilizerTableau(size_t n) : n_(n) {
    for (size_t q = 0; q < n; q++) {
        stab_.push_back(PauliString::single(n, q, 'Z'));
        destab_.push_back(PauliString::single(n, q, 'X'));
    }
}

StabilizerTableau::StabilizerTableau(std::vector<PauliString> stabilizers, std::vector<PauliString> destabilizers)
    : n_(stabilizers.size()), stab_(std::move(stabilizers)), destab_(std::move(destabilizers)) {
    if (destab_.size() != n_) {
        throw std::invalid_argument("tableau needs n stabilizers and n destabilizers");
    }
    if (!check_invariants()) {
        throw std::invalid_argument("tableau rows violate the symplectic relations");
    }
}

void StabilizerTableau::apply(const CliffordTableau &c, size_t a, size_t b) {
    if (a >= n_ || (c.arity() == 2 && (b >= n_ || a == b))) {
        throw std::out_of_range("gate target out of range");
    }
    for (auto &r : stab_) {
        c.conjugate_in_place(r, a, b, true);
    }
    for (auto &r : destab_) {
        c.conjugate_in_place(r, a, b, true);
    }
}

void StabilizerTableau::apply_c2(size_t id, size_t a, size_t b) {
    apply(C2Group::get()[id], a, b);
}

void StabilizerTableau::apply_c1(size_t id, size_t a) {
    apply(C1Group::get()[id], a);
}

std::optional<int> StabilizerTableau::peek(const PauliString &p) const {
    for (const auto &s : stab_) {
        if (symplectic_product(s, p)) {
            return std::nullopt;
        }
    }
    PauliString acc(n_);
    for (size_t i = 0; i < n_; i++) {
        if (symplectic_product(destab_[i], p)) {
            acc *= stab_[i];
        }
    }
    uint8_t diff = (p.phase() + 4 - acc.phase()) & 3;
    if (diff & 1) {
        throw std::logic_error("peek: non-Hermitian Pauli");
    }
    return diff == 0 ? +1 : -1;
}

std::vector<size_t> StabilizerTableau::stabilizer_decomposition(const PauliString &p) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < n_; i++) {
        if (symplectic_product(destab_[i], p)) {
            out.push_back(i);
        }
    }
    return out;
}

MeasureResult StabilizerTableau::measure(const PauliString &p, bool coin) {
    if (!p.is_hermitian()) {
        throw std::invalid_argument("measure: non-Hermitian Pauli");
    }
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("measure: dimension mismatch");
    }
    size_t piv = n_;
    for (size_t i = 0; i < n_; i++) {
        if (symplectic_product(stab_[i], p)) {
            piv = i;
            break;
        }
    }
    if (piv == n_) {
        return MeasureResult{*peek(p), true};
    }
    for (size_t i = 0; i < n_; i++) {
        if (i != piv && symplectic_product(stab_[i], p)) {
            stab_[i] *= stab_[piv];
        }
        if (i != piv && symplectic_product(destab_[i], p)) {
            destab_[i] *= stab_[piv];
        }
    }
    destab_[piv] = stab_[piv];
    int outcome = coin ? -1 : +1;
    stab_[piv] = p;
    if (outcome < 0) {
        stab_[piv].negate();
    }
    return MeasureResult{outcome, false};
}

bool StabilizerTableau::postselect(const PauliString &p, int outcome) {
    auto det = peek(p);
    if (det.has_value()) {
        return *det == outcome;
    }
    measure(p, outcome < 0);
    return true;
}

bool StabilizerTableau::check_invariants() const {
    for (size_t i = 0; i < n_; i++) {
        if (!stab_[i].is_hermitian() || !destab_[i].is_hermitian()) {
            return false;
        }
        for (size_t j = 0; j < n_; j++) {
            if (symplectic_product(stab_[i], stab_[j]) || symplectic_product(destab_[i], destab_[j])) {
                return false;
            }
            if (symplectic_product(stab_[i], destab_[j]) != (i == j)) {
                return false;
            }
        }
    }
    return true;
}

size_t entanglement_entropy_of(const StabilizerTableau &t, const std::vector<size_t> &subset) {
    std::vector<BitRow> rows;
    rows.reserve(t.num_qubits());
    for (const auto &s : t.stabilizers()) {
        rows.push_back(symplectic_row(s, &subset));
    }
    return gf2_rank(std::move(rows)) - subset.size();
}

size_t entanglement_entropy(const StabilizerTableau &t, size_t j) {
    size_t n = t.num_qubits();
    if (j < 1 || j > n + 1) {
        throw std::out_of_range("cut index must be in [1, n+1]");
    }
    std::vector<size_t> a;
    for (size_t q = 0; q + 1 < j; q++) {
        a.push_back(q);
    }
    return entanglement_entropy_of(t, a);
}

PauliDecomposition decompose_pauli(const StabilizerTableau &t, const PauliString &m) {
    if (!m.is_hermitian()) {
        throw std::invalid_argument("decompose_pauli: non-Hermitian Pauli");
    }
    size_t n = t.num_qubits();
    PauliDecomposition d;
    d.alpha.resize(n);
    d.beta.resize(n);
    d.generators = t.stabilizers();
    d.flips = t.destabilizers();
    for (size_t i = 0; i < n; i++) {
        d.alpha[i] = symplectic_product(m, d.flips[i]);
        d.beta[i] = symplectic_product(m, d.generators[i]);
        if (d.alpha[i] || d.beta[i]) {
            d.nonzero_pairs++;
        }
    }
    d.gamma = d.nonzero_pairs;
    if (!recompose(d, n).same_bits(m)) {
        throw std::logic_error("decompose_pauli: inconsistent tableau");
    }
    return d;
}

namespace {

// Row-reduces `rows` so that as many rows as possible vanish on `outside` qubits.
// Returns the rows that are fully supported away from `outside`, as products of the inputs.
std::vector<PauliString> local_rows(const std::vector<PauliString> &rows, const std::vector<size_t> &outside) {
    std::vector<PauliString> work = rows;
    std::vector<BitRow> bits;
    for (const auto &r : work) {
        bits.push_back(symplectic_row(r, &outside));
    }
    std::vector<bool> used(work.size(), false);
    for (size_t col = 0; col < 2 * outside.size(); col++) {
        size_t piv = work.size();
        for (size_t i = 0; i < work.size(); i++) {
            if (!used[i] && bits[i].get(col)) {
                piv = i;
                break;
            }
        }
        if (piv == work.size()) {
            continue;
        }
        used[piv] = true;
        for (size_t i = 0; i < work.size(); i++) {
            if (i != piv && bits[i].get(col)) {
                bits[i] ^= bits[piv];
                work[i] *= work[piv];
            }
        }
    }
    std::vector<PauliString> out;
    for (size_t i = 0; i < work.size(); i++) {
        if (!used[i]) {
            out.push_back(work[i]);
        }
    }
    return out;
}

}  // namespace

PauliDecomposition decompose_single_qubit(const StabilizerTableau &t, size_t j, char pauli) {
    size_t n = t.num_qubits();
    if (j >= n) {
        throw std::out_of_range("decompose_single_qubit: qubit out of range");
    }
    PauliString m = PauliString::single(n, j, pauli);
    const auto &stab = t.stabilizers();
    const auto &destab = t.destabilizers();

    std::vector<size_t> not_a;
    std::vector<size_t> not_b;
    for (size_t q = 0; q < n; q++) {
        if (q >= j) {
            not_a.push_back(q);
        }
        if (q <= j) {
            not_b.push_back(q);
        }
    }
    std::vector<PauliString> loc_a = local_rows(stab, not_a);
    std::vector<PauliString> loc_b = local_rows(stab, not_b);

    // New generator basis: O first, then A-local, then B'-local.
    std::vector<PauliString> locals = loc_a;
    locals.insert(locals.end(), loc_b.begin(), loc_b.end());
    Gf2Basis span(2 * n);
    for (const auto &g : locals) {
        span.insert(symplectic_row(g));
    }
    std::vector<PauliString> others;
    bool m_in_group = t.peek(m).has_value();
    if (m_in_group) {
        PauliString g = m;
        if (*t.peek(m) < 0) {
            g.negate();
        }
        if (span.insert(symplectic_row(g))) {
            others.push_back(g);
        }
    }
    for (const auto &s : stab) {
        if (span.insert(symplectic_row(s))) {
            others.push_back(s);
        }
    }
    std::vector<PauliString> gens = others;
    gens.insert(gens.end(), locals.begin(), locals.end());
    if (gens.size() != n) {
        throw std::logic_error("decompose_single_qubit: generator basis has wrong size");
    }

    // Dual flip operators: if g'_k = prod_i s_i^{T_ki}, then d'_k = prod_i d_i^{(T^-T)_ki}.
    std::vector<BitRow> tmat(n, BitRow(n));
    for (size_t k = 0; k < n; k++) {
        for (size_t i = 0; i < n; i++) {
            tmat[k].set(i, symplectic_product(gens[k], destab[i]));
        }
    }
    auto tinv = gf2_inverse(tmat, n);
    if (!tinv) {
        throw std::logic_error("decompose_single_qubit: singular basis change");
    }
    auto tinv_t = gf2_transpose(*tinv, n);
    std::vector<PauliString> flips;
    for (size_t k = 0; k < n; k++) {
        PauliString dk(n);
        for (size_t i = 0; i < n; i++) {
            if (tinv_t[k].get(i)) {
                dk *= destab[i];
            }
        }
        flips.push_back(dk);
    }

    // Tail removal on the local pairs.
    size_t num_o = others.size();
    if (!m_in_group) {
        size_t pick = num_o;
        for (size_t k = 0; k < num_o; k++) {
            if (symplectic_product(gens[k], m)) {
                pick = k;
                break;
            }
        }
        if (pick == num_o) {
            throw std::logic_error("decompose_single_qubit: no straddling generator flips M");
        }
        for (size_t i = num_o; i < n; i++) {
            if (symplectic_product(m, flips[i])) {
                flips[i] *= gens[pick];
                flips[pick] *= gens[i];
            }
        }
    }

    PauliDecomposition d;
    d.alpha.resize(n);
    d.beta.resize(n);
    for (size_t i = 0; i < n; i++) {
        d.alpha[i] = symplectic_product(m, flips[i]);
        d.beta[i] = symplectic_product(m, gens[i]);
        if (d.alpha[i] || d.beta[i]) {
            d.nonzero_pairs++;
            if (i >= num_o) {
                throw std::logic_error("decompose_single_qubit: tail survived on a local pair");
            }
        }
    }
    d.gamma = num_o;
    d.generators = std::move(gens);
    d.flips = std::move(flips);
    return d;
}

PauliString recompose(const PauliDecomposition &d, size_t n) {
    PauliString acc(n);
    for (size_t i = 0; i < d.alpha.size(); i++) {
        if (d.alpha[i]) {
            acc *= d.generators[i];
        }
        if (d.beta[i]) {
            acc *= d.flips[i];
        }
    }
    return acc;
}

}  // namespace magiclab
