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

#include "magiclab/gf2.h"

namespace magiclab {

BitRow symplectic_row(const PauliString &p, const std::vector<size_t> *restrict_to) {
    if (restrict_to == nullptr) {
        size_t n = p.num_qubits();
        BitRow r(2 * n);
        for (size_t q = 0; q < n; q++) {
            r.set(q, p.x(q));
            r.set(n + q, p.z(q));
        }
        return r;
    }
    size_t m = restrict_to->size();
    BitRow r(2 * m);
    for (size_t k = 0; k < m; k++) {
        r.set(k, p.x((*restrict_to)[k]));
        r.set(m + k, p.z((*restrict_to)[k]));
    }
    return r;
}

size_t gf2_rank(std::vector<BitRow> rows) {
    size_t rank = 0;
    for (size_t i = 0; i < rows.size(); i++) {
        int64_t piv = rows[i].first_set();
        if (piv < 0) {
            continue;
        }
        rank++;
        for (size_t j = i + 1; j < rows.size(); j++) {
            if (rows[j].get(piv)) {
                rows[j] ^= rows[i];
            }
        }
    }
    return rank;
}

std::optional<std::vector<BitRow>> gf2_inverse(const std::vector<BitRow> &rows, size_t n) {
    std::vector<BitRow> a = rows;
    std::vector<BitRow> inv(n, BitRow(n));
    for (size_t i = 0; i < n; i++) {
        inv[i].set(i, true);
    }
    for (size_t col = 0; col < n; col++) {
        size_t piv = col;
        while (piv < n && !a[piv].get(col)) {
            piv++;
        }
        if (piv == n) {
            return std::nullopt;
        }
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        for (size_t r = 0; r < n; r++) {
            if (r != col && a[r].get(col)) {
                a[r] ^= a[col];
                inv[r] ^= inv[col];
            }
        }
    }
    return inv;
}

std::vector<BitRow> gf2_transpose(const std::vector<BitRow> &rows, size_t cols) {
    std::vector<BitRow> t(cols, BitRow(rows.size()));
    for (size_t r = 0; r < rows.size(); r++) {
        for (size_t c = 0; c < cols; c++) {
            if (rows[r].get(c)) {
                t[c].set(r, true);
            }
        }
    }
    return t;
}

BitRow Gf2Basis::reduce(BitRow &v) const {
    BitRow combo(inserted_ + 1);
    for (size_t i = 0; i < rows_.size(); i++) {
        if (v.get(pivots_[i])) {
            v ^= rows_[i];
            for (size_t k = 0; k < combos_[i].w.size(); k++) {
                combo.w[k] ^= combos_[i].w[k];
            }
        }
    }
    return combo;
}

bool Gf2Basis::contains(BitRow v) const {
    for (size_t i = 0; i < rows_.size(); i++) {
        if (v.get(pivots_[i])) {
            v ^= rows_[i];
        }
    }
    return !v.any();
}

bool Gf2Basis::insert(BitRow v) {
    size_t idx = inserted_++;
    for (auto &c : combos_) {
        c.w.resize(num_words(inserted_ + 1), 0);
    }
    BitRow combo = reduce(v);
    combo.w.resize(num_words(inserted_ + 1), 0);
    int64_t piv = v.first_set();
    if (piv < 0) {
        return false;
    }
    combo.set(idx, true);
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
    pivots_.push_back(static_cast<size_t>(piv));
    return true;
}

}  // namespace magiclab
