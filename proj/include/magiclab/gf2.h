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

#ifndef MAGICLAB_GF2_H
#define MAGICLAB_GF2_H

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "magiclab/pauli.h"

namespace magiclab {

/// Word-packed GF(2) row vector.
struct BitRow {
    std::vector<uint64_t> w;

    BitRow() = default;
    explicit BitRow(size_t bits) : w(num_words(bits), 0) {
    }

    bool get(size_t k) const {
        return (w[k >> 6] >> (k & 63)) & 1;
    }
    void set(size_t k, bool v) {
        uint64_t m = uint64_t{1} << (k & 63);
        w[k >> 6] = v ? (w[k >> 6] | m) : (w[k >> 6] & ~m);
    }
    void flip(size_t k) {
        w[k >> 6] ^= uint64_t{1} << (k & 63);
    }
    BitRow &operator^=(const BitRow &o) {
        for (size_t i = 0; i < w.size(); i++) {
            w[i] ^= o.w[i];
        }
        return *this;
    }
    bool any() const {
        for (auto v : w) {
            if (v) {
                return true;
            }
        }
        return false;
    }
    /// Index of the lowest set bit, or -1.
    int64_t first_set() const {
        for (size_t i = 0; i < w.size(); i++) {
            if (w[i]) {
                return static_cast<int64_t>(i * 64 + std::countr_zero(w[i]));
            }
        }
        return -1;
    }
    bool dot(const BitRow &o) const {
        uint64_t acc = 0;
        for (size_t i = 0; i < w.size(); i++) {
            acc ^= w[i] & o.w[i];
        }
        return std::popcount(acc) & 1;
    }
    bool operator==(const BitRow &o) const = default;
};

/// Symplectic bits of a Pauli as one row: x bits in [0, n), z bits in [n, 2n).
BitRow symplectic_row(const PauliString &p, const std::vector<size_t> *restrict_to = nullptr);

/// Rank over GF(2). The input is consumed.
size_t gf2_rank(std::vector<BitRow> rows);

/// Inverse of a square GF(2) matrix given as rows of `n` bits; nullopt if singular.
std::optional<std::vector<BitRow>> gf2_inverse(const std::vector<BitRow> &rows, size_t n);

std::vector<BitRow> gf2_transpose(const std::vector<BitRow> &rows, size_t cols);

/// Incremental reduced basis. Each inserted row remembers which inserted rows combine to it.
class Gf2Basis {
   public:
    explicit Gf2Basis(size_t bits) : bits_(bits) {
    }

    size_t size() const {
        return rows_.size();
    }
    /// Reduces `v` against the basis. Returns the combination (over inserted indices) used.
    BitRow reduce(BitRow &v) const;
    /// True if `v` is in the span.
    bool contains(BitRow v) const;
    /// Inserts if independent; returns whether it was inserted.
    bool insert(BitRow v);

   private:
    size_t bits_;
    std::vector<BitRow> rows_;
    std::vector<BitRow> combos_;
    std::vector<size_t> pivots_;
    size_t inserted_ = 0;
};

}  // namespace magiclab

#endif
