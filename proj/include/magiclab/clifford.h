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

#ifndef MAGICLAB_CLIFFORD_H
#define MAGICLAB_CLIFFORD_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "magiclab/pauli.h"
#include "magiclab/rng.h"

namespace magiclab {

/// A Pauli on at most two local qubits: i^phase * X^x * Z^z with bit k of x/z for local qubit k.
struct LocalPauli {
    uint8_t x = 0;
    uint8_t z = 0;
    uint8_t phase = 0;

    uint8_t index() const {
        return x | (z << 2);
    }
    bool operator==(const LocalPauli &other) const = default;
};

LocalPauli operator*(const LocalPauli &a, const LocalPauli &b);
bool anticommutes(const LocalPauli &a, const LocalPauli &b);

/// Conjugation action of a 1- or 2-qubit Clifford C, tabulated on all 16 local Pauli patterns.
///
/// `fwd` holds C^dag P C and `inv` holds C P C^dag, both indexed by LocalPauli::index()
/// of the phase-free operator X^x Z^z.
class CliffordTableau {
   public:
    CliffordTableau() = default;
    /// Builds the tables from C^dag X_k C and C^dag Z_k C, ordered (X_0, Z_0, X_1, Z_1).
    CliffordTableau(uint8_t arity, const std::array<LocalPauli, 4> &images);

    static CliffordTableau identity(uint8_t arity);
    static CliffordTableau hadamard();
    static CliffordTableau phase_s();
    static CliffordTableau pauli_x();
    static CliffordTableau cx();
    static CliffordTableau swap();
    /// Places a 1-qubit tableau on local qubit `k` of a 2-qubit tableau.
    static CliffordTableau embed(const CliffordTableau &one, uint8_t k);

    uint8_t arity() const {
        return arity_;
    }
    const std::array<LocalPauli, 4> &images() const {
        return images_;
    }
    const LocalPauli &fwd(uint8_t index) const {
        return fwd_[index];
    }
    const LocalPauli &inv(uint8_t index) const {
        return inv_[index];
    }

    /// Packed images, unique per group element modulo global phase.
    uint32_t key() const;

    /// The Clifford applying *this first and then `later` (conjugation composes in the same order).
    CliffordTableau then(const CliffordTableau &later) const;
    CliffordTableau inverse() const;

    /// Applies P -> C^dag P C (or C P C^dag if `inverse`) to qubits a (and b for arity 2).
    void conjugate_in_place(PauliString &p, size_t a, size_t b, bool inverse = false) const;

    bool operator==(const CliffordTableau &other) const {
        return arity_ == other.arity_ && images_ == other.images_;
    }

   private:
    uint8_t arity_ = 0;
    std::array<LocalPauli, 4> images_{};
    std::array<LocalPauli, 16> fwd_{};
    std::array<LocalPauli, 16> inv_{};
};

/// Returns C^dag P C for the gate on qubits (a, b). `b` is ignored for arity 1.
PauliString conjugate(const PauliString &p, const CliffordTableau &c, size_t a, size_t b = 0);

enum class Generator : uint8_t { H0, H1, S0, S1, CX01 };

/// An exhaustively enumerated finite Clifford group with a generating word for each element.
///
/// Element unitaries are U = G_{w[0]} G_{w[1]} ... G_{w[k-1]} (matrix product), so the last
/// letter acts first in time.
class CliffordGroup {
   public:
    size_t size() const {
        return elements_.size();
    }
    const CliffordTableau &operator[](size_t id) const {
        return elements_[id];
    }
    const std::vector<Generator> &word(size_t id) const {
        return words_[id];
    }
    /// Index of the element with this tableau, or -1.
    int64_t find(const CliffordTableau &c) const;

   protected:
    void enumerate(uint8_t arity, const std::vector<Generator> &gens);

    std::vector<CliffordTableau> elements_;
    std::vector<std::vector<Generator>> words_;
    std::vector<std::pair<uint32_t, uint32_t>> sorted_keys_;
};

/// The 24-element single-qubit Clifford group modulo phase.
class C1Group : public CliffordGroup {
   public:
    static const C1Group &get();
    size_t identity_id() const {
        return identity_;
    }
    size_t x_id() const {
        return x_;
    }

   private:
    C1Group();
    size_t identity_ = 0;
    size_t x_ = 0;
};

/// The 11520-element two-qubit Clifford group modulo phase.
class C2Group : public CliffordGroup {
   public:
    static const C2Group &get();

    bool separable(size_t id) const {
        return separable_[id] != 0;
    }
    size_t num_separable() const;
    /// For separable elements, C = u_0 (x) u_1; returns the C1 ids of (u_0, u_1).
    std::pair<size_t, size_t> local_factors(size_t id) const;

    /// Uniform sample over the group.
    size_t sample(Rng &rng) const {
        return uniform_index(rng, size());
    }

   private:
    C2Group();
    std::vector<uint8_t> separable_;
    std::vector<std::pair<uint16_t, uint16_t>> factors_;
};

/// True iff C maps X_0, Z_0 into qubit 0 and X_1, Z_1 into qubit 1. Throws for arity 1.
bool is_separable(const CliffordTableau &c);

}  // namespace magiclab

#endif
