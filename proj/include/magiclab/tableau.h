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

#ifndef MAGICLAB_TABLEAU_H
#define MAGICLAB_TABLEAU_H

#include <optional>
#include <vector>

#include "magiclab/clifford.h"
#include "magiclab/pauli.h"
#include "magiclab/rng.h"

namespace magiclab {

struct MeasureResult {
    int outcome = +1;
    bool deterministic = false;
};

/// Pure n-qubit stabilizer state as n stabilizer rows and n destabilizer rows.
class StabilizerTableau {
   public:
    /// The state |0...0>.
    explicit StabilizerTableau(size_t n);
    StabilizerTableau(std::vector<PauliString> stabilizers, std::vector<PauliString> destabilizers);

    size_t num_qubits() const {
        return n_;
    }
    const std::vector<PauliString> &stabilizers() const {
        return stab_;
    }
    const std::vector<PauliString> &destabilizers() const {
        return destab_;
    }

    /// State update |psi> -> C|psi> for a gate on qubits (a, b).
    void apply(const CliffordTableau &c, size_t a, size_t b = 0);
    void apply_c2(size_t id, size_t a, size_t b);
    void apply_c1(size_t id, size_t a);

    /// Projective measurement of a Hermitian Pauli. `coin` supplies the outcome if random.
    MeasureResult measure(const PauliString &p, bool coin);
    MeasureResult measure(const PauliString &p, Rng &rng) {
        return measure(p, coin(rng));
    }
    /// Forces a random measurement to `outcome`. Returns false (state unchanged) if P is
    /// deterministic with the opposite value.
    bool postselect(const PauliString &p, int outcome);

    /// If +-P is in the stabilizer group, its sign there.
    std::optional<int> peek(const PauliString &p) const;
    /// Indices of the stabilizers whose product is +-P, valid when P commutes with all of them.
    std::vector<size_t> stabilizer_decomposition(const PauliString &p) const;

    /// True if all (anti)commutation relations hold and the rows are Hermitian.
    bool check_invariants() const;

   private:
    size_t n_;
    std::vector<PauliString> stab_;
    std::vector<PauliString> destab_;
};

/// Entanglement entropy (bits) of qubits {1..j-1} in 1-based cut notation; 1 <= j <= n+1.
size_t entanglement_entropy(const StabilizerTableau &t, size_t j);
/// Entanglement entropy of an arbitrary qubit subset.
size_t entanglement_entropy_of(const StabilizerTableau &t, const std::vector<size_t> &subset);

/// Expansion of a Pauli over generator / flip-operator pairs.
struct PauliDecomposition {
    std::vector<uint8_t> alpha;  // exponents of g_i
    std::vector<uint8_t> beta;   // exponents of flip operators
    size_t gamma = 0;            // pairs allotted to the operator
    size_t nonzero_pairs = 0;    // pairs with a nonzero exponent
    std::vector<PauliString> generators;
    std::vector<PauliString> flips;
};

/// Decomposition in the tableau's own (s_i, d_i) gauge; gamma counts pairs with nonzero exponents.
PauliDecomposition decompose_pauli(const StabilizerTableau &t, const PauliString &m);

/// Decomposition of a single-qubit Pauli on qubit j (0-based) in the bipartite normal form:
/// generators local to qubits < j, generators local to qubits > j, and the rest. Tails on the
/// local generators are removed so only the remaining pairs appear; gamma is their number.
PauliDecomposition decompose_single_qubit(const StabilizerTableau &t, size_t j, char pauli);

/// Reconstructs the product of the decomposition (up to a phase).
PauliString recompose(const PauliDecomposition &d, size_t n);

}  // namespace magiclab

#endif
