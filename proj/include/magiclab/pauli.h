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

#ifndef MAGICLAB_PAULI_H
#define MAGICLAB_PAULI_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace magiclab {

/// Number of 64-bit words needed to hold `n` bits.
constexpr size_t num_words(size_t n) {
    return (n + 63) / 64;
}

/// An n-qubit Pauli operator i^phase * X^x * Z^z, stored as packed GF(2) bit vectors.
///
/// The per-qubit factor order is X then Z, so Y = i*X*Z is (x=1, z=1) with one unit of phase.
/// Multiplication is the group product with the phase tracked exactly mod 4.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t num_qubits);

    /// Parses strings like "+XYZ_", "-iZZ", "X_Y". '_' and 'I' denote identity.
    static PauliString from_str(std::string_view text);
    /// Single-qubit Pauli ('X', 'Y' or 'Z') on `qubit` of an n-qubit register, sign +1.
    static PauliString single(size_t num_qubits, size_t qubit, char pauli);

    size_t num_qubits() const {
        return n_;
    }
    uint8_t phase() const {
        return phase_;
    }
    void set_phase(uint8_t phase) {
        phase_ = phase & 3;
    }

    bool x(size_t q) const {
        return (xs_[q >> 6] >> (q & 63)) & 1;
    }
    bool z(size_t q) const {
        return (zs_[q >> 6] >> (q & 63)) & 1;
    }
    void set_x(size_t q, bool v);
    void set_z(size_t q, bool v);
    /// Sets the qubit to one of 'I','X','Y','Z' keeping the Hermitian sign unchanged.
    void set_pauli(size_t q, char pauli);
    char pauli_at(size_t q) const;

    std::span<const uint64_t> xs() const {
        return xs_;
    }
    std::span<const uint64_t> zs() const {
        return zs_;
    }
    std::span<uint64_t> xs_mut() {
        return xs_;
    }
    std::span<uint64_t> zs_mut() {
        return zs_;
    }

    /// Number of Y factors, i.e. popcount(x & z).
    size_t num_y() const;
    size_t weight() const;
    bool is_identity_up_to_phase() const;
    /// Qubits on which the operator acts non-trivially.
    std::vector<size_t> support() const;

    /// Hermitian iff the prefactor is real once each Y absorbs its factor of i.
    bool is_hermitian() const;
    /// For a Hermitian operator, the sign (+1 or -1) in front of its Y-form tensor product.
    int sign() const;
    /// Flip the Hermitian sign (adds i^2).
    void negate() {
        phase_ = (phase_ + 2) & 3;
    }

    /// Group product: *this = (*this) * rhs.
    PauliString &operator*=(const PauliString &rhs);
    bool operator==(const PauliString &other) const = default;

    /// True if the bit patterns agree (phase ignored).
    bool same_bits(const PauliString &other) const;

    /// Human-readable Y-form, e.g. "+XY_Z" or "-iZ_" for non-Hermitian operators.
    std::string str() const;

    /// Restricts to qubits [begin, begin + count), keeping the phase.
    PauliString slice(size_t begin, size_t count) const;

   private:
    size_t n_ = 0;
    uint8_t phase_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
};

PauliString operator*(PauliString lhs, const PauliString &rhs);

/// 0 if the operators commute, 1 if they anti-commute. Throws on dimension mismatch.
bool symplectic_product(const PauliString &a, const PauliString &b);
inline bool commutes(const PauliString &a, const PauliString &b) {
    return !symplectic_product(a, b);
}

}  // namespace magiclab

#endif
