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

#include "magiclab/pauli.h"

#include <stdexcept>

namespace magiclab {

PauliString::PauliString(size_t num_qubits)
    : n_(num_qubits), phase_(0), xs_(num_words(num_qubits), 0), zs_(num_words(num_qubits), 0) {
}

PauliString PauliString::from_str(std::string_view text) {
    uint8_t phase = 0;
    size_t k = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        if (text[k] == '-') {
            phase = 2;
        }
        k++;
    }
    if (k < text.size() && text[k] == 'i') {
        phase = (phase + 1) & 3;
        k++;
    }
    PauliString result(text.size() - k);
    for (size_t q = 0; k < text.size(); k++, q++) {
        char c = text[k];
        switch (c) {
            case '_':
            case 'I':
                break;
            case 'X':
                result.set_x(q, true);
                break;
            case 'Z':
                result.set_z(q, true);
                break;
            case 'Y':
                result.set_x(q, true);
                result.set_z(q, true);
                phase = (phase + 1) & 3;
                break;
            default:
                throw std::invalid_argument("bad Pauli character '" + std::string(1, c) + "'");
        }
    }
    result.phase_ = phase;
    return result;
}

PauliString PauliString::single(size_t num_qubits, size_t qubit, char pauli) {
    if (qubit >= num_qubits) {
        throw std::out_of_range("qubit index out of range");
    }
    PauliString result(num_qubits);
    result.set_pauli(qubit, pauli);
    return result;
}

void PauliString::set_x(size_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    xs_[q >> 6] = v ? (xs_[q >> 6] | m) : (xs_[q >> 6] & ~m);
}

void PauliString::set_z(size_t q, bool v) {
    uint64_t m = uint64_t{1} << (q & 63);
    zs_[q >> 6] = v ? (zs_[q >> 6] | m) : (zs_[q >> 6] & ~m);
}

void PauliString::set_pauli(size_t q, char pauli) {
    bool was_y = x(q) && z(q);
    bool nx = pauli == 'X' || pauli == 'Y';
    bool nz = pauli == 'Z' || pauli == 'Y';
    if (pauli != 'I' && pauli != '_' && !nx && !nz) {
        throw std::invalid_argument("bad Pauli character");
    }
    set_x(q, nx);
    set_z(q, nz);
    bool is_y = nx && nz;
    phase_ = (phase_ + (is_y ? 1 : 0) + (was_y ? 3 : 0)) & 3;
}

char PauliString::pauli_at(size_t q) const {
    return "_ZXY"[(x(q) << 1) | z(q)];
}

size_t PauliString::num_y() const {
    size_t c = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        c += std::popcount(xs_[w] & zs_[w]);
    }
    return c;
}

size_t PauliString::weight() const {
    size_t c = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        c += std::popcount(xs_[w] | zs_[w]);
    }
    return c;
}

bool PauliString::is_identity_up_to_phase() const {
    for (size_t w = 0; w < xs_.size(); w++) {
        if (xs_[w] | zs_[w]) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> PauliString::support() const {
    std::vector<size_t> out;
    for (size_t w = 0; w < xs_.size(); w++) {
        uint64_t m = xs_[w] | zs_[w];
        while (m) {
            out.push_back(w * 64 + std::countr_zero(m));
            m &= m - 1;
        }
    }
    return out;
}

bool PauliString::is_hermitian() const {
    return ((phase_ + num_y()) & 1) == 0;
}

int PauliString::sign() const {
    if (!is_hermitian()) {
        throw std::logic_error("sign() of a non-Hermitian Pauli operator");
    }
    // i^phase X^x Z^z = i^(phase - #Y) * (Y-form product).
    uint8_t rel = (phase_ + 4 - (num_y() & 3)) & 3;
    return rel == 0 ? +1 : -1;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (n_ != rhs.n_) {
        throw std::invalid_argument("Pauli dimension mismatch");
    }
    // (X^x1 Z^z1)(X^x2 Z^z2) = (-1)^(z1.x2) X^(x1^x2) Z^(z1^z2)
    size_t anti = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        anti += std::popcount(zs_[w] & rhs.xs_[w]);
        xs_[w] ^= rhs.xs_[w];
        zs_[w] ^= rhs.zs_[w];
    }
    phase_ = (phase_ + rhs.phase_ + 2 * (anti & 1)) & 3;
    return *this;
}

PauliString operator*(PauliString lhs, const PauliString &rhs) {
    lhs *= rhs;
    return lhs;
}

bool PauliString::same_bits(const PauliString &other) const {
    return n_ == other.n_ && xs_ == other.xs_ && zs_ == other.zs_;
}

std::string PauliString::str() const {
    std::string out;
    uint8_t rel = (phase_ + 4 - (num_y() & 3)) & 3;
    out += (rel & 2) ? '-' : '+';
    if (rel & 1) {
        out += 'i';
    }
    for (size_t q = 0; q < n_; q++) {
        out += pauli_at(q);
    }
    return out;
}

PauliString PauliString::slice(size_t begin, size_t count) const {
    if (begin + count > n_) {
        throw std::out_of_range("slice out of range");
    }
    PauliString out(count);
    for (size_t q = 0; q < count; q++) {
        out.set_x(q, x(begin + q));
        out.set_z(q, z(begin + q));
    }
    out.phase_ = phase_;
    return out;
}

bool symplectic_product(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("Pauli dimension mismatch");
    }
    auto ax = a.xs();
    auto az = a.zs();
    auto bx = b.xs();
    auto bz = b.zs();
    uint64_t acc = 0;
    for (size_t w = 0; w < ax.size(); w++) {
        acc ^= (ax[w] & bz[w]) ^ (az[w] & bx[w]);
    }
    return std::popcount(acc) & 1;
}

}  // namespace magiclab
