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

#ifndef MAGICLAB_TESTS_TEST_UTIL_H
#define MAGICLAB_TESTS_TEST_UTIL_H

#include <Eigen/Dense>
#include <complex>

#include "magiclab/dense.h"
#include "magiclab/pauli.h"
#include "magiclab/rng.h"

namespace magiclab::testutil {

/// Dense matrix of a Pauli, built factor by factor from 2x2 blocks. Qubit q is bit q.
inline Eigen::MatrixXcd pauli_matrix(const PauliString &p) {
    using C = std::complex<double>;
    size_t n = p.num_qubits();
    Eigen::Matrix2cd X, Z, I;
    X << 0, 1, 1, 0;
    Z << 1, 0, 0, -1;
    I.setIdentity();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (size_t k = 0; k < n; k++) {
        size_t q = n - 1 - k;  // most significant qubit first in the Kronecker product
        Eigen::Matrix2cd f = (p.x(q) ? X : I) * (p.z(q) ? Z : I);
        Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
        for (int r = 0; r < m.rows(); r++) {
            for (int c = 0; c < m.cols(); c++) {
                next.block<2, 2>(2 * r, 2 * c) = m(r, c) * f;
            }
        }
        m = next;
    }
    return m * std::pow(C(0, 1), static_cast<int>(p.phase()));
}

/// Embeds a 4x4 gate on qubits (a, b) into an n-qubit unitary.
inline Eigen::MatrixXcd embed_2q(const Mat4 &u, size_t a, size_t b, size_t n) {
    size_t dim = size_t{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (size_t col = 0; col < dim; col++) {
        size_t lc = ((col >> a) & 1) | (((col >> b) & 1) << 1);
        for (size_t lr = 0; lr < 4; lr++) {
            size_t row = col & ~((size_t{1} << a) | (size_t{1} << b));
            row |= (lr & 1) << a;
            row |= ((lr >> 1) & 1) << b;
            m(row, col) += u[4 * lr + lc];
        }
    }
    return m;
}

inline PauliString random_pauli(size_t n, Rng &rng, bool hermitian = true) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        p.set_x(q, coin(rng));
        p.set_z(q, coin(rng));
    }
    uint8_t ph = static_cast<uint8_t>(rng() & 3);
    if (hermitian) {
        ph = static_cast<uint8_t>((p.num_y() + 2 * (rng() & 1)) & 3);
    }
    p.set_phase(ph);
    return p;
}

}  // namespace magiclab::testutil

#endif
