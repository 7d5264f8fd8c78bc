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

#ifndef MAGICLAB_DENSE_H
#define MAGICLAB_DENSE_H

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "magiclab/circuit.h"
#include "magiclab/pauli.h"
#include "magiclab/rng.h"

namespace magiclab {

using Amp = std::complex<double>;
/// Row-major 2x2 and 4x4 matrices. For 4x4, basis index = bit(qubit a) + 2 * bit(qubit b).
using Mat2 = std::array<Amp, 4>;
using Mat4 = std::array<Amp, 16>;

constexpr size_t kMaxDenseQubits = 20;

/// State vector over m qubits; qubit q is bit q of the basis index.
class DenseState {
   public:
    explicit DenseState(size_t m);
    /// |A>^(x)t with |A> = (|0> + e^{i pi/4}|1>)/sqrt(2).
    static DenseState magic(size_t t);

    size_t num_qubits() const {
        return m_;
    }
    const std::vector<Amp> &amps() const {
        return amps_;
    }
    std::vector<Amp> &amps_mut() {
        return amps_;
    }

    void apply_1q(const Mat2 &u, size_t q);
    void apply_2q(const Mat4 &u, size_t a, size_t b);
    void apply_t(size_t q);
    /// |psi> -> P|psi>.
    void apply_pauli(const PauliString &p);

    double norm2() const;
    void normalize();
    /// <psi|P|psi> for normalized psi.
    Amp expectation(const PauliString &p) const;
    /// Applies (1 + sign*P)/2 without renormalizing; returns the new squared norm.
    double project_pauli(const PauliString &p, int sign);
    /// Applies the Z projector for the given outcome without renormalizing; returns the new squared norm.
    double project_z(size_t q, int outcome);
    double prob_z(size_t q, int outcome) const;

   private:
    size_t m_;
    std::vector<Amp> amps_;
};

Mat2 hadamard_matrix();
Mat2 phase_s_matrix();
Mat2 t_matrix();
Mat4 cx_matrix();
Mat4 swap_matrix();
Mat4 kron(const Mat2 &on_a, const Mat2 &on_b);
Mat4 mul(const Mat4 &x, const Mat4 &y);
Mat2 mul(const Mat2 &x, const Mat2 &y);
/// Dense unitary of a C_2 element from its generating word.
Mat4 c2_unitary(size_t id);
/// Dense unitary of a C_1 element from its generating word.
Mat2 c1_unitary(size_t id);
Eigen::Matrix4cd to_eigen(const Mat4 &u);

struct DenseRun {
    DenseState state;
    /// Probability of the monitor record.
    double record_probability = 1.0;
    std::vector<Outcome> record;
};

/// Simulates the circuit on |0...0>. Recorded monitor outcomes are postselected; Unset ones are
/// drawn by the Born rule (requires `rng`). Throws std::domain_error for a zero-probability record.
DenseRun run_circuit(const Circuit &circuit, Rng *rng = nullptr);

/// Marginal over `outputs`: entry k has bit i set iff outputs[i] reads -1.
std::vector<double> output_distribution(const DenseState &state, const std::vector<uint32_t> &outputs);
/// Full distribution over all qubits.
std::vector<double> output_distribution(const DenseState &state);

/// True iff exactly 2^m Pauli operators have |<P>| = 1 within 1e-9 (normalized state).
bool is_stabilizer(const DenseState &state);

/// Operator-Schmidt rank of a two-qubit unitary across the qubit a / qubit b split.
int schmidt_rank_2q(const Eigen::Matrix4cd &u);

double total_variation(const std::vector<double> &a, const std::vector<double> &b);

}  // namespace magiclab

#endif
