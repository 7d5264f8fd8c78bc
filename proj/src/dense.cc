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

#include "magiclab/dense.h"

#include <cmath>
#include <stdexcept>

#include "magiclab/clifford.h"

namespace magiclab {

namespace {

const Amp kI(0, 1);

uint64_t pauli_mask(std::span<const uint64_t> words) {
    return words.empty() ? 0 : words[0];
}

}  // namespace

DenseState::DenseState(size_t m) : m_(m), amps_(size_t{1} << m, Amp(0)) {
    if (m > kMaxDenseQubits) {
        throw std::invalid_argument("dense state too large");
    }
    amps_[0] = 1;
}

DenseState DenseState::magic(size_t t) {
    DenseState s(t);
    Amp phase = std::polar(1.0, M_PI / 4);
    double amp = std::pow(std::sqrt(0.5), static_cast<double>(t));
    for (size_t k = 0; k < s.amps_.size(); k++) {
        s.amps_[k] = amp * std::pow(phase, std::popcount(k));
    }
    return s;
}

void DenseState::apply_1q(const Mat2 &u, size_t q) {
    size_t bit = size_t{1} << q;
    for (size_t k = 0; k < amps_.size(); k++) {
        if (k & bit) {
            continue;
        }
        Amp v0 = amps_[k];
        Amp v1 = amps_[k | bit];
        amps_[k] = u[0] * v0 + u[1] * v1;
        amps_[k | bit] = u[2] * v0 + u[3] * v1;
    }
}

void DenseState::apply_2q(const Mat4 &u, size_t a, size_t b) {
    if (a == b) {
        throw std::invalid_argument("apply_2q needs distinct qubits");
    }
    size_t ba = size_t{1} << a;
    size_t bb = size_t{1} << b;
    for (size_t k = 0; k < amps_.size(); k++) {
        if (k & (ba | bb)) {
            continue;
        }
        size_t idx[4] = {k, k | ba, k | bb, k | ba | bb};
        Amp v[4];
        for (int i = 0; i < 4; i++) {
            v[i] = amps_[idx[i]];
        }
        for (int r = 0; r < 4; r++) {
            Amp acc = 0;
            for (int c = 0; c < 4; c++) {
                acc += u[4 * r + c] * v[c];
            }
            amps_[idx[r]] = acc;
        }
    }
}

void DenseState::apply_t(size_t q) {
    apply_1q(t_matrix(), q);
}

void DenseState::apply_pauli(const PauliString &p) {
    if (p.num_qubits() != m_) {
        throw std::invalid_argument("apply_pauli: dimension mismatch");
    }
    uint64_t x = pauli_mask(p.xs());
    uint64_t z = pauli_mask(p.zs());
    Amp ph = std::pow(kI, static_cast<int>(p.phase()));
    std::vector<Amp> out(amps_.size());
    for (size_t k = 0; k < amps_.size(); k++) {
        double s = (std::popcount(z & k) & 1) ? -1.0 : 1.0;
        out[k ^ x] = ph * s * amps_[k];
    }
    amps_ = std::move(out);
}

double DenseState::norm2() const {
    double acc = 0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

void DenseState::normalize() {
    double n = std::sqrt(norm2());
    if (n == 0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    for (auto &a : amps_) {
        a /= n;
    }
}

Amp DenseState::expectation(const PauliString &p) const {
    DenseState tmp = *this;
    tmp.apply_pauli(p);
    Amp acc = 0;
    for (size_t k = 0; k < amps_.size(); k++) {
        acc += std::conj(amps_[k]) * tmp.amps_[k];
    }
    return acc;
}

double DenseState::project_pauli(const PauliString &p, int sign) {
    DenseState tmp = *this;
    tmp.apply_pauli(p);
    for (size_t k = 0; k < amps_.size(); k++) {
        amps_[k] = 0.5 * (amps_[k] + static_cast<double>(sign) * tmp.amps_[k]);
    }
    return norm2();
}

double DenseState::project_z(size_t q, int outcome) {
    size_t bit = size_t{1} << q;
    for (size_t k = 0; k < amps_.size(); k++) {
        bool one = k & bit;
        if (one != (outcome < 0)) {
            amps_[k] = 0;
        }
    }
    return norm2();
}

double DenseState::prob_z(size_t q, int outcome) const {
    size_t bit = size_t{1} << q;
    double acc = 0;
    for (size_t k = 0; k < amps_.size(); k++) {
        bool one = k & bit;
        if (one == (outcome < 0)) {
            acc += std::norm(amps_[k]);
        }
    }
    return acc;
}

Mat2 hadamard_matrix() {
    double r = std::sqrt(0.5);
    return {r, r, r, -r};
}

Mat2 phase_s_matrix() {
    return {1, 0, 0, kI};
}

Mat2 t_matrix() {
    return {1, 0, 0, std::polar(1.0, M_PI / 4)};
}

Mat4 cx_matrix() {
    // control a, target b: |a b> -> |a, b ^ a>
    Mat4 u{};
    for (int k = 0; k < 4; k++) {
        int a = k & 1;
        int b = (k >> 1) & 1;
        int out = a | ((b ^ a) << 1);
        u[4 * out + k] = 1;
    }
    return u;
}

Mat4 swap_matrix() {
    Mat4 u{};
    for (int k = 0; k < 4; k++) {
        int out = ((k & 1) << 1) | ((k >> 1) & 1);
        u[4 * out + k] = 1;
    }
    return u;
}

Mat4 kron(const Mat2 &on_a, const Mat2 &on_b) {
    Mat4 u{};
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            u[4 * r + c] = on_a[2 * (r & 1) + (c & 1)] * on_b[2 * (r >> 1) + (c >> 1)];
        }
    }
    return u;
}

Mat4 mul(const Mat4 &x, const Mat4 &y) {
    Mat4 u{};
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            Amp acc = 0;
            for (int k = 0; k < 4; k++) {
                acc += x[4 * r + k] * y[4 * k + c];
            }
            u[4 * r + c] = acc;
        }
    }
    return u;
}

Mat2 mul(const Mat2 &x, const Mat2 &y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

namespace {

Mat4 generator_matrix(Generator g) {
    Mat2 id{1, 0, 0, 1};
    switch (g) {
        case Generator::H0:
            return kron(hadamard_matrix(), id);
        case Generator::H1:
            return kron(id, hadamard_matrix());
        case Generator::S0:
            return kron(phase_s_matrix(), id);
        case Generator::S1:
            return kron(id, phase_s_matrix());
        case Generator::CX01:
            return cx_matrix();
    }
    throw std::logic_error("unknown generator");
}

}  // namespace

Mat4 c2_unitary(size_t id) {
    Mat4 u = kron({1, 0, 0, 1}, {1, 0, 0, 1});
    for (auto g : C2Group::get().word(id)) {
        u = mul(u, generator_matrix(g));
    }
    return u;
}

Mat2 c1_unitary(size_t id) {
    Mat2 u{1, 0, 0, 1};
    for (auto g : C1Group::get().word(id)) {
        u = mul(u, g == Generator::H0 ? hadamard_matrix() : phase_s_matrix());
    }
    return u;
}

Eigen::Matrix4cd to_eigen(const Mat4 &u) {
    Eigen::Matrix4cd m;
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            m(r, c) = u[4 * r + c];
        }
    }
    return m;
}

DenseRun run_circuit(const Circuit &circuit, Rng *rng) {
    DenseRun run{DenseState(circuit.n), 1.0, {}};
    DenseState &st = run.state;
    for (const auto &e : circuit.events) {
        switch (e.kind) {
            case EventKind::Clifford2:
                st.apply_2q(c2_unitary(e.gate), e.a, e.b);
                break;
            case EventKind::Clifford1:
                st.apply_1q(c1_unitary(e.gate), e.a);
                break;
            case EventKind::T:
                st.apply_t(e.a);
                break;
            case EventKind::Monitor: {
                int outcome = outcome_sign(e.outcome);
                if (outcome == 0) {
                    if (rng == nullptr) {
                        throw std::invalid_argument("run_circuit: unset monitor outcome needs an rng");
                    }
                    outcome = uniform01(*rng) < st.prob_z(e.a, +1) ? +1 : -1;
                }
                double p = st.project_z(e.a, outcome);
                if (p < 1e-14) {
                    throw std::domain_error("run_circuit: zero-probability monitor record");
                }
                run.record_probability *= p;
                st.normalize();
                run.record.push_back(outcome_of(outcome));
                break;
            }
        }
    }
    return run;
}

std::vector<double> output_distribution(const DenseState &state, const std::vector<uint32_t> &outputs) {
    std::vector<double> dist(size_t{1} << outputs.size(), 0.0);
    const auto &a = state.amps();
    for (size_t k = 0; k < a.size(); k++) {
        size_t idx = 0;
        for (size_t i = 0; i < outputs.size(); i++) {
            idx |= ((k >> outputs[i]) & 1) << i;
        }
        dist[idx] += std::norm(a[k]);
    }
    return dist;
}

std::vector<double> output_distribution(const DenseState &state) {
    std::vector<uint32_t> all;
    for (uint32_t q = 0; q < state.num_qubits(); q++) {
        all.push_back(q);
    }
    return output_distribution(state, all);
}

bool is_stabilizer(const DenseState &state) {
    size_t m = state.num_qubits();
    size_t dim = size_t{1} << m;
    DenseState s = state;
    s.normalize();
    const auto &a = s.amps();
    std::vector<Amp> w(dim);
    size_t count = 0;
    for (size_t x = 0; x < dim; x++) {
        // <psi| X^x Z^z |psi> = sum_k conj(a[k^x]) a[k] (-1)^{z.k}
        for (size_t k = 0; k < dim; k++) {
            w[k] = std::conj(a[k ^ x]) * a[k];
        }
        for (size_t h = 1; h < dim; h <<= 1) {
            for (size_t i = 0; i < dim; i += h << 1) {
                for (size_t j = i; j < i + h; j++) {
                    Amp u = w[j];
                    Amp v = w[j + h];
                    w[j] = u + v;
                    w[j + h] = u - v;
                }
            }
        }
        for (size_t z = 0; z < dim; z++) {
            if (std::abs(w[z]) > 1 - 1e-9) {
                count++;
            }
        }
    }
    return count == dim;
}

int schmidt_rank_2q(const Eigen::Matrix4cd &u) {
    if (!(u.adjoint() * u).isApprox(Eigen::Matrix4cd::Identity(), 1e-9)) {
        throw std::invalid_argument("schmidt_rank_2q: input is not unitary");
    }
    Eigen::Matrix4cd r;
    for (int row = 0; row < 4; row++) {
        for (int col = 0; col < 4; col++) {
            int ia = row & 1, ib = row >> 1, ja = col & 1, jb = col >> 1;
            r(2 * ia + ja, 2 * ib + jb) = u(row, col);
        }
    }
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(r);
    int rank = 0;
    for (int i = 0; i < 4; i++) {
        if (svd.singularValues()(i) > 1e-9) {
            rank++;
        }
    }
    return rank;
}

double total_variation(const std::vector<double> &a, const std::vector<double> &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("total_variation: size mismatch");
    }
    double acc = 0;
    for (size_t i = 0; i < a.size(); i++) {
        acc += std::abs(a[i] - b[i]);
    }
    return 0.5 * acc;
}

}  // namespace magiclab
