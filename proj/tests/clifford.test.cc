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

#include "magiclab/clifford.h"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "magiclab/dense.h"
#include "test_util.h"

using namespace magiclab;

namespace {

PauliString local_to_string(const LocalPauli &p, size_t n) {
    PauliString s(n);
    for (size_t q = 0; q < n; q++) {
        s.set_x(q, (p.x >> q) & 1);
        s.set_z(q, (p.z >> q) & 1);
    }
    s.set_phase(p.phase);
    return s;
}

// Checks U^dag P U == table image for all 16 patterns, including the phase.
bool tableau_matches_unitary(const CliffordTableau &t, const Eigen::Matrix4cd &u) {
    for (uint8_t idx = 0; idx < 16; idx++) {
        LocalPauli p{static_cast<uint8_t>(idx & 3), static_cast<uint8_t>(idx >> 2), 0};
        Eigen::MatrixXcd lhs = u.adjoint() * testutil::pauli_matrix(local_to_string(p, 2)) * u;
        Eigen::MatrixXcd rhs = testutil::pauli_matrix(local_to_string(t.fwd(idx), 2));
        if ((lhs - rhs).norm() > 1e-9) {
            return false;
        }
        Eigen::MatrixXcd lhs_inv = u * testutil::pauli_matrix(local_to_string(p, 2)) * u.adjoint();
        Eigen::MatrixXcd rhs_inv = testutil::pauli_matrix(local_to_string(t.inv(idx), 2));
        if ((lhs_inv - rhs_inv).norm() > 1e-9) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(clifford, group_orders) {
    EXPECT_EQ(C1Group::get().size(), 24);
    EXPECT_EQ(C2Group::get().size(), 11520);
    EXPECT_EQ(C2Group::get().num_separable(), 576);
}

TEST(clifford, conjugate_examples) {
    auto h = CliffordTableau::hadamard();
    EXPECT_EQ(conjugate(PauliString::from_str("Z"), h, 0).str(), "+X");
    auto cx = CliffordTableau::cx();
    EXPECT_EQ(conjugate(PauliString::from_str("_Z"), cx, 0, 1).str(), "+ZZ");
    EXPECT_EQ(conjugate(PauliString::from_str("X_"), cx, 0, 1).str(), "+XX");
    auto s = CliffordTableau::phase_s();
    EXPECT_EQ(conjugate(PauliString::from_str("X"), s, 0).str(), "-Y");
    EXPECT_EQ(conjugate(PauliString::from_str("Z__"), cx, 2, 0).str(), "+Z_Z");
    EXPECT_THROW(conjugate(PauliString::from_str("XX"), cx, 0, 2), std::out_of_range);
}

TEST(clifford, every_c2_element_matches_its_dense_unitary) {
    const auto &g = C2Group::get();
    for (size_t id = 0; id < g.size(); id++) {
        ASSERT_TRUE(tableau_matches_unitary(g[id], to_eigen(c2_unitary(id)))) << "element " << id;
    }
}

TEST(clifford, every_c1_element_matches_its_dense_unitary) {
    const auto &g = C1Group::get();
    Mat2 id2{1, 0, 0, 1};
    for (size_t id = 0; id < g.size(); id++) {
        auto t = CliffordTableau::embed(g[id], 0);
        ASSERT_TRUE(tableau_matches_unitary(t, to_eigen(kron(c1_unitary(id), id2)))) << "element " << id;
    }
    EXPECT_EQ(g[g.x_id()], CliffordTableau::pauli_x());
}

TEST(clifford, inverse_and_composition) {
    const auto &g = C2Group::get();
    Rng rng(5);
    for (int trial = 0; trial < 200; trial++) {
        const auto &a = g[g.sample(rng)];
        const auto &b = g[g.sample(rng)];
        EXPECT_EQ(a.then(a.inverse()), CliffordTableau::identity(2));
        auto ab = a.then(b);
        Eigen::Matrix4cd ua = to_eigen(c2_unitary(g.find(a)));
        Eigen::Matrix4cd ub = to_eigen(c2_unitary(g.find(b)));
        ASSERT_TRUE(tableau_matches_unitary(ab, ub * ua));
    }
}

TEST(clifford, separability_matches_operator_schmidt_rank) {
    const auto &g = C2Group::get();
    std::map<int, size_t> ranks;
    for (size_t id = 0; id < g.size(); id++) {
        int r = schmidt_rank_2q(to_eigen(c2_unitary(id)));
        ranks[r]++;
        ASSERT_EQ(g.separable(id), r == 1) << "element " << id;
        ASSERT_EQ(is_separable(g[id]), g.separable(id));
    }
    EXPECT_EQ(ranks.count(3), 0);
    EXPECT_EQ(ranks[1], 576);
}

TEST(clifford, local_factors_reassemble_the_gate) {
    const auto &g = C2Group::get();
    const auto &c1 = C1Group::get();
    for (size_t id = 0; id < g.size(); id++) {
        if (!g.separable(id)) {
            continue;
        }
        auto [u0, u1] = g.local_factors(id);
        auto composed = CliffordTableau::embed(c1[u0], 0).then(CliffordTableau::embed(c1[u1], 1));
        ASSERT_EQ(composed, g[id]);
    }
    EXPECT_THROW(g.local_factors(g.find(CliffordTableau::cx())), std::invalid_argument);
}

TEST(clifford, named_gates) {
    const auto &g = C2Group::get();
    auto hs = CliffordTableau::embed(CliffordTableau::hadamard(), 0).then(CliffordTableau::embed(CliffordTableau::phase_s(), 1));
    EXPECT_TRUE(is_separable(hs));
    EXPECT_FALSE(is_separable(CliffordTableau::cx()));
    EXPECT_FALSE(is_separable(CliffordTableau::swap()));
    EXPECT_GE(g.find(CliffordTableau::swap()), 0);
    EXPECT_EQ(schmidt_rank_2q(to_eigen(kron(hadamard_matrix(), phase_s_matrix()))), 1);
    EXPECT_EQ(schmidt_rank_2q(to_eigen(cx_matrix())), 2);
    EXPECT_EQ(schmidt_rank_2q(to_eigen(swap_matrix())), 4);
    EXPECT_THROW(is_separable(CliffordTableau::hadamard()), std::invalid_argument);
    Mat4 bad{};
    bad[0] = 2;
    EXPECT_THROW(schmidt_rank_2q(to_eigen(bad)), std::invalid_argument);
}

TEST(clifford, image_of_x0_is_uniform_over_signed_paulis) {
    // Exhaustive: each of the 30 signed non-identity two-qubit Paulis is hit 11520 / 30 times.
    const auto &g = C2Group::get();
    std::map<std::pair<uint8_t, uint8_t>, size_t> counts;
    for (size_t id = 0; id < g.size(); id++) {
        const auto &im = g[id].images()[0];
        counts[{im.index(), im.phase}]++;
    }
    EXPECT_EQ(counts.size(), 30);
    for (const auto &[k, c] : counts) {
        EXPECT_EQ(c, 384);
    }
}

TEST(clifford, sampling_is_uniform) {
    const auto &g = C2Group::get();
    Rng rng(2026);
    const size_t draws = 100000;
    size_t sep = 0;
    std::map<std::pair<uint8_t, uint8_t>, size_t> counts;
    for (size_t k = 0; k < draws; k++) {
        size_t id = g.sample(rng);
        sep += g.separable(id);
        const auto &im = g[id].images()[0];
        counts[{im.index(), im.phase}]++;
    }
    double frac = static_cast<double>(sep) / draws;
    double se = std::sqrt(0.05 * 0.95 / draws);
    EXPECT_LT(std::abs(frac - 0.05), 3 * se);
    double chi2 = 0;
    double expect = static_cast<double>(draws) / 30;
    for (const auto &[k, c] : counts) {
        chi2 += (c - expect) * (c - expect) / expect;
    }
    // 29 degrees of freedom, 0.999 quantile.
    EXPECT_LT(chi2, 58.3);
}

TEST(clifford, sampling_is_deterministic_per_seed) {
    Rng a(77);
    Rng b(77);
    for (int k = 0; k < 100; k++) {
        EXPECT_EQ(C2Group::get().sample(a), C2Group::get().sample(b));
    }
}

TEST(clifford, conjugation_preserves_symplectic_products) {
    const auto &g = C2Group::get();
    Rng rng(9);
    for (int trial = 0; trial < 10000; trial++) {
        auto p = testutil::random_pauli(4, rng);
        auto q = testutil::random_pauli(4, rng);
        size_t a = uniform_index(rng, 4);
        size_t b = (a + 1 + uniform_index(rng, 3)) % 4;
        const auto &c = g[g.sample(rng)];
        auto pc = conjugate(p, c, a, b);
        auto qc = conjugate(q, c, a, b);
        ASSERT_EQ(symplectic_product(p, q), symplectic_product(pc, qc));
        ASSERT_TRUE(pc.is_hermitian());
    }
}

TEST(clifford, conjugation_matches_dense_on_registers) {
    const auto &g = C2Group::get();
    Rng rng(10);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 2 + trial % 3;
        auto p = testutil::random_pauli(n, rng);
        size_t a = uniform_index(rng, n);
        size_t b = (a + 1 + uniform_index(rng, n - 1)) % n;
        size_t id = g.sample(rng);
        Eigen::MatrixXcd u = testutil::embed_2q(c2_unitary(id), a, b, n);
        Eigen::MatrixXcd lhs = u.adjoint() * testutil::pauli_matrix(p) * u;
        Eigen::MatrixXcd rhs = testutil::pauli_matrix(conjugate(p, g[id], a, b));
        ASSERT_LT((lhs - rhs).norm(), 1e-9);
        PauliString back = conjugate(p, g[id], a, b);
        g[id].conjugate_in_place(back, a, b, true);
        ASSERT_EQ(back, p);
    }
}
