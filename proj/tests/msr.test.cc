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

#include "magiclab/msr.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace magiclab;

namespace {

std::vector<FinalListEntry> members(std::initializer_list<const char *> ops,
                                    MeasurementKind kind = MeasurementKind::Output) {
    std::vector<FinalListEntry> fl;
    for (const char *s : ops) {
        fl.push_back(FinalListEntry{PauliString::from_str(s), kind, +1, -1});
    }
    return fl;
}

std::vector<std::vector<size_t>> supports(const MsrPartition &p) {
    std::vector<std::vector<size_t>> out;
    for (const auto &b : p.blocks) {
        out.push_back(b.support);
    }
    return out;
}

}  // namespace

TEST(msr, overlap_components) {
    auto p = partition(members({"ZZ__", "_ZZ_", "___X"}), 4);
    EXPECT_EQ(supports(p), (std::vector<std::vector<size_t>>{{0, 1, 2}, {3}}));
    EXPECT_EQ(p.K(), 2u);
    EXPECT_EQ(p.K_prime(), 2u);
    EXPECT_EQ(p.max_block(), 3u);
}

TEST(msr, single_qubit_members_are_singletons) {
    auto p = partition(members({"Z___", "_X__", "__Y_", "___Z"}), 4);
    EXPECT_EQ(p.sizes(), (std::vector<size_t>{1, 1, 1, 1}));
    auto q = partition(members({"XXXXX"}), 5);
    EXPECT_EQ(q.sizes(), (std::vector<size_t>{5}));
}

TEST(msr, quotienting_splits_off_single_qubit_members) {
    auto p = partition(members({"Z___", "ZZZ_", "__ZZ"}), 4);
    EXPECT_EQ(supports(p), (std::vector<std::vector<size_t>>{{0}, {1, 2, 3}}));
    auto cascade = partition(members({"ZZ_", "Z__", "_ZZ"}), 3);
    EXPECT_EQ(cascade.sizes(), (std::vector<size_t>{1, 1, 1}));
}

TEST(msr, unmeasured_ancillas_form_no_block) {
    auto p = partition(members({"_ZZ__"}), 5);
    EXPECT_EQ(p.sizes(), (std::vector<size_t>{2}));
    EXPECT_TRUE(partition({}, 0).blocks.empty());
}

TEST(msr, output_flags_and_cpx) {
    auto fl = members({"ZZ____", "__X___", "___ZZZ"}, MeasurementKind::Gadget);
    auto p = partition(fl, 6);
    EXPECT_EQ(p.K_prime(), 0u);
    EXPECT_EQ(cpx_pbc(p), BigInt(0));
    fl[2].kind = MeasurementKind::Output;
    p = partition(fl, 6);
    EXPECT_EQ(p.K_prime(), 1u);
    EXPECT_EQ(cpx_pbc(p), BigInt(8));

    auto ones = partition(members({"Z__", "_Z_", "__Z"}), 3);
    EXPECT_EQ(cpx_pbc(ones), BigInt(6));

    std::string wide(40, 'X');
    auto big = partition(members({wide.c_str()}), 40);
    EXPECT_EQ(cpx_pbc(big), BigInt(1) << 40);
    EXPECT_DOUBLE_EQ(order_param_term(cpx_pbc(big), 40), 1.0);
}

TEST(msr, cpx_is_invariant_under_relabelling) {
    Rng rng(17);
    for (int rep = 0; rep < 20; rep++) {
        ModelParams mp;
        mp.n = 8;
        mp.depth = 8;
        mp.q = 0.15;
        mp.p = 0.15;
        Circuit c = generate(mp, rng);
        PbcResult r = compile(c, rng);
        auto base = partition(r.final_list, r.t);
        std::vector<size_t> perm(r.t);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto moved = r.final_list;
        for (auto &m : moved) {
            PauliString op(r.t);
            for (size_t q = 0; q < r.t; q++) {
                op.set_x(perm[q], m.op.x(q));
                op.set_z(perm[q], m.op.z(q));
            }
            m.op = op;
        }
        auto other = partition(moved, r.t);
        EXPECT_EQ(cpx_pbc(base), cpx_pbc(other));
        auto a = base.sizes();
        auto b = other.sizes();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b);
    }
}

TEST(msr, partition_is_disjoint_and_bounded) {
    Rng rng(23);
    for (int rep = 0; rep < 20; rep++) {
        ModelParams mp;
        mp.n = 10;
        mp.depth = 10;
        mp.q = 0.1;
        mp.p = 0.1 + 0.02 * rep;
        Circuit c = generate(mp, rng);
        PbcResult r = compile(c, rng);
        auto p = partition(r.final_list, r.t);
        std::vector<int> owner(r.t, -1);
        size_t total = 0;
        size_t member_count = 0;
        for (size_t i = 0; i < p.blocks.size(); i++) {
            for (size_t q : p.blocks[i].support) {
                EXPECT_EQ(owner[q], -1);
                owner[q] = static_cast<int>(i);
            }
            total += p.blocks[i].size();
            member_count += p.blocks[i].members.size();
        }
        EXPECT_LE(total, r.t);
        EXPECT_GE(member_count, r.final_list.size());
        EXPECT_LE(p.K_prime(), p.K());
    }
}

TEST(msr, log2_of_big_integers) {
    EXPECT_DOUBLE_EQ(log2_big(BigInt(0)), 0.0);
    EXPECT_DOUBLE_EQ(log2_big(BigInt(1)), 0.0);
    EXPECT_DOUBLE_EQ(log2_big(BigInt(1) << 300), 300.0);
    EXPECT_NEAR(log2_big((BigInt(1) << 200) * 3), 200 + std::log2(3.0), 1e-12);
    EXPECT_NEAR(log2_big(BigInt(6)), std::log2(6.0), 1e-15);
}

TEST(msr, order_parameter_limits) {
    std::vector<OrderSample> hard(5);
    for (auto &s : hard) {
        s.t = 30;
        s.cpx = BigInt(1) << 30;
    }
    auto e = order_parameter(hard);
    EXPECT_DOUBLE_EQ(e.mean, 1.0);
    EXPECT_DOUBLE_EQ(e.se, 0.0);

    double prev = 1.0;
    for (size_t t : {4, 16, 64, 256}) {
        std::vector<OrderSample> easy(3, OrderSample{BigInt(2 * t), t});
        double m = order_parameter(easy).mean;
        EXPECT_NEAR(m, std::log2(2.0 * t) / t, 1e-12);
        EXPECT_LT(m, prev);
        prev = m;
    }

    std::vector<OrderSample> mixed{{BigInt(0), 0}, {BigInt(4), 2}};
    e = order_parameter(mixed);
    EXPECT_DOUBLE_EQ(e.mean, 0.5);
    EXPECT_DOUBLE_EQ(e.se, 0.5);
    EXPECT_THROW(order_parameter({}), std::invalid_argument);
}

TEST(msr, block_histogram_averages_normalized_counts) {
    auto h = block_histogram({{1, 1, 2, 4}, {}, {2}});
    ASSERT_EQ(h.size(), 5u);
    EXPECT_DOUBLE_EQ(h[1], 0.25);
    EXPECT_DOUBLE_EQ(h[2], 0.625);
    EXPECT_DOUBLE_EQ(h[4], 0.125);
    EXPECT_DOUBLE_EQ(std::accumulate(h.begin(), h.end(), 0.0), 1.0);
    EXPECT_EQ(histogram_peak(h), 2u);
}

TEST(msr, blocks_depend_only_on_the_generated_group) {
    auto fl = members({"ZZZ_", "ZZ__"}, MeasurementKind::Monitor);
    auto p = partition(fl, 4);
    EXPECT_EQ(supports(p), (std::vector<std::vector<size_t>>{{0, 1}, {2}}));
    fl[0].kind = MeasurementKind::Output;
    p = partition(fl, 4);
    EXPECT_FALSE(p.blocks[0].has_output);
    EXPECT_TRUE(p.blocks[1].has_output);
    EXPECT_EQ(cpx_pbc(p), BigInt(2));

    Rng rng(31);
    for (int rep = 0; rep < 20; rep++) {
        ModelParams mp;
        mp.n = 10;
        mp.depth = 10;
        mp.q = 0.1;
        mp.p = 0.2;
        Circuit c = generate(mp, rng);
        PbcResult r = compile(c, rng);
        if (r.final_list.size() < 2) {
            continue;
        }
        auto mixed = r.final_list;
        for (size_t i = 1; i < mixed.size(); i++) {
            if (mixed[i].kind == mixed[i - 1].kind && bernoulli(rng, 0.5)) {
                mixed[i].op *= mixed[i - 1].op;
            }
        }
        auto a = partition(r.final_list, r.t);
        auto b = partition(mixed, r.t);
        EXPECT_EQ(supports(a), supports(b));
        EXPECT_EQ(cpx_pbc(a), cpx_pbc(b));
    }
}

TEST(msr, singleton_mode_splits_members_only) {
    auto s = QuotientMode::Singletons;
    auto p = partition(members({"ZZ__", "_ZZ_", "___X"}), 4, s);
    EXPECT_EQ(supports(p), (std::vector<std::vector<size_t>>{{0, 1, 2}, {3}}));
    p = partition(members({"Z___", "ZZZ_", "__ZZ"}), 4, s);
    EXPECT_EQ(supports(p), (std::vector<std::vector<size_t>>{{0}, {1, 2, 3}}));
    p = partition(members({"ZZ_", "Z__", "_ZZ"}), 3, s);
    EXPECT_EQ(p.sizes(), (std::vector<size_t>{1, 1, 1}));
    // Z on qubit 2 is in the group but is no member, so the overlap survives.
    p = partition(members({"ZZZ_", "ZZ__"}), 4, s);
    EXPECT_EQ(supports(p), (std::vector<std::vector<size_t>>{{0, 1, 2}}));
    p = partition(members({"ZZZ_", "ZZ__"}), 4, QuotientMode::Group);
    EXPECT_EQ(supports(p), (std::vector<std::vector<size_t>>{{0, 1}, {2}}));
}

TEST(msr, group_mode_refines_singleton_mode) {
    Rng rng(29);
    for (int rep = 0; rep < 30; rep++) {
        ModelParams mp;
        mp.n = 10;
        mp.depth = 10;
        mp.q = 0.1;
        mp.p = 0.05 + 0.02 * rep;
        Circuit c = generate(mp, rng);
        PbcResult r = compile(c, rng);
        auto fine = partition(r.final_list, r.t, QuotientMode::Group);
        auto coarse = partition(r.final_list, r.t, QuotientMode::Singletons);
        std::vector<int> owner(r.t, -1);
        for (size_t i = 0; i < coarse.blocks.size(); i++) {
            for (size_t q : coarse.blocks[i].support) {
                ASSERT_EQ(owner[q], -1);
                owner[q] = static_cast<int>(i);
            }
        }
        for (const auto &b : fine.blocks) {
            for (size_t q : b.support) {
                ASSERT_EQ(owner[q], owner[b.support[0]]);
                ASSERT_NE(owner[q], -1);
            }
        }
        EXPECT_GE(fine.K(), coarse.K());
        EXPECT_LE(fine.max_block(), coarse.max_block());
    }
}
