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

#include "magiclab/sp.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "magiclab/dense.h"

using namespace magiclab;

namespace {

// Clifford brickwork with monitors, mirrored on a dense state when one is given.
void evolve(StabilizerTableau &t, DenseState *d, size_t layers, double p, Rng &rng) {
    const auto &g = C2Group::get();
    size_t n = t.num_qubits();
    for (size_t l = 0; l < layers; l++) {
        for (size_t i = l % 2; i + 1 < n; i += 2) {
            size_t id = g.sample(rng);
            t.apply_c2(id, i, i + 1);
            if (d) {
                d->apply_2q(c2_unitary(id), i, i + 1);
            }
        }
        for (size_t j = 0; j < n; j++) {
            if (bernoulli(rng, p)) {
                auto r = t.measure(PauliString::single(n, j, 'Z'), rng);
                if (d) {
                    d->project_z(j, r.outcome);
                    d->normalize();
                }
            }
        }
    }
}

double expectation_re(const DenseState &d, const PauliString &p) {
    return d.expectation(p).real();
}

}  // namespace

TEST(sp, t_on_zero_is_trivial) {
    StabilizerTableau t(1);
    EXPECT_FALSE(inject_t(t, 0).has_value());
}

TEST(sp, t_on_plus_encodes_one_logical) {
    StabilizerTableau t(1);
    t.apply(CliffordTableau::hadamard(), 0);
    auto cs = inject_t(t, 0);
    ASSERT_TRUE(cs.has_value());
    EXPECT_TRUE(cs->generators.empty());
    EXPECT_EQ(cs->zbar.str(), "+Z");
    EXPECT_EQ(cs->xbar.str(), "+X");
    EXPECT_TRUE(cs->check_invariants());
}

TEST(sp, trivial_injection_matches_dense_oracle) {
    Rng rng(21);
    size_t trivial = 0;
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 2 + trial % 7;
        StabilizerTableau t(n);
        DenseState d(n);
        evolve(t, &d, 1 + trial % 5, 0.3, rng);
        size_t c = uniform_index(rng, n);
        auto cs = inject_t(t, c);
        d.apply_t(c);
        ASSERT_EQ(!cs.has_value(), is_stabilizer(d)) << "trial " << trial;
        trivial += !cs.has_value();
        if (cs) {
            ASSERT_TRUE(cs->check_invariants());
            for (const auto &g : cs->generators) {
                ASSERT_NEAR(expectation_re(d, g), 1.0, 1e-9);
            }
        }
    }
    EXPECT_GT(trivial, 20u);
    EXPECT_LT(trivial, 280u);
}

TEST(sp, monitoring_the_t_qubit_purifies) {
    Rng rng(22);
    for (int trial = 0; trial < 50; trial++) {
        StabilizerTableau t(6);
        evolve(t, nullptr, 6, 0.0, rng);
        size_t c = uniform_index(rng, 6);
        auto cs = inject_t(t, c);
        if (!cs) {
            continue;
        }
        EXPECT_EQ(step_monitor(*cs, c, coin(rng), 1), SpEvent::Sp);
        EXPECT_TRUE(cs->purified);
        EXPECT_EQ(cs->d_star, 1);
        EXPECT_THROW(step_monitor(*cs, c, false, 2), std::logic_error);
    }
}

TEST(sp, identity_gate_leaves_code_unchanged) {
    Rng rng(23);
    StabilizerTableau t(4);
    evolve(t, nullptr, 4, 0.0, rng);
    auto cs = inject_t(t, 1);
    ASSERT_TRUE(cs.has_value());
    CodeState before = *cs;
    step_clifford(*cs, CliffordTableau::identity(2), 0, 1);
    EXPECT_EQ(cs->generators, before.generators);
    EXPECT_EQ(cs->zbar, before.zbar);
    EXPECT_EQ(cs->xbar, before.xbar);
}

TEST(sp, monitors_outside_the_lightcone_never_purify) {
    Rng rng(24);
    const auto &g = C2Group::get();
    for (int trial = 0; trial < 100; trial++) {
        StabilizerTableau t(6);
        t.apply(CliffordTableau::hadamard(), 0);
        for (int l = 0; l < 6; l++) {
            t.apply_c2(g.sample(rng), 0, 1);
            t.apply_c2(g.sample(rng), 1, 2);
            t.apply_c2(g.sample(rng), 3, 4);
            t.apply_c2(g.sample(rng), 4, 5);
        }
        auto cs = inject_t(t, 0);
        if (!cs) {
            continue;
        }
        for (size_t j = 3; j < 6; j++) {
            ASSERT_NE(step_monitor(*cs, j, coin(rng), 1), SpEvent::Sp);
        }
    }
}

TEST(sp, code_tracking_matches_dense_state) {
    Rng rng(25);
    const auto &c2 = C2Group::get();
    size_t sp_events = 0, nsp_events = 0, trivial_events = 0;
    for (int trial = 0; trial < 150; trial++) {
        size_t n = 3 + trial % 6;
        StabilizerTableau t(n);
        DenseState d(n);
        evolve(t, &d, n, 0.2, rng);
        size_t c = uniform_index(rng, n);
        auto cs = inject_t(t, c);
        if (!cs) {
            continue;
        }
        d.apply_t(c);
        for (int depth = 1; depth <= 12 && !cs->purified; depth++) {
            if (depth > 1) {
                for (size_t i = depth % 2; i + 1 < n; i += 2) {
                    size_t id = c2.sample(rng);
                    step_c2(*cs, id, i, i + 1);
                    d.apply_2q(c2_unitary(id), i, i + 1);
                }
            }
            for (size_t j = 0; j < n && !cs->purified; j++) {
                if (!bernoulli(rng, 0.3)) {
                    continue;
                }
                bool flip = coin(rng);
                SpEvent ev = step_monitor(*cs, j, flip, depth);
                int outcome = flip ? -1 : +1;
                if (ev != SpEvent::NspUpdate) {
                    outcome = d.prob_z(j, +1) > 1e-9 ? +1 : -1;
                }
                if (ev == SpEvent::NspUpdate) {
                    ASSERT_NEAR(d.prob_z(j, outcome), 0.5, 1e-9);
                }
                d.project_z(j, outcome);
                d.normalize();
                ASSERT_EQ(ev == SpEvent::Sp, is_stabilizer(d)) << "trial " << trial;
                sp_events += ev == SpEvent::Sp;
                nsp_events += ev == SpEvent::NspUpdate;
                trivial_events += ev == SpEvent::Trivial;
                if (!cs->purified) {
                    ASSERT_TRUE(cs->check_invariants());
                    for (const auto &g : cs->generators) {
                        ASSERT_NEAR(expectation_re(d, g), 1.0, 1e-9);
                    }
                }
            }
        }
    }
    EXPECT_GT(sp_events, 30u);
    EXPECT_GT(nsp_events, 30u);
    EXPECT_GT(trivial_events, 5u);
}

TEST(sp, unmonitored_tcb_never_purifies) {
    auto res = tcb_experiment(6, 0.0, 20, 50, 1);
    for (double v : res.p_sp) {
        EXPECT_EQ(v, 0.0);
    }
    EXPECT_THROW(fit_sp_decay(res), std::runtime_error);
}

TEST(sp, tcb_curve_is_monotone_and_starts_near_p) {
    auto res = tcb_experiment(8, 0.3, 40, 2000, 2);
    EXPECT_GE(res.p_sp[0], 0.3 - 3 * res.se[0]);
    for (size_t k = 1; k < res.p_sp.size(); k++) {
        EXPECT_GE(res.p_sp[k], res.p_sp[k - 1]);
    }
    auto more = tcb_experiment(8, 0.5, 40, 2000, 3);
    for (size_t k = 0; k < res.p_sp.size(); k++) {
        EXPECT_GE(more.p_sp[k] + 3 * more.se[k] + 3 * res.se[k], res.p_sp[k]);
    }
}

TEST(sp, tcb_is_thread_count_independent) {
    auto a = tcb_experiment(6, 0.2, 30, 64, 7);
    TcbOptions opt;
    opt.threads = 4;
    auto b = tcb_experiment(6, 0.2, 30, 64, 7, opt);
    for (size_t s = 0; s < 64; s++) {
        EXPECT_EQ(a.shots[s].d_star, b.shots[s].d_star);
        EXPECT_EQ(a.shots[s].trivial, b.shots[s].trivial);
    }
}

TEST(sp, decay_fit_recovers_rate) {
    TcbResult r;
    r.shots.resize(100000);
    for (size_t d = 1; d <= 40; d++) {
        r.p_sp.push_back(1 - 0.8 * std::exp(-0.15 * (d - 1.0)));
    }
    auto fit = fit_sp_decay(r);
    EXPECT_NEAR(fit.gamma, 0.15, 1e-9);
    EXPECT_NEAR(fit.r2, 1.0, 1e-12);
    EXPECT_EQ(saturation_depth(r, 0.99).value(), 31u);
    EXPECT_FALSE(saturation_depth(r, 0.9999).has_value());
}

TEST(sp, line_fit) {
    auto f = fit_line({8, 10, 12, 14}, {-1, -2, -3, -4});
    EXPECT_NEAR(f.slope, -0.5, 1e-12);
    EXPECT_NEAR(f.intercept, 3, 1e-12);
    EXPECT_NEAR(f.r2, 1, 1e-12);
}

TEST(sp, theory_closed_forms) {
    EXPECT_DOUBLE_EQ(favorable_fraction(1), 1.0);
    EXPECT_DOUBLE_EQ(favorable_fraction(2), 0.4);
    EXPECT_NEAR(favorable_fraction(3), 1.5 * 8 / 63, 1e-15);
    auto r = sp_theory({2, 0.5, 2, 1});
    EXPECT_DOUBLE_EQ(r.p_sp, 0.5);
    for (size_t gamma : {1, 3, 10}) {
        for (size_t d : {1, 5, 50}) {
            EXPECT_EQ(sp_theory({gamma, 0.0, 3, d}).p_sp, 0.0);
        }
    }
    EXPECT_TRUE(std::isinf(sp_theory({1, 0.3, 2, 4}).tau_sp));
    auto v = sp_theory({4, 0.2, 5, 10});
    EXPECT_NEAR(v.step, 1 - std::pow(1 - v.f, 1.0), 1e-15);
    EXPECT_NEAR(v.tau_sp, -1 / std::log(1 - v.f), 1e-12);
    EXPECT_NEAR(v.p_sp, 1 - 0.8 * std::pow(1 - v.step, 9), 1e-15);
    EXPECT_THROW(sp_theory({0, 0.2, 1, 1}), std::invalid_argument);
}

TEST(sp, single_layer_probability) {
    EXPECT_EQ(single_layer_sp(0.3, 0.0, 40), 1.0);
    EXPECT_EQ(single_layer_sp(1.0, 0.4, 40), 1.0);
    EXPECT_NEAR(single_layer_sp(0.5, 0.25, 40), 9.765625e-4, 1e-15);
}

TEST(sp, gamma_tracks_twice_the_entropy) {
    Rng rng(26);
    for (int trial = 0; trial < 100; trial++) {
        StabilizerTableau t(8);
        evolve(t, nullptr, 1 + trial % 16, 0.1 * (trial % 3), rng);
        ASSERT_LE(gamma_entropy_gap(t), 2u);
    }
}

TEST(sp, csv_row_format) {
    TcbResult r;
    r.n = 8;
    r.p = 0.25;
    r.shots = {{3, false}, {-1, true}};
    EXPECT_EQ(tcb_csv_header(), "n,p,shot,d_star,trivial");
    EXPECT_EQ(tcb_csv_row(r, 0), "8,0.25,0,3,0");
    EXPECT_EQ(tcb_csv_row(r, 1), "8,0.25,1,-1,1");
}
