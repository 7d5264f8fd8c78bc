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

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "magiclab/gf2.h"
#include "magiclab/parallel.h"
#include "magiclab/rng.h"

namespace magiclab {

bool CodeState::check_invariants() const {
    if (generators.size() + 1 != n || zbar.num_qubits() != n || xbar.num_qubits() != n) {
        return false;
    }
    if (!zbar.is_hermitian() || !xbar.is_hermitian() || !symplectic_product(zbar, xbar)) {
        return false;
    }
    Gf2Basis span(2 * n);
    for (size_t i = 0; i < generators.size(); i++) {
        const auto &g = generators[i];
        if (!g.is_hermitian() || symplectic_product(g, zbar) || symplectic_product(g, xbar)) {
            return false;
        }
        for (size_t k = i + 1; k < generators.size(); k++) {
            if (symplectic_product(g, generators[k])) {
                return false;
            }
        }
        if (!span.insert(symplectic_row(g))) {
            return false;
        }
    }
    return true;
}

std::optional<CodeState> inject_t(const StabilizerTableau &state, size_t qubit) {
    size_t n = state.num_qubits();
    if (qubit >= n) {
        throw std::out_of_range("inject_t: qubit out of range");
    }
    PauliString z = PauliString::single(n, qubit, 'Z');
    const auto &stab = state.stabilizers();
    size_t first = n;
    for (size_t i = 0; i < n; i++) {
        if (symplectic_product(stab[i], z)) {
            first = i;
            break;
        }
    }
    if (first == n) {
        return std::nullopt;
    }
    CodeState cs;
    cs.n = n;
    cs.zbar = z;
    cs.xbar = stab[first];
    for (size_t i = 0; i < n; i++) {
        if (i == first) {
            continue;
        }
        cs.generators.push_back(symplectic_product(stab[i], z) ? stab[first] * stab[i] : stab[i]);
    }
    return cs;
}

void step_clifford(CodeState &cs, const CliffordTableau &gate, size_t a, size_t b) {
    for (auto &g : cs.generators) {
        gate.conjugate_in_place(g, a, b, true);
    }
    gate.conjugate_in_place(cs.zbar, a, b, true);
    gate.conjugate_in_place(cs.xbar, a, b, true);
}

void step_c2(CodeState &cs, size_t id, size_t a, size_t b) {
    step_clifford(cs, C2Group::get()[id], a, b);
}

SpEvent step_monitor(CodeState &cs, size_t j, bool coin, int depth) {
    if (cs.purified) {
        throw std::logic_error("step_monitor: code already purified");
    }
    PauliString z = PauliString::single(cs.n, j, 'Z');
    size_t piv = cs.generators.size();
    for (size_t i = 0; i < cs.generators.size(); i++) {
        if (symplectic_product(cs.generators[i], z)) {
            piv = i;
            break;
        }
    }
    if (piv < cs.generators.size()) {
        const PauliString g = cs.generators[piv];
        for (size_t i = piv + 1; i < cs.generators.size(); i++) {
            if (symplectic_product(cs.generators[i], z)) {
                cs.generators[i] *= g;
            }
        }
        if (symplectic_product(cs.zbar, z)) {
            cs.zbar *= g;
        }
        if (symplectic_product(cs.xbar, z)) {
            cs.xbar *= g;
        }
        cs.generators[piv] = z;
        if (coin) {
            cs.generators[piv].negate();
        }
        return SpEvent::NspUpdate;
    }
    Gf2Basis span(2 * cs.n);
    for (const auto &g : cs.generators) {
        span.insert(symplectic_row(g));
    }
    if (span.contains(symplectic_row(z))) {
        return SpEvent::Trivial;
    }
    if (span.contains(symplectic_row(z * cs.zbar)) || span.contains(symplectic_row(z * cs.xbar)) ||
        span.contains(symplectic_row(z * cs.zbar * cs.xbar))) {
        cs.purified = true;
        cs.d_star = depth;
        return SpEvent::Sp;
    }
    throw std::logic_error("step_monitor: monitor outside the normalizer; code bookkeeping is corrupt");
}

namespace {

void brickwork_gates(StabilizerTableau &t, size_t layer, Rng &rng) {
    const auto &c2 = C2Group::get();
    for (size_t i = layer % 2; i + 1 < t.num_qubits(); i += 2) {
        t.apply_c2(c2.sample(rng), i, i + 1);
    }
}

void monitors(StabilizerTableau &t, double p, Rng &rng) {
    for (size_t j = 0; j < t.num_qubits(); j++) {
        if (bernoulli(rng, p)) {
            t.measure(PauliString::single(t.num_qubits(), j, 'Z'), rng);
        }
    }
}

TcbShot run_shot(size_t n, double p, size_t d_max, size_t scramble, Rng &rng) {
    TcbShot shot;
    StabilizerTableau t(n);
    size_t layer = 0;
    for (; layer + 1 < scramble; layer++) {
        brickwork_gates(t, layer, rng);
        monitors(t, p, rng);
    }
    brickwork_gates(t, layer, rng);
    std::optional<CodeState> cs;
    for (size_t attempt = 0;; attempt++) {
        cs = inject_t(t, uniform_index(rng, n));
        if (cs) {
            break;
        }
        if (attempt == 0) {
            shot.trivial = true;
        }
        if (attempt > 100 * n) {
            throw std::runtime_error("tcb_experiment: no non-trivial T injection found");
        }
        monitors(t, p, rng);
        brickwork_gates(t, ++layer, rng);
    }
    const auto &c2 = C2Group::get();
    for (size_t d = 1; d <= d_max; d++) {
        if (d > 1) {
            ++layer;
            for (size_t i = layer % 2; i + 1 < n; i += 2) {
                step_c2(*cs, c2.sample(rng), i, i + 1);
            }
        }
        for (size_t j = 0; j < n; j++) {
            if (!bernoulli(rng, p)) {
                continue;
            }
            if (step_monitor(*cs, j, coin(rng), static_cast<int>(d)) == SpEvent::Sp) {
                shot.d_star = static_cast<int>(d);
                return shot;
            }
        }
    }
    return shot;
}

}  // namespace

TcbResult tcb_experiment(size_t n, double p, size_t d_max, size_t shots, uint64_t seed, const TcbOptions &options) {
    if (n < 1 || d_max < 1 || shots < 1 || !(p >= 0 && p <= 1)) {
        throw std::invalid_argument("tcb_experiment: invalid parameters");
    }
    size_t scramble = options.scramble_depth ? options.scramble_depth : n * n;
    TcbResult res;
    res.n = n;
    res.p = p;
    res.d_max = d_max;
    res.shots.resize(shots);
    parallel_for(shots, options.threads, [&](size_t s) {
        Rng rng(derive_seed(seed, {n, static_cast<uint64_t>(std::llround(p * 1e6)), s}));
        res.shots[s] = run_shot(n, p, d_max, scramble, rng);
    });
    std::vector<size_t> hits(d_max + 1, 0);
    for (const auto &s : res.shots) {
        if (s.d_star > 0) {
            hits[s.d_star]++;
        }
        res.trivial_count += s.trivial;
    }
    size_t cum = 0;
    double total = static_cast<double>(shots);
    for (size_t d = 1; d <= d_max; d++) {
        cum += hits[d];
        double f = cum / total;
        res.p_sp.push_back(f);
        res.se.push_back(std::sqrt(f * (1 - f) / total));
    }
    return res;
}

DecayFit fit_sp_decay(const TcbResult &result) {
    double total = static_cast<double>(result.shots.size());
    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::vector<double> xs, ys, ws;
    for (size_t k = 0; k < result.p_sp.size(); k++) {
        double surv = 1 - result.p_sp[k];
        if (surv * total <= 5 || result.p_sp[k] <= 0) {
            continue;
        }
        // Delta-method variance of ln S is (1 - S) / (N S).
        double w = total * surv / std::max(1 - surv, 1 / total);
        double x = static_cast<double>(k + 1);
        double y = std::log(surv);
        xs.push_back(x);
        ys.push_back(y);
        ws.push_back(w);
        sw += w;
        sx += w * x;
        sy += w * y;
        sxx += w * x * x;
        sxy += w * x * y;
    }
    if (xs.size() < 2) {
        throw std::runtime_error("fit_sp_decay: too few depths with surviving shots");
    }
    double det = sw * sxx - sx * sx;
    if (det <= 0) {
        throw std::runtime_error("fit_sp_decay: degenerate depths");
    }
    DecayFit fit;
    double slope = (sw * sxy - sx * sy) / det;
    fit.intercept = (sy - slope * sx) / sw;
    fit.gamma = -slope;
    fit.points = xs.size();
    double ybar = sy / sw;
    double ss_res = 0, ss_tot = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        double r = ys[i] - (fit.intercept + slope * xs[i]);
        ss_res += ws[i] * r * r;
        ss_tot += ws[i] * (ys[i] - ybar) * (ys[i] - ybar);
    }
    fit.r2 = ss_tot > 0 ? 1 - ss_res / ss_tot : 1;
    return fit;
}

std::optional<size_t> saturation_depth(const TcbResult &result, double level) {
    for (size_t k = 0; k < result.p_sp.size(); k++) {
        if (result.p_sp[k] >= level) {
            return k + 1;
        }
    }
    return std::nullopt;
}

LineFit fit_line(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("fit_line: need at least two points");
    }
    double m = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (size_t i = 0; i < x.size(); i++) {
        sx += x[i];
        sy += y[i];
    }
    double xb = sx / m, yb = sy / m;
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < x.size(); i++) {
        sxx += (x[i] - xb) * (x[i] - xb);
        sxy += (x[i] - xb) * (y[i] - yb);
        syy += (y[i] - yb) * (y[i] - yb);
    }
    if (sxx <= 0) {
        throw std::invalid_argument("fit_line: x values are all equal");
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = yb - fit.slope * xb;
    fit.r2 = syy > 0 ? sxy * sxy / (sxx * syy) : 1;
    return fit;
}

double favorable_fraction(size_t gamma) {
    if (gamma < 1) {
        throw std::invalid_argument("favorable_fraction: gamma must be at least 1");
    }
    // 2^g / (4^g - 1) = 1 / (2^g - 2^-g) avoids overflow for large gamma.
    double g = static_cast<double>(gamma);
    return 1.5 / (std::exp2(g) - std::exp2(-g));
}

SpTheory sp_theory(const SpTheoryParams &params) {
    if (params.gamma < 1 || params.w < 1 || params.d < 1 || !(params.p >= 0 && params.p <= 1)) {
        throw std::invalid_argument("sp_theory: invalid parameters");
    }
    SpTheory r;
    r.f = favorable_fraction(params.gamma);
    double pw = params.p * params.w;
    r.step = 1 - std::pow(1 - r.f, pw);
    r.p_sp = 1 - (1 - params.p) * std::pow(1 - r.step, static_cast<double>(params.d - 1));
    if (r.f >= 1 || pw == 0) {
        r.tau_sp = std::numeric_limits<double>::infinity();
    } else {
        r.tau_sp = -1 / (pw * std::log1p(-r.f));
    }
    return r;
}

double single_layer_sp(double p, double q, size_t n) {
    if (!(p >= 0 && p <= 1 && q >= 0 && q <= 1)) {
        throw std::invalid_argument("single_layer_sp: probabilities must lie in [0, 1]");
    }
    return std::pow(p, q * static_cast<double>(n));
}

size_t gamma_entropy_gap(const StabilizerTableau &state) {
    size_t gap = 0;
    for (size_t j = 0; j < state.num_qubits(); j++) {
        long gamma = static_cast<long>(decompose_single_qubit(state, j, 'Z').gamma);
        long s = static_cast<long>(entanglement_entropy(state, j + 1));
        gap = std::max(gap, static_cast<size_t>(std::labs(gamma - 2 * s)));
    }
    return gap;
}

std::string tcb_csv_header() {
    return "n,p,shot,d_star,trivial";
}

std::string tcb_csv_row(const TcbResult &result, size_t shot) {
    char buf[128];
    const auto &s = result.shots.at(shot);
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%zu,%d,%d", result.n, result.p, shot, s.d_star, s.trivial ? 1 : 0);
    return buf;
}

}  // namespace magiclab
