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

#include "magiclab/circuit.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "magiclab/clifford.h"

namespace magiclab {

size_t Circuit::t_count() const {
    return std::count_if(events.begin(), events.end(), [](const Event &e) { return e.kind == EventKind::T; });
}

size_t Circuit::monitor_count() const {
    return std::count_if(events.begin(), events.end(), [](const Event &e) { return e.kind == EventKind::Monitor; });
}

std::vector<size_t> Circuit::monitor_indices() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < events.size(); i++) {
        if (events[i].kind == EventKind::Monitor) {
            out.push_back(i);
        }
    }
    return out;
}

void Circuit::set_monitor_outcomes(const std::vector<Outcome> &outcomes) {
    auto idx = monitor_indices();
    if (idx.size() != outcomes.size()) {
        throw std::invalid_argument("monitor outcome count mismatch");
    }
    for (size_t k = 0; k < idx.size(); k++) {
        events[idx[k]].outcome = outcomes[k];
    }
}

std::vector<Outcome> Circuit::monitor_outcomes() const {
    std::vector<Outcome> out;
    for (const auto &e : events) {
        if (e.kind == EventKind::Monitor) {
            out.push_back(e.outcome);
        }
    }
    return out;
}

std::string Circuit::to_text() const {
    std::ostringstream out;
    out << "circuit " << n << " " << depth << "\n";
    out << "outputs";
    for (auto q : outputs) {
        out << " " << q;
    }
    out << "\n";
    for (const auto &e : events) {
        out << e.layer << " ";
        switch (e.kind) {
            case EventKind::Clifford2:
                out << "C2 " << e.a << " " << e.b << " " << e.gate;
                break;
            case EventKind::Clifford1:
                out << "C1 " << e.a << " " << e.gate;
                break;
            case EventKind::T:
                out << "T " << e.a;
                break;
            case EventKind::Monitor:
                out << "M " << e.a << " " << (e.outcome == Outcome::Plus ? "+" : e.outcome == Outcome::Minus ? "-" : "?");
                break;
        }
        out << "\n";
    }
    return out.str();
}

Circuit Circuit::from_text(std::string_view text) {
    Circuit c;
    std::istringstream in{std::string(text)};
    std::string line;
    bool have_header = false;
    auto fail = [&](const std::string &why) { throw std::invalid_argument("circuit parse error: " + why + " in '" + line + "'"); };
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream ls(line);
        std::string first;
        ls >> first;
        if (first == "circuit") {
            if (!(ls >> c.n >> c.depth)) {
                fail("bad header");
            }
            have_header = true;
            continue;
        }
        if (!have_header) {
            fail("missing header");
        }
        if (first == "outputs") {
            uint32_t q;
            while (ls >> q) {
                if (q >= c.n) {
                    fail("output qubit out of range");
                }
                c.outputs.push_back(q);
            }
            continue;
        }
        Event e{};
        try {
            e.layer = static_cast<uint32_t>(std::stoul(first));
        } catch (const std::exception &) {
            fail("bad layer");
        }
        std::string kind;
        ls >> kind;
        if (kind == "C2") {
            e.kind = EventKind::Clifford2;
            if (!(ls >> e.a >> e.b >> e.gate) || e.gate >= C2Group::get().size()) {
                fail("bad C2 event");
            }
        } else if (kind == "C1") {
            e.kind = EventKind::Clifford1;
            if (!(ls >> e.a >> e.gate) || e.gate >= C1Group::get().size()) {
                fail("bad C1 event");
            }
        } else if (kind == "T") {
            e.kind = EventKind::T;
            if (!(ls >> e.a)) {
                fail("bad T event");
            }
        } else if (kind == "M") {
            e.kind = EventKind::Monitor;
            std::string o;
            if (!(ls >> e.a >> o)) {
                fail("bad monitor event");
            }
            if (o == "+") {
                e.outcome = Outcome::Plus;
            } else if (o == "-") {
                e.outcome = Outcome::Minus;
            } else if (o == "?") {
                e.outcome = Outcome::Unset;
            } else {
                fail("bad monitor outcome");
            }
        } else {
            fail("unknown event kind");
        }
        if (e.a >= c.n || (e.kind == EventKind::Clifford2 && (e.b >= c.n || e.b == e.a))) {
            fail("qubit out of range");
        }
        c.events.push_back(e);
    }
    if (!have_header) {
        throw std::invalid_argument("circuit parse error: missing header");
    }
    return c;
}

double ModelParams::p_minus() const {
    return model == MonitorModel::TCorrelated ? p - alpha * q : p;
}

double ModelParams::p_plus() const {
    return model == MonitorModel::TCorrelated ? p_minus() + alpha : p;
}

double ModelParams::alpha_max() const {
    double a = (1 - p) / (1 - q);
    if (q > 0) {
        a = std::min(a, p / q);
    }
    return a;
}

void ModelParams::validate() const {
    constexpr double eps = 1e-12;
    if (n < 1 || depth < 1) {
        throw std::invalid_argument("n and depth must be positive");
    }
    if (!(p >= 0 && p <= 1 && q >= 0 && q <= 1)) {
        throw std::invalid_argument("p and q must lie in [0, 1]");
    }
    if (model == MonitorModel::TCorrelated) {
        if (alpha < 0 || q >= 1) {
            throw std::invalid_argument("t_correlated model needs alpha >= 0 and q < 1");
        }
        if (alpha > alpha_max() + eps || p_minus() < -eps || p_plus() > 1 + eps) {
            throw std::invalid_argument("alpha exceeds min((1-p)/(1-q), p/q)");
        }
    }
}

Circuit generate(const ModelParams &params, Rng &rng) {
    params.validate();
    const C2Group &c2 = C2Group::get();
    Circuit c;
    c.n = params.n;
    c.depth = params.depth;
    for (uint32_t q = 0; q < params.n; q++) {
        c.outputs.push_back(q);
    }
    double pm = std::clamp(params.p_minus(), 0.0, 1.0);
    double pp = std::clamp(params.p_plus(), 0.0, 1.0);
    for (uint32_t layer = 0; layer < params.depth; layer++) {
        for (uint32_t i = layer % 2; i + 1 < params.n; i += 2) {
            Event e{EventKind::Clifford2, layer, i, i + 1};
            e.gate = static_cast<uint16_t>(c2.sample(rng));
            c.events.push_back(e);
        }
        for (uint32_t j = 0; j < params.n; j++) {
            bool t = bernoulli(rng, params.q);
            if (t) {
                c.events.push_back(Event{EventKind::T, layer, j});
            }
            if (bernoulli(rng, t ? pp : pm)) {
                c.events.push_back(Event{EventKind::Monitor, layer, j});
            }
        }
    }
    return c;
}

double expected_t_count(const ModelParams &params) {
    return params.q * static_cast<double>(params.depth) * static_cast<double>(params.n);
}

}  // namespace magiclab
