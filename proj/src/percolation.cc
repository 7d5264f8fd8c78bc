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

#include "magiclab/percolation.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/pending/disjoint_sets.hpp>

#include "magiclab/clifford.h"

namespace magiclab {

namespace {

using DisjointSets = boost::disjoint_sets_with_storage<>;

void join_bonds(const HoneycombLattice &lat, DisjointSets &ds) {
    size_t n = lat.n;
    for (size_t l = 0; l < lat.depth; l++) {
        for (size_t j = 0; j < n; j++) {
            if (lat.vertical[l * n + j]) {
                ds.union_set(lat.vertex(j, l), lat.vertex(j + 1, l));
            }
            if (lat.temporal[l * n + j]) {
                ds.union_set(lat.vertex(j, l), lat.vertex(j, l + 1));
            }
        }
    }
}

void check_probability(double v, const char *what) {
    if (!(v >= 0 && v <= 1)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
    }
}

}  // namespace

size_t HoneycombLattice::num_gates() const {
    return static_cast<size_t>(std::count(gate.begin(), gate.end(), 1));
}

size_t HoneycombLattice::num_open_vertical() const {
    return static_cast<size_t>(std::count(vertical.begin(), vertical.end(), 1));
}

size_t HoneycombLattice::num_open_temporal() const {
    return static_cast<size_t>(std::count(temporal.begin(), temporal.end(), 1));
}

HoneycombLattice map_circuit(const Circuit &circuit) {
    HoneycombLattice lat;
    lat.n = circuit.n;
    lat.depth = circuit.depth;
    size_t cells = lat.n * lat.depth;
    lat.gate.assign(cells, 0);
    lat.vertical.assign(cells, 0);
    lat.temporal.assign(cells, 1);
    const auto &c2 = C2Group::get();
    for (const auto &e : circuit.events) {
        if (e.layer >= lat.depth || e.a >= lat.n) {
            throw std::invalid_argument("map_circuit: event outside the lattice");
        }
        size_t idx = e.layer * lat.n + e.a;
        if (e.kind == EventKind::Clifford2) {
            if (e.b != e.a + 1) {
                throw std::invalid_argument("map_circuit: gates must act on neighbouring qubits (j, j+1)");
            }
            lat.gate[idx] = 1;
            lat.vertical[idx] = c2.separable(e.gate) ? 0 : 1;
        } else if (e.kind == EventKind::Monitor) {
            lat.temporal[idx] = 0;
        }
    }
    return lat;
}

HoneycombLattice random_lattice(size_t n, size_t depth, double p, double sigma, Rng &rng) {
    check_probability(p, "p");
    check_probability(sigma, "sigma");
    HoneycombLattice lat;
    lat.n = n;
    lat.depth = depth;
    size_t cells = n * depth;
    lat.gate.assign(cells, 0);
    lat.vertical.assign(cells, 0);
    lat.temporal.assign(cells, 0);
    for (size_t l = 0; l < depth; l++) {
        for (size_t j = 0; j < n; j++) {
            size_t idx = l * n + j;
            if (j % 2 == l % 2 && j + 1 < n) {
                lat.gate[idx] = 1;
                lat.vertical[idx] = !bernoulli(rng, sigma);
            }
            lat.temporal[idx] = !bernoulli(rng, p);
        }
    }
    return lat;
}

ClusterLabels label_clusters(const HoneycombLattice &lat) {
    size_t nv = lat.num_vertices();
    DisjointSets ds(nv);
    join_bonds(lat, ds);
    ClusterLabels out;
    out.label.assign(nv, UINT32_MAX);
    std::vector<uint32_t> root_to_cluster(nv, UINT32_MAX);
    std::vector<size_t> j_max;
    std::vector<size_t> l_max;
    for (size_t v = 0; v < nv; v++) {
        size_t r = ds.find_set(v);
        if (root_to_cluster[r] == UINT32_MAX) {
            root_to_cluster[r] = static_cast<uint32_t>(out.clusters.size());
            out.clusters.emplace_back();
            out.clusters.back().j_min = SIZE_MAX;
            out.clusters.back().l_min = SIZE_MAX;
            j_max.push_back(0);
            l_max.push_back(0);
        }
        uint32_t c = root_to_cluster[r];
        out.label[v] = c;
        auto &cl = out.clusters[c];
        cl.vertices.push_back(static_cast<uint32_t>(v));
        size_t j = v % lat.n;
        size_t l = v / lat.n;
        cl.touches_final |= l == lat.depth;
        cl.touches_initial |= l == 0;
        size_t l_eff = std::min(l, lat.depth > 0 ? lat.depth - 1 : 0);
        cl.j_min = std::min(cl.j_min, j);
        cl.l_min = std::min(cl.l_min, l_eff);
        j_max[c] = std::max(j_max[c], j);
        l_max[c] = std::max(l_max[c], l_eff);
    }
    for (size_t c = 0; c < out.clusters.size(); c++) {
        auto &cl = out.clusters[c];
        cl.s = j_max[c] - cl.j_min + 1;
        cl.d = l_max[c] - cl.l_min + 1;
        cl.retained = cl.touches_final && retain(cl.s, cl.d, lat.n);
    }
    return out;
}

bool retain(size_t s, size_t d, size_t n) {
    return static_cast<double>(std::min(s, d)) > std::log2(static_cast<double>(std::max<size_t>(n, 1)));
}

std::vector<CircuitCluster> find_ccs(const HoneycombLattice &lattice, size_t n) {
    if (n != lattice.n) {
        throw std::invalid_argument("find_ccs: lattice width mismatch");
    }
    auto labels = label_clusters(lattice);
    std::vector<CircuitCluster> ccs;
    for (auto &cl : labels.clusters) {
        if (cl.touches_final) {
            ccs.push_back(std::move(cl));
        }
    }
    return ccs;
}

bool spans(const HoneycombLattice &lat) {
    DisjointSets ds(lat.num_vertices());
    join_bonds(lat, ds);
    std::vector<uint8_t> bottom(lat.num_vertices(), 0);
    for (size_t j = 0; j < lat.n; j++) {
        bottom[ds.find_set(lat.vertex(j, 0))] = 1;
    }
    for (size_t j = 0; j < lat.n; j++) {
        if (bottom[ds.find_set(lat.vertex(j, lat.depth))]) {
            return true;
        }
    }
    return false;
}

double kappa_honeycomb(double p0, double p1, double p2) {
    check_probability(p0, "p0");
    check_probability(p1, "p1");
    check_probability(p2, "p2");
    return p0 + p1 + p2 + (1 - p0) * (1 - p1) * (1 - p2) - 2;
}

double critical_p_tn(double sigma) {
    check_probability(sigma, "sigma");
    // sigma p^2 - 2 p + (1 - sigma) = 0
    if (sigma == 0) {
        return 0.5;
    }
    double disc = 1 - sigma * (1 - sigma);
    double root = (1 - std::sqrt(disc)) / sigma;
    if (root < 0 || root > 1) {
        throw std::domain_error("critical_p_tn: no root in [0, 1]");
    }
    return root;
}

Circuit stitch(const CircuitCluster &cluster, const Circuit &circuit) {
    HoneycombLattice lat = map_circuit(circuit);
    std::vector<uint8_t> in(lat.num_vertices(), 0);
    for (uint32_t v : cluster.vertices) {
        if (v >= in.size()) {
            throw std::invalid_argument("stitch: cluster does not belong to this circuit");
        }
        in[v] = 1;
    }
    size_t lo = SIZE_MAX;
    size_t hi = 0;
    for (uint32_t v : cluster.vertices) {
        lo = std::min<size_t>(lo, v % lat.n);
        hi = std::max<size_t>(hi, v % lat.n);
    }
    if (cluster.vertices.empty()) {
        throw std::invalid_argument("stitch: empty cluster");
    }
    const auto &c2 = C2Group::get();
    const auto &c1 = C1Group::get();
    Circuit out;
    out.n = hi - lo + 1;
    out.depth = circuit.depth;
    std::vector<Outcome> last(out.n, Outcome::Plus);
    auto local = [&](size_t j) { return static_cast<uint32_t>(j - lo); };
    auto member = [&](size_t j, size_t l) { return in[lat.vertex(j, l)] != 0; };
    for (const auto &e : circuit.events) {
        switch (e.kind) {
            case EventKind::Clifford2: {
                bool ia = member(e.a, e.layer);
                bool ib = member(e.b, e.layer);
                if (!c2.separable(e.gate)) {
                    if (ia != ib) {
                        throw std::invalid_argument("stitch: cluster cuts an entangling gate");
                    }
                    if (ia) {
                        out.events.push_back(Event{EventKind::Clifford2, e.layer, local(e.a), local(e.b), e.gate});
                    }
                    break;
                }
                auto [u0, u1] = c2.local_factors(e.gate);
                if (ia && u0 != c1.identity_id()) {
                    out.events.push_back(Event{EventKind::Clifford1, e.layer, local(e.a), 0, static_cast<uint16_t>(u0)});
                }
                if (ib && u1 != c1.identity_id()) {
                    out.events.push_back(Event{EventKind::Clifford1, e.layer, local(e.b), 0, static_cast<uint16_t>(u1)});
                }
                break;
            }
            case EventKind::Clifford1:
            case EventKind::T:
                if (member(e.a, e.layer)) {
                    Event copy = e;
                    copy.a = local(e.a);
                    out.events.push_back(copy);
                }
                break;
            case EventKind::Monitor: {
                bool here = member(e.a, e.layer);
                bool next = member(e.a, e.layer + 1);
                if (!here && !next) {
                    break;
                }
                uint32_t q = local(e.a);
                if (!here) {
                    // Re-entry: the line resumes from its previous Z eigenstate.
                    if (e.outcome != Outcome::Unset && last[q] != Outcome::Unset && e.outcome != last[q]) {
                        out.events.push_back(Event{EventKind::Clifford1, e.layer, q, 0, static_cast<uint16_t>(c1.x_id())});
                    }
                }
                Event copy = e;
                copy.a = q;
                out.events.push_back(copy);
                last[q] = e.outcome;
                break;
            }
        }
    }
    for (uint32_t j : circuit.outputs) {
        if (j >= lo && j <= hi && member(j, lat.depth)) {
            out.outputs.push_back(local(j));
        }
    }
    return out;
}

BigInt cpx_tn(const CircuitCluster &cluster) {
    BigInt one = 1;
    return one << std::min(cluster.s, cluster.d);
}

double typ_cpx_tn(const std::vector<std::vector<CircuitCluster>> &samples) {
    if (samples.empty()) {
        throw std::invalid_argument("typ_cpx_tn: no samples");
    }
    double sum = 0;
    for (const auto &ccs : samples) {
        for (const auto &cl : ccs) {
            sum += static_cast<double>(std::min(cl.s, cl.d)) * std::log(2.0);
        }
    }
    return sum / static_cast<double>(samples.size());
}

TailFit radius_tail(const std::vector<size_t> &radii) {
    if (radii.empty()) {
        throw std::invalid_argument("radius_tail: no samples");
    }
    size_t rmax = *std::max_element(radii.begin(), radii.end());
    size_t rmin = *std::min_element(radii.begin(), radii.end());
    std::vector<size_t> hist(rmax + 2, 0);
    for (size_t r : radii) {
        hist[r]++;
    }
    std::vector<double> xs;
    std::vector<double> ys;
    size_t survivors = radii.size();
    for (size_t k = 0; k <= rmax; k++) {
        if (k > rmin && survivors >= 10) {
            xs.push_back(static_cast<double>(k));
            ys.push_back(std::log(static_cast<double>(survivors) / static_cast<double>(radii.size())));
        }
        survivors -= hist[k];
    }
    if (xs.size() < 2) {
        throw std::domain_error("radius_tail: insufficient tail data");
    }
    double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
    double sxy = 0;
    double sxx = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    TailFit fit;
    fit.lambda = -sxy / sxx;
    fit.intercept = my + fit.lambda * mx;
    fit.points = xs.size();
    return fit;
}

std::string perc_csv_header() {
    return "realization,p,sigma,n_clusters,max_s,max_d,spanning";
}

std::string perc_csv_row(const PercStatsRow &row) {
    std::ostringstream out;
    out << row.realization << ',' << row.p << ',' << row.sigma << ',' << row.n_clusters << ',' << row.max_s << ','
        << row.max_d << ',' << (row.spanning ? 1 : 0);
    return out.str();
}

}  // namespace magiclab
