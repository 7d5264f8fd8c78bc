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

#ifndef MAGICLAB_PERCOLATION_H
#define MAGICLAB_PERCOLATION_H

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "magiclab/circuit.h"
#include "magiclab/rng.h"

namespace magiclab {

using BigInt = boost::multiprecision::cpp_int;

/// Brickwork circuit as a bond-percolation lattice.
///
/// Vertex (j, l) is qubit j at gate layer l for l < D; (j, D) is the output of qubit j.
/// The vertical bond at (j, l) joins (j, l) and (j+1, l) and exists where the brickwork
/// places a gate; it is open iff that gate is not separable. The temporal bond at (j, l)
/// joins (j, l) and (j, l+1) and is open iff slot l of qubit j holds no monitor.
struct HoneycombLattice {
    size_t n = 0;
    size_t depth = 0;
    std::vector<uint8_t> gate;      // [l * n + j]: a gate acts on (j, j+1) at layer l
    std::vector<uint8_t> vertical;  // [l * n + j]: open vertical bond
    std::vector<uint8_t> temporal;  // [l * n + j]: open temporal bond, l < D

    size_t num_vertices() const {
        return n * (depth + 1);
    }
    size_t vertex(size_t j, size_t l) const {
        return l * n + j;
    }
    size_t num_gates() const;
    size_t num_open_vertical() const;
    size_t num_open_temporal() const;
};

HoneycombLattice map_circuit(const Circuit &circuit);

/// Random ensemble: vertical bonds open with probability 1 - sigma, temporal with 1 - p.
HoneycombLattice random_lattice(size_t n, size_t depth, double p, double sigma, Rng &rng);

struct CircuitCluster {
    std::vector<uint32_t> vertices;  // sorted vertex ids
    size_t s = 0;                    // spatial extent
    size_t d = 0;                    // temporal extent, outputs counted in the last layer
    size_t j_min = 0;
    size_t l_min = 0;
    bool touches_final = false;
    bool touches_initial = false;
    bool retained = false;

    size_t radius() const {
        return s + d;
    }
};

struct ClusterLabels {
    std::vector<uint32_t> label;  // per vertex, index into clusters
    std::vector<CircuitCluster> clusters;
};

/// Connected components of the whole lattice (a partition of all vertices).
ClusterLabels label_clusters(const HoneycombLattice &lattice);

/// Retention threshold: min(s, d) must exceed log2(n).
bool retain(size_t s, size_t d, size_t n);

/// Clusters containing an output vertex, each annotated and marked retained or not.
std::vector<CircuitCluster> find_ccs(const HoneycombLattice &lattice, size_t n);

/// True if one cluster joins the first gate layer to the output boundary.
bool spans(const HoneycombLattice &lattice);

/// kappa(p0, p1, p2) = p0 + p1 + p2 + (1-p0)(1-p1)(1-p2) - 2.
double kappa_honeycomb(double p0, double p1, double p2);

/// Root p in [0, 1] of kappa(1 - sigma, 1 - p, 1 - p) = 0.
double critical_p_tn(double sigma);

/// Standalone circuit on the cluster's qubit interval: events of in-cluster vertices,
/// separable gates reduced to their local factors, re-entrant lines joined through an X
/// when exit and re-entry monitor outcomes differ.
Circuit stitch(const CircuitCluster &cluster, const Circuit &circuit);

BigInt cpx_tn(const CircuitCluster &cluster);

/// Mean over realizations of sum over CCs of min(s, d) * ln 2.
double typ_cpx_tn(const std::vector<std::vector<CircuitCluster>> &samples);

struct TailFit {
    double lambda = 0;
    double intercept = 0;
    size_t points = 0;
};

/// Fits ln P[rad >= k] = c - lambda k over radii whose survival count is at least 10.
TailFit radius_tail(const std::vector<size_t> &radii);

struct PercStatsRow {
    size_t realization = 0;
    double p = 0;
    double sigma = 0;
    size_t n_clusters = 0;
    size_t max_s = 0;
    size_t max_d = 0;
    bool spanning = false;
};

std::string perc_csv_header();
std::string perc_csv_row(const PercStatsRow &row);

}  // namespace magiclab

#endif
