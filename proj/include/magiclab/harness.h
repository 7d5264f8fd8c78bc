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

#ifndef MAGICLAB_HARNESS_H
#define MAGICLAB_HARNESS_H

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "magiclab/percolation.h"
#include "magiclab/sp.h"
#include "magiclab/sweep.h"

namespace magiclab {

extern const char *const kCodeVersion;

/// Bad configuration or arguments; maps to exit code 2.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class ExperimentKind { SweepPFixedQD, SweepPFixedQ, SweepAlpha, SpProb, PercStats, Validate };

std::string to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string &name);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::SweepPFixedQD;
    std::vector<size_t> n{16, 32, 64};
    std::vector<double> p{0.1};
    std::vector<double> q{0.1};
    std::vector<double> alpha{0.0};
    double qD = 1.0;           // sweep_p_fixed_qD: q = qD / D
    double depth_factor = 1.0;  // D = round(depth_factor * n)
    size_t realizations = 300;
    uint64_t seed = 1;
    size_t threads = 1;
    std::string output;
    QuotientMode quotient = QuotientMode::Group;
    bool cluster_filter = true;
    bool entanglement = true;
    // sp_prob
    size_t d_max = 200;
    size_t shots = 1000;
    // perc_stats
    double sigma = 0.05;
    // validate
    size_t max_n = 6;
    size_t max_depth = 6;
    size_t instances = 200;

    /// Throws UsageError on empty grids, out-of-range values or zero counts.
    void validate() const;
    size_t depth_for(size_t n) const;
};

/// Flat JSON object; unknown keys are rejected.
ExperimentConfig config_from_json(const nlohmann::json &j);
nlohmann::json config_to_json(const ExperimentConfig &config);
/// Throws UsageError if the file is missing or malformed.
ExperimentConfig load_config(const std::string &path);

struct GridPoint {
    size_t n = 0;
    size_t depth = 0;
    double p = 0;
    double q = 0;
    double alpha = 0;
    MonitorModel model = MonitorModel::Uncorrelated;
};

/// Points in n-major, then p, q, alpha order.
std::vector<GridPoint> sweep_grid(const ExperimentConfig &config);

struct SweepTable {
    std::vector<GridPoint> points;
    std::vector<SweepRow> rows;  // sorted by (point, realization)
    std::vector<size_t> point_of_row;
    size_t failures = 0;
};

/// Deterministic for a given config whatever the thread count. Per-task exceptions are
/// logged to stderr and the row is dropped.
SweepTable run_sweep(const ExperimentConfig &config);

struct PointSummary {
    GridPoint point;
    Estimate order;
    std::vector<double> histogram;
    double mean_t = 0;
    double mean_ee = 0;
};

std::vector<PointSummary> summarize(const SweepTable &table);

// ---- finite-size scaling ----

struct FssPoint {
    size_t n = 0;
    double x = 0;
    double y = 0;
    double se = 0;
};

struct FssOptions {
    size_t bootstrap = 100;
    uint64_t seed = 1;
    double nu_min = 0.2;
    double nu_max = 5.0;
};

struct FssResult {
    std::string control = "p";
    double x_c = 0;
    double nu = 0;
    double quality = 0;
    double x_c_err = 0;
    double nu_err = 0;
    size_t points = 0;
    size_t sizes = 0;
};

/// Houdayer-Hartmann quality of the collapse y = F((x - x_c) n^{1/nu}), with each point
/// compared against a weighted line through its nearest neighbours at every other size.
/// Returns +inf when fewer than half of the points have neighbours.
double collapse_quality(const std::vector<FssPoint> &points, double x_c, double nu);

/// Nelder-Mead minimization of collapse_quality from a grid of starts, with parametric
/// bootstrap errors. Needs at least three sizes; throws std::runtime_error if no start
/// converges.
FssResult fss_collapse(const std::vector<FssPoint> &points, const std::string &control, const FssOptions &options = {});

nlohmann::json fss_to_json(const FssResult &r);

/// Averages sweep rows into (n, control, y, se) points; control is "p" or "alpha".
std::vector<FssPoint> fss_points(const std::vector<PointSummary> &summary, const std::string &control);

/// Reads a sweep CSV (exact header) back into rows.
std::vector<SweepRow> read_sweep_csv(const std::string &path);
std::vector<FssPoint> fss_points_from_rows(const std::vector<SweepRow> &rows, const std::string &control);

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0;
    size_t iterations = 0;
    bool converged = false;
};

template <class F>
NelderMeadResult nelder_mead(F &&f, std::vector<double> start, std::vector<double> step, size_t max_iter = 4000,
                             double tol = 1e-10);

// ---- percolation and validation experiments ----

/// Spanning fraction of the sigma-lattice for each (L, p), L x L lattices.
struct SpanningCurve {
    size_t L = 0;
    std::vector<double> p;
    std::vector<double> fraction;
};

std::vector<SpanningCurve> spanning_curves(const std::vector<size_t> &sizes, const std::vector<double> &p, double sigma,
                                           size_t realizations, uint64_t seed, size_t threads = 1);

/// Crossing of two sampled curves on a shared grid by linear interpolation of their difference
/// at its steepest sign change; NaN if they do not cross.
double curve_crossing(const std::vector<double> &x, const std::vector<double> &a, const std::vector<double> &b);

std::vector<PercStatsRow> perc_stats(const ExperimentConfig &config);

struct ValidationReport {
    size_t instances = 0;
    size_t tv_failures = 0;
    size_t theorem_failures = 0;
    double max_tv = 0;
    size_t stabilizer_instances = 0;
};

/// Oracle suites on n <= max_n, D <= max_depth, q in {0, 0.1, 0.3}, p in {0, 0.2, 0.5},
/// skipping instances with more than the oracle's T budget.
ValidationReport run_validation(size_t max_n, size_t max_depth, size_t instances, uint64_t seed);

nlohmann::json run_manifest(const ExperimentConfig &config, double wall_seconds);

// ---- template implementation ----

template <class F>
NelderMeadResult nelder_mead(F &&f, std::vector<double> start, std::vector<double> step, size_t max_iter, double tol) {
    size_t dim = start.size();
    std::vector<std::vector<double>> simplex(dim + 1, start);
    std::vector<double> val(dim + 1);
    for (size_t i = 0; i < dim; i++) {
        simplex[i + 1][i] += step[i];
    }
    for (size_t i = 0; i <= dim; i++) {
        val[i] = f(simplex[i]);
    }
    NelderMeadResult res;
    auto order = [&] {
        for (size_t i = 1; i <= dim; i++) {
            for (size_t k = i; k > 0 && val[k] < val[k - 1]; k--) {
                std::swap(val[k], val[k - 1]);
                std::swap(simplex[k], simplex[k - 1]);
            }
        }
    };
    order();
    for (res.iterations = 0; res.iterations < max_iter; res.iterations++) {
        double spread = std::abs(val[dim] - val[0]);
        double size = 0;
        for (size_t i = 1; i <= dim; i++) {
            for (size_t k = 0; k < dim; k++) {
                size = std::max(size, std::abs(simplex[i][k] - simplex[0][k]));
            }
        }
        if (std::isfinite(val[0]) && spread <= tol * (std::abs(val[0]) + tol) && size <= 1e-7) {
            res.converged = true;
            break;
        }
        std::vector<double> centroid(dim, 0.0);
        for (size_t i = 0; i < dim; i++) {
            for (size_t k = 0; k < dim; k++) {
                centroid[k] += simplex[i][k] / static_cast<double>(dim);
            }
        }
        auto along = [&](double t) {
            std::vector<double> x(dim);
            for (size_t k = 0; k < dim; k++) {
                x[k] = centroid[k] + t * (simplex[dim][k] - centroid[k]);
            }
            return x;
        };
        auto xr = along(-1.0);
        double fr = f(xr);
        if (fr < val[0]) {
            auto xe = along(-2.0);
            double fe = f(xe);
            if (fe < fr) {
                simplex[dim] = xe;
                val[dim] = fe;
            } else {
                simplex[dim] = xr;
                val[dim] = fr;
            }
        } else if (fr < val[dim - 1]) {
            simplex[dim] = xr;
            val[dim] = fr;
        } else {
            bool outside = fr < val[dim];
            auto xc = along(outside ? -0.5 : 0.5);
            double fc = f(xc);
            if (fc < (outside ? fr : val[dim])) {
                simplex[dim] = xc;
                val[dim] = fc;
            } else {
                for (size_t i = 1; i <= dim; i++) {
                    for (size_t k = 0; k < dim; k++) {
                        simplex[i][k] = simplex[0][k] + 0.5 * (simplex[i][k] - simplex[0][k]);
                    }
                    val[i] = f(simplex[i]);
                }
            }
        }
        order();
    }
    res.x = simplex[0];
    res.value = val[0];
    return res;
}

}  // namespace magiclab

#endif
