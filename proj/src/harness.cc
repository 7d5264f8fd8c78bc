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

#include "magiclab/harness.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "magiclab/oracle.h"
#include "magiclab/parallel.h"

namespace magiclab {

const char *const kCodeVersion = "0.1.0";

namespace {

struct KindName {
    ExperimentKind kind;
    const char *name;
};

constexpr KindName kKinds[] = {
    {ExperimentKind::SweepPFixedQD, "sweep_p_fixed_qD"}, {ExperimentKind::SweepPFixedQ, "sweep_p_fixed_q"},
    {ExperimentKind::SweepAlpha, "sweep_alpha"},         {ExperimentKind::SpProb, "sp_prob"},
    {ExperimentKind::PercStats, "perc_stats"},           {ExperimentKind::Validate, "validate"},
};

uint64_t grid_code(double x) {
    return static_cast<uint64_t>(std::llround(x * 1e9));
}

// Box-Muller on the portable uniform01 stream.
double standard_normal(Rng &rng) {
    double u = 1.0 - uniform01(rng);
    double v = uniform01(rng);
    return std::sqrt(-2 * std::log(u)) * std::cos(2 * M_PI * v);
}

}  // namespace

std::string to_string(ExperimentKind kind) {
    for (const auto &k : kKinds) {
        if (k.kind == kind) {
            return k.name;
        }
    }
    throw std::logic_error("unknown experiment kind");
}

ExperimentKind parse_experiment_kind(const std::string &name) {
    for (const auto &k : kKinds) {
        if (name == k.name) {
            return k.kind;
        }
    }
    throw UsageError("unknown experiment kind '" + name + "'");
}

size_t ExperimentConfig::depth_for(size_t size) const {
    return std::max<size_t>(1, static_cast<size_t>(std::llround(depth_factor * static_cast<double>(size))));
}

void ExperimentConfig::validate() const {
    auto in01 = [](const std::vector<double> &v) {
        return std::all_of(v.begin(), v.end(), [](double x) { return x >= 0 && x <= 1; });
    };
    if (n.empty() || p.empty() || q.empty() || alpha.empty()) {
        throw UsageError("config grids must be non-empty");
    }
    if (!in01(p) || !in01(q)) {
        throw UsageError("p and q grids must lie in [0, 1]");
    }
    if (std::any_of(alpha.begin(), alpha.end(), [](double a) { return a < 0; })) {
        throw UsageError("alpha must be non-negative");
    }
    if (std::any_of(n.begin(), n.end(), [](size_t s) { return s < 2; })) {
        throw UsageError("system sizes must be at least 2");
    }
    if (realizations < 1 || threads < 1 || shots < 1 || d_max < 1 || instances < 1) {
        throw UsageError("counts must be positive");
    }
    if (!(depth_factor > 0) || !(qD >= 0) || !(sigma >= 0 && sigma <= 1)) {
        throw UsageError("depth_factor must be positive, qD non-negative and sigma in [0, 1]");
    }
    if (max_n < 2 || max_depth < 1) {
        throw UsageError("validate needs max_n >= 2 and max_depth >= 1");
    }
    if (kind == ExperimentKind::SweepPFixedQD) {
        for (size_t s : n) {
            if (qD / static_cast<double>(depth_for(s)) > 1) {
                throw UsageError("qD / D exceeds 1");
            }
        }
    }
}

ExperimentConfig config_from_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw UsageError("config must be a JSON object");
    }
    static const std::set<std::string> known = {
        "experiment", "n",     "p",         "q",          "alpha", "qD",    "depth_factor",
        "realizations", "seed", "threads",  "output",     "quotient", "cluster_filter",
        "entanglement", "d_max", "shots",   "sigma",      "max_n", "max_depth", "instances"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!known.count(it.key())) {
            throw UsageError("unknown config key '" + it.key() + "'");
        }
    }
    ExperimentConfig c;
    try {
        if (j.contains("experiment")) {
            c.kind = parse_experiment_kind(j.at("experiment").get<std::string>());
        }
        auto grid = [&](const char *key, auto &dst) {
            if (!j.contains(key)) {
                return;
            }
            const auto &v = j.at(key);
            using T = typename std::decay_t<decltype(dst)>::value_type;
            dst = v.is_array() ? v.get<std::vector<T>>() : std::vector<T>{v.get<T>()};
        };
        grid("n", c.n);
        grid("p", c.p);
        grid("q", c.q);
        grid("alpha", c.alpha);
        auto scalar = [&](const char *key, auto &dst) {
            if (j.contains(key)) {
                dst = j.at(key).get<std::decay_t<decltype(dst)>>();
            }
        };
        scalar("qD", c.qD);
        scalar("depth_factor", c.depth_factor);
        scalar("realizations", c.realizations);
        scalar("seed", c.seed);
        scalar("threads", c.threads);
        scalar("output", c.output);
        scalar("cluster_filter", c.cluster_filter);
        scalar("entanglement", c.entanglement);
        scalar("d_max", c.d_max);
        scalar("shots", c.shots);
        scalar("sigma", c.sigma);
        scalar("max_n", c.max_n);
        scalar("max_depth", c.max_depth);
        scalar("instances", c.instances);
        if (j.contains("quotient")) {
            std::string m = j.at("quotient").get<std::string>();
            if (m == "group") {
                c.quotient = QuotientMode::Group;
            } else if (m == "singletons") {
                c.quotient = QuotientMode::Singletons;
            } else {
                throw UsageError("quotient must be 'group' or 'singletons'");
            }
        }
    } catch (const nlohmann::json::exception &e) {
        throw UsageError(std::string("config type error: ") + e.what());
    }
    c.validate();
    return c;
}

nlohmann::json config_to_json(const ExperimentConfig &c) {
    return nlohmann::json{
        {"experiment", to_string(c.kind)},
        {"n", c.n},
        {"p", c.p},
        {"q", c.q},
        {"alpha", c.alpha},
        {"qD", c.qD},
        {"depth_factor", c.depth_factor},
        {"realizations", c.realizations},
        {"seed", c.seed},
        {"threads", c.threads},
        {"output", c.output},
        {"quotient", c.quotient == QuotientMode::Group ? "group" : "singletons"},
        {"cluster_filter", c.cluster_filter},
        {"entanglement", c.entanglement},
        {"d_max", c.d_max},
        {"shots", c.shots},
        {"sigma", c.sigma},
        {"max_n", c.max_n},
        {"max_depth", c.max_depth},
        {"instances", c.instances},
    };
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open config file '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw UsageError("malformed config '" + path + "': " + e.what());
    }
    return config_from_json(j);
}

std::vector<GridPoint> sweep_grid(const ExperimentConfig &c) {
    std::vector<GridPoint> pts;
    for (size_t n : c.n) {
        for (double p : c.p) {
            for (double q : c.q) {
                for (double a : c.alpha) {
                    GridPoint g;
                    g.n = n;
                    g.depth = c.depth_for(n);
                    g.p = p;
                    g.q = q;
                    g.alpha = a;
                    switch (c.kind) {
                        case ExperimentKind::SweepPFixedQD:
                            g.q = c.qD / static_cast<double>(g.depth);
                            g.alpha = 0;
                            break;
                        case ExperimentKind::SweepAlpha:
                            g.model = MonitorModel::TCorrelated;
                            break;
                        default:
                            g.alpha = 0;
                            break;
                    }
                    pts.push_back(g);
                }
            }
        }
    }
    // Collapsed axes (q under fixed qD, alpha outside sweep_alpha) yield repeated points.
    std::vector<GridPoint> unique;
    for (const auto &g : pts) {
        bool seen = std::any_of(unique.begin(), unique.end(), [&](const GridPoint &u) {
            return u.n == g.n && u.p == g.p && u.q == g.q && u.alpha == g.alpha;
        });
        if (!seen) {
            unique.push_back(g);
        }
    }
    return unique;
}

SweepTable run_sweep(const ExperimentConfig &config) {
    config.validate();
    SweepTable table;
    table.points = sweep_grid(config);
    for (const auto &g : table.points) {
        ModelParams mp{g.n, g.depth, g.p, g.q, g.alpha, g.model};
        try {
            mp.validate();
        } catch (const std::invalid_argument &e) {
            throw UsageError(std::string("grid point rejected: ") + e.what());
        }
    }
    size_t reps = config.realizations;
    size_t tasks = table.points.size() * reps;
    std::vector<SweepRow> rows(tasks);
    std::vector<uint8_t> ok(tasks, 0);
    RealizationOptions opts;
    opts.cluster_filter = config.cluster_filter;
    opts.compute_entanglement = config.entanglement;
    opts.quotient = config.quotient;
    std::mutex log_mu;
    parallel_for(tasks, config.threads, [&](size_t task) {
        size_t pi = task / reps;
        size_t r = task % reps;
        const auto &g = table.points[pi];
        ModelParams mp{g.n, g.depth, g.p, g.q, g.alpha, g.model};
        uint64_t seed = derive_seed(config.seed, {g.n, grid_code(g.p), grid_code(g.q), grid_code(g.alpha), r});
        try {
            rows[task] = run_realization(mp, seed, opts);
            ok[task] = 1;
        } catch (const std::exception &e) {
            std::lock_guard<std::mutex> lock(log_mu);
            std::cerr << "task " << task << " (n=" << g.n << " p=" << g.p << " realization " << r
                      << ") failed: " << e.what() << "\n";
        }
    });
    for (size_t task = 0; task < tasks; task++) {
        if (ok[task]) {
            table.rows.push_back(std::move(rows[task]));
            table.point_of_row.push_back(task / reps);
        } else {
            table.failures++;
        }
    }
    return table;
}

std::vector<PointSummary> summarize(const SweepTable &table) {
    std::vector<std::vector<double>> terms(table.points.size());
    std::vector<std::vector<std::vector<size_t>>> sizes(table.points.size());
    std::vector<PointSummary> out(table.points.size());
    for (size_t i = 0; i < table.rows.size(); i++) {
        size_t pi = table.point_of_row[i];
        terms[pi].push_back(table.rows[i].order_param_term);
        sizes[pi].push_back(table.rows[i].block_sizes);
        out[pi].mean_t += static_cast<double>(table.rows[i].t);
        out[pi].mean_ee += static_cast<double>(table.rows[i].ee_half_cut);
    }
    std::vector<PointSummary> kept;
    for (size_t pi = 0; pi < table.points.size(); pi++) {
        if (terms[pi].empty()) {
            continue;
        }
        auto &s = out[pi];
        s.point = table.points[pi];
        s.order = mean_and_se(terms[pi]);
        s.histogram = block_histogram(sizes[pi]);
        s.mean_t /= static_cast<double>(terms[pi].size());
        s.mean_ee /= static_cast<double>(terms[pi].size());
        kept.push_back(std::move(s));
    }
    return kept;
}

// ---- finite-size scaling ----

double collapse_quality(const std::vector<FssPoint> &points, double x_c, double nu) {
    if (!(nu > 0) || points.empty()) {
        return std::numeric_limits<double>::infinity();
    }
    constexpr double kVarFloor = 1e-18;
    std::map<size_t, std::vector<std::pair<double, size_t>>> by_size;
    std::vector<double> u(points.size());
    for (size_t i = 0; i < points.size(); i++) {
        u[i] = (points[i].x - x_c) * std::pow(static_cast<double>(points[i].n), 1 / nu);
        by_size[points[i].n].push_back({u[i], i});
    }
    for (auto &[n, v] : by_size) {
        std::sort(v.begin(), v.end());
    }
    double sum = 0;
    size_t terms = 0;
    for (size_t i = 0; i < points.size(); i++) {
        double k = 0, kx = 0, kxx = 0, ky = 0, kxy = 0;
        size_t used = 0;
        for (const auto &[n, v] : by_size) {
            if (n == points[i].n) {
                continue;
            }
            double tol = 1e-9 * std::max(1.0, std::abs(u[i]));
            auto hi = std::lower_bound(v.begin(), v.end(), std::make_pair(u[i] - tol, size_t{0}));
            if (hi == v.end()) {
                continue;
            }
            if (std::abs(hi->first - u[i]) <= tol) {
                if (hi == v.begin()) {
                    if (hi + 1 == v.end()) {
                        continue;
                    }
                    hi++;
                }
            } else if (hi == v.begin()) {
                continue;
            }
            for (auto it : {hi - 1, hi}) {
                const auto &pt = points[it->second];
                double w = 1 / std::max(pt.se * pt.se, kVarFloor);
                double x = it->first;
                k += w;
                kx += w * x;
                kxx += w * x * x;
                ky += w * pt.y;
                kxy += w * x * pt.y;
                used++;
            }
        }
        if (used < 2) {
            continue;
        }
        double det = k * kxx - kx * kx;
        if (!(det > 0)) {
            continue;
        }
        double ybar = (kxx * ky - kx * kxy + u[i] * (k * kxy - kx * ky)) / det;
        double var = (kxx - 2 * u[i] * kx + u[i] * u[i] * k) / det;
        double r = points[i].y - ybar;
        sum += r * r / (std::max(points[i].se * points[i].se, kVarFloor) + std::max(var, 0.0));
        terms++;
    }
    if (2 * terms < points.size()) {
        return std::numeric_limits<double>::infinity();
    }
    return sum / static_cast<double>(terms);
}

namespace {

struct Fit {
    double x_c = 0;
    double nu = 0;
    double quality = std::numeric_limits<double>::infinity();
    bool converged = false;
};

Fit fit_once(const std::vector<FssPoint> &pts, double x0, double nu0, double xlo, double xhi, const FssOptions &o) {
    auto objective = [&](const std::vector<double> &v) {
        double nu = std::exp(v[1]);
        if (v[0] < xlo || v[0] > xhi || nu < o.nu_min || nu > o.nu_max) {
            return std::numeric_limits<double>::infinity();
        }
        return collapse_quality(pts, v[0], nu);
    };
    auto r = nelder_mead(objective, {x0, std::log(nu0)}, {(xhi - xlo) / 10, 0.3});
    Fit f;
    f.x_c = r.x[0];
    f.nu = std::exp(r.x[1]);
    f.quality = r.value;
    f.converged = r.converged && std::isfinite(r.value);
    return f;
}

Fit fit_multistart(const std::vector<FssPoint> &pts, double xlo, double xhi, const FssOptions &o) {
    Fit best;
    for (int k = 1; k <= 5; k++) {
        for (double nu0 : {0.8, 1.5}) {
            double x0 = xlo + (xhi - xlo) * k / 6.0;
            Fit f = fit_once(pts, x0, nu0, xlo, xhi, o);
            if (f.converged && f.quality < best.quality) {
                best = f;
            }
        }
    }
    return best;
}

}  // namespace

FssResult fss_collapse(const std::vector<FssPoint> &points, const std::string &control, const FssOptions &options) {
    std::set<size_t> sizes;
    for (const auto &p : points) {
        sizes.insert(p.n);
    }
    if (sizes.size() < 3) {
        throw std::invalid_argument("fss_collapse: need at least three system sizes");
    }
    auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                        [](const FssPoint &a, const FssPoint &b) { return a.x < b.x; });
    double xlo = lo->x, xhi = hi->x;
    Fit best = fit_multistart(points, xlo, xhi, options);
    if (!best.converged) {
        throw std::runtime_error("fss_collapse: optimizer did not converge");
    }
    FssResult res;
    res.control = control;
    res.x_c = best.x_c;
    res.nu = best.nu;
    res.quality = best.quality;
    res.points = points.size();
    res.sizes = sizes.size();
    if (options.bootstrap > 0) {
        Rng rng(options.seed);
        std::vector<double> xs, nus;
        for (size_t b = 0; b < options.bootstrap; b++) {
            auto resampled = points;
            for (auto &p : resampled) {
                p.y += p.se * standard_normal(rng);
            }
            Fit f = fit_once(resampled, best.x_c, best.nu, xlo, xhi, options);
            if (f.converged) {
                xs.push_back(f.x_c);
                nus.push_back(f.nu);
            }
        }
        auto sd = [](const std::vector<double> &v) {
            if (v.size() < 2) {
                return 0.0;
            }
            double m = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
            double ss = 0;
            for (double x : v) {
                ss += (x - m) * (x - m);
            }
            return std::sqrt(ss / static_cast<double>(v.size() - 1));
        };
        res.x_c_err = sd(xs);
        res.nu_err = sd(nus);
    }
    return res;
}

nlohmann::json fss_to_json(const FssResult &r) {
    return nlohmann::json{{"control", r.control}, {"x_c", r.x_c},         {"nu", r.nu},
                          {"quality", r.quality}, {"x_c_err", r.x_c_err}, {"nu_err", r.nu_err},
                          {"points", r.points},   {"sizes", r.sizes}};
}

std::vector<FssPoint> fss_points(const std::vector<PointSummary> &summary, const std::string &control) {
    if (control != "p" && control != "alpha") {
        throw std::invalid_argument("control must be 'p' or 'alpha'");
    }
    std::vector<FssPoint> pts;
    for (const auto &s : summary) {
        pts.push_back({s.point.n, control == "p" ? s.point.p : s.point.alpha, s.order.mean, s.order.se});
    }
    return pts;
}

std::vector<SweepRow> read_sweep_csv(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open sweep CSV '" + path + "'");
    }
    std::string line;
    if (!std::getline(in, line) || line != sweep_csv_header()) {
        throw UsageError("'" + path + "' does not start with the sweep CSV header");
    }
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) {
            f.push_back(cell);
        }
        if (f.size() != 13) {
            throw UsageError("malformed sweep CSV row: " + line);
        }
        SweepRow r;
        try {
            r.n = std::stoul(f[0]);
            r.depth = std::stoul(f[1]);
            r.p = std::stod(f[2]);
            r.q = std::stod(f[3]);
            r.alpha = std::stod(f[4]);
            r.seed = std::stoull(f[5]);
            r.t = std::stoul(f[6]);
            r.K = std::stoul(f[7]);
            r.K_prime = std::stoul(f[8]);
            r.max_block = std::stoul(f[9]);
            r.cpx_log2 = std::stod(f[10]);
            r.order_param_term = std::stod(f[11]);
            r.ee_half_cut = std::stoul(f[12]);
        } catch (const std::exception &) {
            throw UsageError("malformed sweep CSV row: " + line);
        }
        rows.push_back(r);
    }
    return rows;
}

std::vector<FssPoint> fss_points_from_rows(const std::vector<SweepRow> &rows, const std::string &control) {
    if (control != "p" && control != "alpha") {
        throw std::invalid_argument("control must be 'p' or 'alpha'");
    }
    std::map<std::pair<size_t, double>, std::vector<double>> groups;
    for (const auto &r : rows) {
        groups[{r.n, control == "p" ? r.p : r.alpha}].push_back(r.order_param_term);
    }
    std::vector<FssPoint> pts;
    for (const auto &[key, v] : groups) {
        Estimate e = mean_and_se(v);
        pts.push_back({key.first, key.second, e.mean, e.se});
    }
    return pts;
}

// ---- percolation and validation ----

std::vector<SpanningCurve> spanning_curves(const std::vector<size_t> &sizes, const std::vector<double> &p, double sigma,
                                           size_t realizations, uint64_t seed, size_t threads) {
    std::vector<SpanningCurve> out;
    for (size_t L : sizes) {
        SpanningCurve c;
        c.L = L;
        c.p = p;
        std::vector<uint8_t> hit(p.size() * realizations, 0);
        parallel_for(hit.size(), threads, [&](size_t task) {
            size_t pi = task / realizations;
            Rng rng(derive_seed(seed, {L, grid_code(p[pi]), grid_code(sigma), task % realizations}));
            hit[task] = spans(random_lattice(L, L, p[pi], sigma, rng));
        });
        for (size_t pi = 0; pi < p.size(); pi++) {
            size_t count = 0;
            for (size_t r = 0; r < realizations; r++) {
                count += hit[pi * realizations + r];
            }
            c.fraction.push_back(static_cast<double>(count) / static_cast<double>(realizations));
        }
        out.push_back(std::move(c));
    }
    return out;
}

double curve_crossing(const std::vector<double> &x, const std::vector<double> &a, const std::vector<double> &b) {
    if (x.size() != a.size() || x.size() != b.size()) {
        throw std::invalid_argument("curve_crossing: size mismatch");
    }
    // Sign changes of a - b between consecutive grid points where they differ; ties on
    // saturated plateaus carry no information. The steepest change wins over noise crossings.
    double best = std::numeric_limits<double>::quiet_NaN();
    double steepest = 0;
    size_t prev = x.size();
    for (size_t i = 0; i < x.size(); i++) {
        double d1 = a[i] - b[i];
        if (d1 == 0) {
            continue;
        }
        if (prev < x.size()) {
            double d0 = a[prev] - b[prev];
            if (d0 * d1 < 0 && std::abs(d0 - d1) > steepest) {
                steepest = std::abs(d0 - d1);
                best = x[prev] + (x[i] - x[prev]) * d0 / (d0 - d1);
            }
        }
        prev = i;
    }
    return best;
}

std::vector<PercStatsRow> perc_stats(const ExperimentConfig &config) {
    config.validate();
    std::vector<std::pair<size_t, double>> pts;
    for (size_t n : config.n) {
        for (double p : config.p) {
            pts.push_back({n, p});
        }
    }
    size_t reps = config.realizations;
    std::vector<PercStatsRow> rows(pts.size() * reps);
    parallel_for(rows.size(), config.threads, [&](size_t task) {
        auto [n, p] = pts[task / reps];
        size_t r = task % reps;
        Rng rng(derive_seed(config.seed, {n, grid_code(p), grid_code(config.sigma), r}));
        HoneycombLattice lat = random_lattice(n, config.depth_for(n), p, config.sigma, rng);
        auto ccs = find_ccs(lat, n);
        PercStatsRow row;
        row.realization = r;
        row.p = p;
        row.sigma = config.sigma;
        row.n_clusters = ccs.size();
        for (const auto &cc : ccs) {
            row.max_s = std::max(row.max_s, cc.s);
            row.max_d = std::max(row.max_d, cc.d);
        }
        row.spanning = spans(lat);
        rows[task] = row;
    });
    return rows;
}

ValidationReport run_validation(size_t max_n, size_t max_depth, size_t instances, uint64_t seed) {
    static const double kQ[] = {0.0, 0.1, 0.3};
    static const double kP[] = {0.0, 0.2, 0.5};
    ValidationReport rep;
    for (size_t i = 0; rep.instances < instances; i++) {
        if (i > 100 * instances) {
            throw std::runtime_error("run_validation: too few instances within the T budget");
        }
        Rng rng(derive_seed(seed, {i}));
        ModelParams mp;
        mp.n = 2 + uniform_index(rng, max_n - 1);
        mp.depth = 1 + uniform_index(rng, max_depth);
        mp.q = kQ[i % 3];
        mp.p = kP[(i / 3) % 3];
        Circuit c = generate(mp, rng);
        if (c.t_count() > kMaxOracleAncillas) {
            continue;
        }
        EquivalenceReport r = check_pbc_equivalence(c, rng);
        rep.instances++;
        rep.max_tv = std::max(rep.max_tv, r.tv);
        rep.tv_failures += !(r.tv < 1e-9);
        rep.theorem_failures += (r.direct_stabilizer != r.pbc_stabilizer) || !r.pbc_consistent;
        rep.stabilizer_instances += r.direct_stabilizer;
    }
    return rep;
}

nlohmann::json run_manifest(const ExperimentConfig &config, double wall_seconds) {
    return nlohmann::json{{"config", config_to_json(config)}, {"code_version", kCodeVersion}, {"wall_seconds", wall_seconds}};
}

}  // namespace magiclab
