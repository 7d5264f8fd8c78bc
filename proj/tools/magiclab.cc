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

// magiclab command-line driver. Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "magiclab/harness.h"

using namespace magiclab;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

const char *const kConfigHelp = R"(Config files are flat JSON objects. Keys and defaults:
  experiment      sweep_p_fixed_qD | sweep_p_fixed_q | sweep_alpha | sp_prob | perc_stats | validate
                  (default sweep_p_fixed_qD; the subcommand fixes it for sp-prob, perc, validate)
  n               [16, 32, 64]   system sizes
  p               [0.1]          monitoring rates
  q               [0.1]          T rates (sweep_p_fixed_q, sweep_alpha)
  alpha           [0]            T-monitor correlation (sweep_alpha)
  qD              1              sweep_p_fixed_qD sets q = qD / D
  depth_factor    1              D = round(depth_factor * n)
  realizations    300
  seed            1
  threads         1
  output          ""             CSV path; stdout when empty
  quotient        "group"        group | singletons
  cluster_filter  true
  entanglement    true
  d_max           200            sp_prob depth budget
  shots           1000           sp_prob shots per (n, p)
  sigma           0.05           perc_stats vertical bond closure rate
  max_n, max_depth, instances    6, 6, 200 (validate)
Scalars are accepted where a grid is expected.)";

struct Common {
    std::string config;
    std::optional<uint64_t> seed;
    std::optional<size_t> threads;
    std::string out;
};

void add_common(CLI::App *cmd, Common &c) {
    cmd->add_option("--config", c.config, "JSON config file");
    cmd->add_option("--seed", c.seed, "master seed (overrides config)");
    cmd->add_option("--threads", c.threads, "worker threads (overrides config)")->check(CLI::PositiveNumber);
    cmd->add_option("--out", c.out, "output path (overrides config); stdout when empty");
}

ExperimentConfig resolve(const Common &c) {
    ExperimentConfig cfg = c.config.empty() ? ExperimentConfig{} : load_config(c.config);
    if (c.seed) {
        cfg.seed = *c.seed;
    }
    if (c.threads) {
        cfg.threads = *c.threads;
    }
    if (!c.out.empty()) {
        cfg.output = c.out;
    }
    cfg.validate();
    return cfg;
}

// Writes lines to cfg.output (or stdout) and the manifest next to a file output.
class Sink {
   public:
    explicit Sink(const std::string &path) : path_(path) {
        if (!path_.empty()) {
            file_.open(path_);
            if (!file_) {
                throw std::runtime_error("cannot write '" + path_ + "'");
            }
        }
    }
    std::ostream &stream() {
        return path_.empty() ? std::cout : file_;
    }
    void finish(const ExperimentConfig &cfg, std::chrono::steady_clock::time_point start) {
        stream().flush();
        if (path_.empty()) {
            return;
        }
        double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ofstream m(path_ + ".manifest.json");
        m << run_manifest(cfg, wall).dump(2) << "\n";
        if (!m || !file_) {
            throw std::runtime_error("failed writing '" + path_ + "'");
        }
    }

   private:
    std::string path_;
    std::ofstream file_;
};

int cmd_sweep(const Common &c) {
    auto start = std::chrono::steady_clock::now();
    ExperimentConfig cfg = resolve(c);
    if (cfg.kind != ExperimentKind::SweepPFixedQD && cfg.kind != ExperimentKind::SweepPFixedQ &&
        cfg.kind != ExperimentKind::SweepAlpha) {
        throw UsageError("sweep needs a sweep_* experiment, got " + to_string(cfg.kind));
    }
    SweepTable table = run_sweep(cfg);
    Sink sink(cfg.output);
    sink.stream() << sweep_csv_header() << "\n";
    for (const auto &row : table.rows) {
        sink.stream() << sweep_csv_row(row) << "\n";
    }
    sink.finish(cfg, start);
    if (table.failures) {
        std::cerr << table.failures << " realization(s) failed\n";
    }
    return table.rows.empty() ? kExitRuntime : 0;
}

int cmd_sp_prob(const Common &c) {
    auto start = std::chrono::steady_clock::now();
    ExperimentConfig cfg = resolve(c);
    cfg.kind = ExperimentKind::SpProb;
    Sink sink(cfg.output);
    sink.stream() << tcb_csv_header() << "\n";
    for (size_t n : cfg.n) {
        for (double p : cfg.p) {
            TcbResult r = tcb_experiment(n, p, cfg.d_max, cfg.shots, cfg.seed, {.threads = cfg.threads});
            for (size_t s = 0; s < r.shots.size(); s++) {
                sink.stream() << tcb_csv_row(r, s) << "\n";
            }
            std::cerr << "n=" << n << " p=" << p << " P(SP)(d_max)=" << r.p_sp.back() << "\n";
        }
    }
    sink.finish(cfg, start);
    return 0;
}

int cmd_perc(const Common &c, std::optional<double> sigma, bool solve) {
    if (solve) {
        double s = sigma.value_or(ExperimentConfig{}.sigma);
        if (!(s >= 0 && s <= 1)) {
            throw UsageError("--sigma must lie in [0, 1]");
        }
        std::printf("%.4f\n", critical_p_tn(s));
        return 0;
    }
    auto start = std::chrono::steady_clock::now();
    ExperimentConfig cfg = resolve(c);
    cfg.kind = ExperimentKind::PercStats;
    if (sigma) {
        cfg.sigma = *sigma;
        cfg.validate();
    }
    auto rows = perc_stats(cfg);
    Sink sink(cfg.output);
    sink.stream() << perc_csv_header() << "\n";
    for (const auto &r : rows) {
        sink.stream() << perc_csv_row(r) << "\n";
    }
    sink.finish(cfg, start);
    return 0;
}

int cmd_collapse(const Common &c, const std::string &input, const std::string &control, size_t bootstrap) {
    if (control != "p" && control != "alpha") {
        throw UsageError("--control must be p or alpha");
    }
    auto start = std::chrono::steady_clock::now();
    ExperimentConfig cfg = resolve(c);
    auto pts = fss_points_from_rows(read_sweep_csv(input), control);
    FssResult r;
    try {
        r = fss_collapse(pts, control, {.bootstrap = bootstrap, .seed = cfg.seed});
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    Sink sink(cfg.output);
    sink.stream() << fss_to_json(r).dump(2) << "\n";
    sink.finish(cfg, start);
    return 0;
}

int cmd_validate(const Common &c, std::optional<size_t> max_n, std::optional<size_t> max_depth,
                 std::optional<size_t> instances) {
    auto start = std::chrono::steady_clock::now();
    ExperimentConfig cfg = resolve(c);
    cfg.kind = ExperimentKind::Validate;
    cfg.max_n = max_n.value_or(cfg.max_n);
    cfg.max_depth = max_depth.value_or(cfg.max_depth);
    cfg.instances = instances.value_or(cfg.instances);
    cfg.validate();
    ValidationReport rep = run_validation(cfg.max_n, cfg.max_depth, cfg.instances, cfg.seed);
    nlohmann::json j{{"instances", rep.instances},
                     {"tv_failures", rep.tv_failures},
                     {"theorem_failures", rep.theorem_failures},
                     {"max_tv", rep.max_tv},
                     {"stabilizer_instances", rep.stabilizer_instances}};
    Sink sink(cfg.output);
    sink.stream() << j.dump(2) << "\n";
    sink.finish(cfg, start);
    return rep.tv_failures == 0 && rep.theorem_failures == 0 ? 0 : kExitRuntime;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"magiclab: monitored Clifford+T circuit simulations"};
    app.footer(kConfigHelp);
    app.require_subcommand(1);

    Common common;
    auto *sweep = app.add_subcommand("sweep", "MSR order-parameter sweep; writes the sweep CSV");
    add_common(sweep, common);

    auto *sp = app.add_subcommand("sp-prob", "T-coherence-breaking experiment; writes n,p,shot,d_star,trivial");
    add_common(sp, common);

    std::optional<double> sigma;
    bool solve = false;
    auto *perc = app.add_subcommand("perc", "percolation statistics or the critical point");
    add_common(perc, common);
    perc->add_option("--sigma", sigma, "vertical bond closure rate");
    perc->add_flag("--solve", solve, "print the critical p for --sigma and exit");

    std::string input, control = "p";
    size_t bootstrap = 100;
    auto *collapse = app.add_subcommand("collapse", "finite-size-scaling collapse of a sweep CSV; writes JSON");
    add_common(collapse, common);
    collapse->add_option("input", input, "sweep CSV")->required();
    collapse->add_option("--control", control, "control parameter: p or alpha");
    collapse->add_option("--bootstrap", bootstrap, "bootstrap resamples");

    std::optional<size_t> max_n, max_depth, instances;
    auto *validate = app.add_subcommand("validate", "PBC equivalence and stabilizer-verdict checks");
    add_common(validate, common);
    validate->add_option("--max-n", max_n, "largest qubit count")->check(CLI::Range(2, 12));
    validate->add_option("--max-depth", max_depth, "largest depth")->check(CLI::PositiveNumber);
    validate->add_option("--instances", instances, "instances to check")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*sweep) {
            return cmd_sweep(common);
        }
        if (*sp) {
            return cmd_sp_prob(common);
        }
        if (*perc) {
            return cmd_perc(common, sigma, solve);
        }
        if (*collapse) {
            return cmd_collapse(common, input, control, bootstrap);
        }
        if (*validate) {
            return cmd_validate(common, max_n, max_depth, instances);
        }
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
