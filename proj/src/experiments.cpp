#include "clustnet/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "clustnet/csv.hpp"
#include "clustnet/errors.hpp"
#include "clustnet/percolation.hpp"
#include "clustnet/rng.hpp"
#include "clustnet/sim.hpp"
#include "clustnet/threshold.hpp"
#include "clustnet/tuner.hpp"

namespace clustnet {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path) : out_(path) {
    if (!out_) throw parameter_error("cannot open output file: " + path);
}

void CsvWriter::comment(const std::string& key, const std::string& value) {
    out_ << "# " << key << "=" << value << "\n";
}

void CsvWriter::header(const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) out_ << (i ? "," : "") << cols[i];
    out_ << "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
    out_ << "\n";
}

namespace {

// Parameter choices behind the paper's figures: cutoff kappa = 50 throughout,
// tau picked so the mean degree spans ~1.4 to ~46, q in {0.12, 0.15}, pi = 0.22.
constexpr double kKappa = 50.0;
constexpr unsigned kRMax = 500;

unsigned poisson_rmax(double lambda) {
    return static_cast<unsigned>(std::ceil(lambda + 12.0 * std::sqrt(lambda) + 30.0));
}

void stamp(CsvWriter& csv, const std::string& name, const ExperimentOptions& opts,
           const std::string& params) {
    csv.comment("tool_version", kToolVersion);
    csv.comment("experiment", name);
    csv.comment("params", params);
    csv.comment("n", std::to_string(opts.n));
    csv.comment("replicas", std::to_string(opts.replicas));
    csv.comment("base_seed", std::to_string(opts.base_seed));
    csv.comment("simulate", opts.simulate ? "1" : "0");
}

std::string join_path(const std::string& dir, const std::string& file) {
    if (dir.empty() || dir == ".") return file;
    return dir + "/" + file;
}

// Monte Carlo overlay: mean largest-component fraction after percolation.
Aggregate simulate_giant_fraction(const DegreeDistribution& p, double gamma, double pi,
                                  const ExperimentOptions& opts) {
    const auto run = [&](std::uint64_t seed) -> MetricMap {
        Rng split(seed);
        const auto seq = sample_degree_sequence(p, opts.n, split.next_u64());
        const auto base = configuration_match(seq, split.next_u64(), SimplePolicy::erase);
        const auto g = clique_substitute(base, CliqueProfile::constant(gamma), split.next_u64());
        const auto out = bond_percolate_components(g, pi, split.next_u64());
        return {{"fraction", static_cast<double>(out.largest) / g.n_vertices()}};
    };
    return monte_carlo(opts.replicas, opts.base_seed, run).at("fraction");
}

// Monte Carlo overlay: cascade from one pivotal seed plus pivotal-set size.
std::map<std::string, Aggregate> simulate_cascade(const DegreeDistribution& p, double gamma, double q,
                                                  const ExperimentOptions& opts) {
    const auto run = [&](std::uint64_t seed) -> MetricMap {
        Rng split(seed);
        const auto seq = sample_degree_sequence(p, opts.n, split.next_u64());
        const auto base = configuration_match(seq, split.next_u64(), SimplePolicy::erase);
        const auto g = clique_substitute(base, CliqueProfile::constant(gamma), split.next_u64());
        std::uint32_t max_deg = 0;
        for (std::uint32_t v = 0; v < g.n_vertices(); ++v) max_deg = std::max(max_deg, g.degree(v));
        const auto t = ThresholdDistribution::contagion(q, max_deg);
        const auto assignment = assign_thresholds(g, t, split.next_u64());
        const auto pivots = pivotal_set(g, assignment);
        MetricMap metrics;
        metrics["pivotal"] = static_cast<double>(pivots.size()) / g.n_vertices();
        if (pivots.empty()) {
            metrics["cascade"] = 0.0;
        } else {
            const std::uint32_t u = pivots[Rng(split.next_u64()).uniform_below(pivots.size())];
            const auto res = run_threshold(g, assignment, seed_single(u));
            metrics["cascade"] = static_cast<double>(res.final_active_count) / g.n_vertices();
        }
        return metrics;
    };
    return monte_carlo(opts.replicas, opts.base_seed, run);
}

std::string fig_clust_range(const ExperimentOptions& opts) {
    const std::string path = join_path(opts.out_dir, "fig_clust_range.csv");
    CsvWriter csv(path);
    stamp(csv, "fig_clust_range", opts, "powerlaw kappa=50 rmax=500 tau=2.9..0.1");
    csv.header({"tau", "mean_degree", "c_max", "c2_max"});
    for (int i = 29; i >= 1; --i) {
        const double tau = static_cast<double>(i) / 10.0;
        const auto pt = DegreeDistribution::power_law_cutoff(tau, kKappa, kRMax);
        csv.row({fmt_double(tau), fmt_double(pt.mean()), fmt_double(c_max(pt)), fmt_double(c2_max(pt))});
    }
    return path;
}

std::string fig_diff_regular(const ExperimentOptions& opts) {
    const std::string path = join_path(opts.out_dir, "fig_diff_regular.csv");
    CsvWriter csv(path);
    stamp(csv, "fig_diff_regular", opts, "d=3..6 C=0..Cmax step 0.05");
    csv.header({"d", "C", "gamma", "pi_c"});
    for (unsigned d = 3; d <= 6; ++d) {
        const auto pt = DegreeDistribution::regular(d);
        const double cm = c_max(pt);
        for (double C = 0.0; C <= cm + 1e-12; C += 0.05) {
            const auto tuned = tune(pt, std::min(C, cm));
            const auto pc = diffusion_pi_c(tuned.p, CliqueProfile::constant(tuned.gamma));
            csv.row({std::to_string(d), fmt_double(std::min(C, cm)), fmt_double(tuned.gamma),
                     fmt_double(pc.value)});
        }
    }
    return path;
}

std::string fig_diff_size(const ExperimentOptions& opts) {
    const std::string path = join_path(opts.out_dir, "fig_diff_size.csv");
    CsvWriter csv(path);
    stamp(csv, "fig_diff_size", opts, "d=3..6 pi=0.22 C=0..Cmax step 0.05");
    std::vector<std::string> cols = {"d", "C", "gamma", "pi", "zeta", "giant_fraction"};
    if (opts.simulate) {
        cols.insert(cols.end(), {"sim_mean", "sim_ci_lo", "sim_ci_hi"});
    }
    csv.header(cols);
    const double pi = 0.22;
    for (unsigned d = 3; d <= 6; ++d) {
        const auto pt = DegreeDistribution::regular(d);
        const double cm = c_max(pt);
        for (double C = 0.0; C <= cm + 1e-12; C += 0.05) {
            const auto tuned = tune(pt, std::min(C, cm));
            const auto profile = CliqueProfile::constant(tuned.gamma);
            const auto report = diffusion_giant_fraction(tuned.p, profile, pi);
            std::vector<std::string> cells = {std::to_string(d), fmt_double(std::min(C, cm)),
                                              fmt_double(tuned.gamma), fmt_double(pi),
                                              fmt_double(report.zeta), fmt_double(report.giant_fraction)};
            if (opts.simulate) {
                const auto agg = simulate_giant_fraction(tuned.p, tuned.gamma, pi, opts);
                cells.insert(cells.end(), {fmt_double(agg.mean), fmt_double(agg.ci_lo), fmt_double(agg.ci_hi)});
            }
            csv.row(cells);
        }
    }
    return path;
}

std::string fig_diff_powerlaw(const ExperimentOptions& opts) {
    const std::string path = join_path(opts.out_dir, "fig_diff_powerlaw.csv");
    CsvWriter csv(path);
    stamp(csv, "fig_diff_powerlaw", opts, "tau in {2.9,2.5,1.81,1.3} kappa=50 C=0..Cmax (21 pts)");
    csv.header({"tau", "mean_degree", "C", "gamma", "lambda", "pi_c"});
    for (const double tau : {2.9, 2.5, 1.81, 1.3}) {
        const auto pt = DegreeDistribution::power_law_cutoff(tau, kKappa, kRMax);
        const double cm = c_max(pt);
        for (int i = 0; i <= 20; ++i) {
            const double C = cm * static_cast<double>(i) / 20.0;
            const auto tuned = tune(pt, C);
            const auto pc = diffusion_pi_c(tuned.p, CliqueProfile::constant(tuned.gamma));
            csv.row({fmt_double(tau), fmt_double(pt.mean()), fmt_double(C), fmt_double(tuned.gamma),
                     fmt_double(tuned.lambda), fmt_double(pc.value)});
        }
    }
    return path;
}

std::string fig_cont_thresholds(const ExperimentOptions& opts) {
    const std::string path = join_path(opts.out_dir, "fig_cont_thresholds.csv");
    CsvWriter csv(path);
    stamp(csv, "fig_cont_thresholds", opts, "powerlaw tau=2.9..0.1; shifted poisson lambda=0.5..20");
    csv.header({"family", "param", "mean_degree", "qc0", "qc0_possible", "qc1", "qc1_possible"});
    for (int i = 29; i >= 1; --i) {
        const double tau = static_cast<double>(i) / 10.0;
        const auto pt = DegreeDistribution::power_law_cutoff(tau, kKappa, kRMax);
        const auto qc0 = contagion_qc(pt);
        const auto tuned = tune(pt, c_max(pt)); // gamma = 1
        const auto qc1 = contagion_qc(tuned.p);
        csv.row({"powerlaw", fmt_double(tau), fmt_double(pt.mean()), fmt_double(qc0.value),
                 qc0.possible ? "1" : "0", fmt_double(qc1.value), qc1.possible ? "1" : "0"});
    }
    for (double lambda = 0.5; lambda <= 20.0 + 1e-9; lambda += 0.5) {
        const auto pt = DegreeDistribution::poisson_shifted(lambda, poisson_rmax(lambda));
        const auto qc0 = contagion_qc(pt);
        const auto p1 = DegreeDistribution::poisson(lambda, poisson_rmax(lambda));
        const auto qc1 = contagion_qc(p1);
        csv.row({"poisson", fmt_double(lambda), fmt_double(pt.mean()), fmt_double(qc0.value),
                 qc0.possible ? "1" : "0", fmt_double(qc1.value), qc1.possible ? "1" : "0"});
    }
    return path;
}

std::string fig_cont_vs_C(const ExperimentOptions& opts) {
    const std::string path = join_path(opts.out_dir, "fig_cont_vs_C.csv");
    CsvWriter csv(path);
    stamp(csv, "fig_cont_vs_C", opts, "tau in {2.5,1.81,0.1} kappa=50 C=0..Cmax (21 pts)");
    csv.header({"tau", "mean_degree", "C", "gamma", "q_c", "cascade_window"});
    for (const double tau : {2.5, 1.81, 0.1}) {
        const auto pt = DegreeDistribution::power_law_cutoff(tau, kKappa, kRMax);
        const double cm = c_max(pt);
        for (int i = 0; i <= 20; ++i) {
            const double C = cm * static_cast<double>(i) / 20.0;
            const auto tuned = tune(pt, C);
            const auto qc = contagion_qc(tuned.p);
            csv.row({fmt_double(tau), fmt_double(pt.mean()), fmt_double(C), fmt_double(tuned.gamma),
                     fmt_double(qc.value), qc.possible ? "1" : "0"});
        }
    }
    return path;
}

std::string fig_cascade_sizes(const ExperimentOptions& opts) {
    const std::string path = join_path(opts.out_dir, "fig_cascade_sizes.csv");
    CsvWriter csv(path);
    stamp(csv, "fig_cascade_sizes", opts, "q=0.15 poisson family gamma in {0,0.2}");
    std::vector<std::string> cols = {"lambda",   "mean_degree", "variant",         "cascade_possible",
                                     "pivotal",  "zeta",        "cascade_fraction"};
    if (opts.simulate) {
        cols.insert(cols.end(), {"sim_pivotal", "sim_cascade", "sim_cascade_ci_lo", "sim_cascade_ci_hi"});
    }
    csv.header(cols);
    const double q = 0.15;
    for (double lambda = 0.5; lambda <= 12.0 + 1e-9; lambda += 0.25) {
        const auto p = DegreeDistribution::poisson(lambda, poisson_rmax(lambda));
        const auto clustered = CliqueProfile::constant(0.2);
        const auto pt = degree_law_after_substitution(p, clustered);

        struct Variant {
            const char* name;
            const DegreeDistribution* base;
            double gamma;
        } variants[] = {{"g0.2", &p, 0.2}, {"g0", &pt, 0.0}};

        for (const auto& variant : variants) {
            const auto report = contagion_report(*variant.base, CliqueProfile::constant(variant.gamma), q);
            const double pivotal = report.cascade_possible ? report.pivotal_fraction : 0.0;
            const double cascade = report.cascade_possible ? report.cascade_fraction : 0.0;
            std::vector<std::string> cells = {fmt_double(lambda),
                                              fmt_double(pt.mean()),
                                              variant.name,
                                              report.cascade_possible ? "1" : "0",
                                              fmt_double(pivotal),
                                              fmt_double(report.cascade_possible ? report.zeta : 1.0),
                                              fmt_double(cascade)};
            if (opts.simulate) {
                const auto agg = simulate_cascade(*variant.base, variant.gamma, q, opts);
                cells.insert(cells.end(),
                             {fmt_double(agg.at("pivotal").mean), fmt_double(agg.at("cascade").mean),
                              fmt_double(agg.at("cascade").ci_lo), fmt_double(agg.at("cascade").ci_hi)});
            }
            csv.row(cells);
        }
    }
    return path;
}

std::string fig_cascade_vs_C(const ExperimentOptions& opts) {
    const std::string path = join_path(opts.out_dir, "fig_cascade_vs_C.csv");
    CsvWriter csv(path);
    stamp(csv, "fig_cascade_vs_C", opts, "q=0.12 tau in {2.5,1.81,1.3,1} C=0..Cmax (21 pts)");
    csv.header({"tau", "mean_degree", "C", "gamma", "cascade_possible", "pivotal", "cascade_fraction"});
    const double q = 0.12;
    for (const double tau : {2.5, 1.81, 1.3, 1.0}) {
        const auto pt = DegreeDistribution::power_law_cutoff(tau, kKappa, kRMax);
        const double cm = c_max(pt);
        for (int i = 0; i <= 20; ++i) {
            const double C = cm * static_cast<double>(i) / 20.0;
            const auto tuned = tune(pt, C);
            const auto report = contagion_report(tuned.p, CliqueProfile::constant(tuned.gamma), q);
            const double pivotal = report.cascade_possible ? report.pivotal_fraction : 0.0;
            const double cascade = report.cascade_possible ? report.cascade_fraction : 0.0;
            csv.row({fmt_double(tau), fmt_double(pt.mean()), fmt_double(C), fmt_double(tuned.gamma),
                     report.cascade_possible ? "1" : "0", fmt_double(pivotal), fmt_double(cascade)});
        }
    }
    return path;
}

} // namespace

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = {
        "fig_clust_range", "fig_diff_regular", "fig_diff_size",      "fig_diff_powerlaw",
        "fig_cont_thresholds", "fig_cont_vs_C", "fig_cascade_sizes", "fig_cascade_vs_C",
    };
    return names;
}

std::vector<std::string> run_experiment(const std::string& name, const ExperimentOptions& opts) {
    if (name == "fig_clust_range") return {fig_clust_range(opts)};
    if (name == "fig_diff_regular") return {fig_diff_regular(opts)};
    if (name == "fig_diff_size") return {fig_diff_size(opts)};
    if (name == "fig_diff_powerlaw") return {fig_diff_powerlaw(opts)};
    if (name == "fig_cont_thresholds") return {fig_cont_thresholds(opts)};
    if (name == "fig_cont_vs_C") return {fig_cont_vs_C(opts)};
    if (name == "fig_cascade_sizes") return {fig_cascade_sizes(opts)};
    if (name == "fig_cascade_vs_C") return {fig_cascade_vs_C(opts)};
    if (name == "all") {
        std::vector<std::string> files;
        for (const auto& each : experiment_names()) {
            const auto sub = run_experiment(each, opts);
            files.insert(files.end(), sub.begin(), sub.end());
        }
        return files;
    }
    std::ostringstream os;
    os << "unknown experiment '" << name << "'; known:";
    for (const auto& each : experiment_names()) os << ' ' << each;
    throw parameter_error(os.str());
}

} // namespace clustnet
