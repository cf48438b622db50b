#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "clustnet/csv.hpp"
#include "clustnet/errors.hpp"
#include "clustnet/experiments.hpp"
#include "clustnet/graph.hpp"
#include "clustnet/percolation.hpp"
#include "clustnet/rng.hpp"
#include "clustnet/sim.hpp"
#include "clustnet/threshold.hpp"
#include "clustnet/tuner.hpp"

namespace {

using namespace clustnet;

// Compact distribution specs: regular:3, powerlaw:tau=2.5,kappa=50,rmax=500,
// poisson:lambda=3, poisson_shifted:lambda=2, file:path/to/table.txt
DegreeDistribution parse_dist(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "file") {
        if (rest.empty()) throw parameter_error("dist spec 'file:' needs a path");
        return DegreeDistribution::load(rest);
    }
    std::map<std::string, double> kv;
    std::stringstream ss(rest);
    std::string item;
    std::vector<std::string> bare;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            bare.push_back(item);
        } else {
            kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        }
    }
    const auto get = [&](const std::string& key, std::optional<double> fallback = {}) {
        auto it = kv.find(key);
        if (it != kv.end()) return it->second;
        if (fallback) return *fallback;
        throw parameter_error("dist spec '" + spec + "' is missing key '" + key + "'");
    };
    if (kind == "regular") {
        double d = bare.empty() ? get("d") : std::stod(bare.front());
        return DegreeDistribution::regular(static_cast<unsigned>(d));
    }
    if (kind == "powerlaw") {
        const double tau = get("tau");
        const double kappa = get("kappa", 50.0);
        const double rmax = get("rmax", 500.0);
        return DegreeDistribution::power_law_cutoff(tau, kappa, static_cast<unsigned>(rmax));
    }
    if (kind == "poisson" || kind == "poisson_shifted") {
        const double lambda = bare.empty() ? get("lambda") : std::stod(bare.front());
        const double rmax_default = std::ceil(lambda + 12.0 * std::sqrt(lambda) + 30.0);
        const auto rmax = static_cast<unsigned>(get("rmax", rmax_default));
        return kind == "poisson" ? DegreeDistribution::poisson(lambda, rmax)
                                 : DegreeDistribution::poisson_shifted(lambda, rmax);
    }
    throw parameter_error("unknown dist spec kind '" + kind + "' (regular|powerlaw|poisson|poisson_shifted|file)");
}

SimplePolicy parse_policy(const std::string& name) {
    if (name == "multigraph") return SimplePolicy::multigraph;
    if (name == "erase") return SimplePolicy::erase;
    if (name == "reject") return SimplePolicy::reject;
    throw parameter_error("unknown policy '" + name + "' (multigraph|erase|reject)");
}

struct OutStream {
    explicit OutStream(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw parameter_error("cannot open output file: " + path);
        }
    }
    std::ostream& get() { return file.is_open() ? static_cast<std::ostream&>(file) : std::cout; }
    std::ofstream file;
};

void stamp_stream(std::ostream& os, const std::string& cmd, const std::string& params,
                  std::uint64_t seed) {
    os << "# tool_version=" << kToolVersion << "\n";
    os << "# command=" << cmd << "\n";
    os << "# params=" << params << "\n";
    os << "# base_seed=" << seed << "\n";
}

GraphInstance build_graph(const DegreeDistribution& p, double gamma, std::size_t n,
                          SimplePolicy policy, std::uint64_t seed) {
    Rng split(seed);
    const auto seq = sample_degree_sequence(p, n, split.next_u64());
    const auto base = configuration_match(seq, split.next_u64(), policy);
    return clique_substitute(base, CliqueProfile::constant(gamma), split.next_u64());
}

int run_cli(int argc, char** argv) {
    CLI::App app{"clustered random graphs: generation, cascade analytics, Monte Carlo validation"};
    app.require_subcommand(1);

    // ---- dist ----
    auto* cmd_dist = app.add_subcommand("dist", "construct a degree distribution and write its table");
    std::string dist_spec, dist_out;
    cmd_dist->add_option("--dist", dist_spec, "distribution spec")->required();
    cmd_dist->add_option("--out", dist_out, "output table file (default stdout)");
    cmd_dist->callback([&] {
        const auto p = parse_dist(dist_spec);
        OutStream out(dist_out);
        out.get() << "# tool_version=" << kToolVersion << "\n"
                  << "# dist=" << dist_spec << "\n"
                  << "# mean=" << fmt_double(p.mean()) << "\n"
                  << "# tail_mass_dropped=" << fmt_double(p.tail_mass_dropped()) << "\n"
                  << p.to_table();
    });

    // ---- tune ----
    auto* cmd_tune = app.add_subcommand("tune", "find (gamma, lambda, p) hitting a target clustering");
    std::string tune_spec, tune_out;
    double tune_c = 0.0;
    bool tune_biased = false;
    cmd_tune->add_option("--dist", tune_spec, "target degree distribution spec")->required();
    cmd_tune->add_option("--C", tune_c, "target clustering coefficient")->required();
    cmd_tune->add_flag("--biased", tune_biased, "report the biased coefficient of the result too");
    cmd_tune->add_option("--out", tune_out, "output file for the tuned base distribution (default stdout)");
    cmd_tune->callback([&] {
        const auto pt = parse_dist(tune_spec);
        const auto result = tune(pt, tune_c);
        OutStream out(tune_out);
        out.get() << "# tool_version=" << kToolVersion << "\n"
                  << "# target_dist=" << tune_spec << "\n"
                  << "# target_C=" << fmt_double(tune_c) << "\n"
                  << "# c_max=" << fmt_double(c_max(pt)) << "\n"
                  << "# gamma=" << fmt_double(result.gamma) << "\n"
                  << "# lambda=" << fmt_double(result.lambda) << "\n"
                  << "# achieved_C=" << fmt_double(result.achieved_c) << "\n";
        if (tune_biased) {
            out.get() << "# achieved_C2=" << fmt_double(c2_of_gamma(pt, result.gamma)) << "\n";
        }
        out.get() << result.p.to_table();
    });

    // ---- analyze ----
    auto* cmd_analyze = app.add_subcommand("analyze", "analytic thresholds and cascade sizes");
    cmd_analyze->require_subcommand(1);

    auto* an_diff = cmd_analyze->add_subcommand("diffusion", "diffusion threshold and giant fraction");
    std::string ad_spec, ad_out;
    double ad_gamma = 0.0;
    std::vector<double> ad_pis;
    std::optional<double> ad_alpha;
    an_diff->add_option("--dist", ad_spec)->required();
    an_diff->add_option("--gamma", ad_gamma, "constant clique probability")->required();
    an_diff->add_option("--pi", ad_pis, "infection probabilities to evaluate (default: only pi_c)");
    an_diff->add_option("--alpha", ad_alpha, "degree-independent activation probability");
    an_diff->add_option("--out", ad_out, "CSV output (default stdout)");
    an_diff->callback([&] {
        const auto p = parse_dist(ad_spec);
        const auto profile = CliqueProfile::constant(ad_gamma);
        OutStream out(ad_out);
        stamp_stream(out.get(), "analyze diffusion",
                     "dist=" + ad_spec + " gamma=" + fmt_double(ad_gamma), 0);
        out.get() << "dist,gamma,pi,alpha,pi_c,pi_c_finite,zeta,fraction,regularity_ok,supercritical\n";
        const auto pc = diffusion_pi_c(p, profile);
        if (ad_pis.empty()) ad_pis.push_back(pc.value);
        for (const double pi : ad_pis) {
            if (ad_alpha) {
                const auto act =
                    diffusion_activation_fraction(p, profile, pi, ActivationProfile::constant(*ad_alpha));
                out.get() << ad_spec << ',' << fmt_double(ad_gamma) << ',' << fmt_double(pi) << ','
                          << fmt_double(*ad_alpha) << ',' << fmt_double(pc.value) << ',' << pc.finite << ','
                          << fmt_double(act.zeta) << ',' << fmt_double(act.fraction) << ','
                          << act.regularity_ok << ',' << (pc.finite && pi > pc.value) << "\n";
            } else {
                const auto report = diffusion_giant_fraction(p, profile, pi);
                out.get() << ad_spec << ',' << fmt_double(ad_gamma) << ',' << fmt_double(pi) << ",,"
                          << fmt_double(report.pi_c) << ',' << report.pi_c_finite << ','
                          << fmt_double(report.zeta) << ',' << fmt_double(report.giant_fraction) << ','
                          << report.regularity_ok << ',' << report.supercritical << "\n";
            }
        }
    });

    auto* an_cont = cmd_analyze->add_subcommand("contagion", "contagion threshold, pivotal set, cascade size");
    std::string ac_spec, ac_out;
    double ac_gamma = 0.0;
    std::vector<double> ac_qs;
    std::optional<double> ac_alpha;
    an_cont->add_option("--dist", ac_spec)->required();
    an_cont->add_option("--gamma", ac_gamma)->required();
    an_cont->add_option("--q", ac_qs, "contagion parameters to evaluate")->required();
    an_cont->add_option("--alpha", ac_alpha, "clique-correlated activation probability");
    an_cont->add_option("--out", ac_out, "CSV output (default stdout)");
    an_cont->callback([&] {
        const auto p = parse_dist(ac_spec);
        const auto profile = CliqueProfile::constant(ac_gamma);
        OutStream out(ac_out);
        stamp_stream(out.get(), "analyze contagion",
                     "dist=" + ac_spec + " gamma=" + fmt_double(ac_gamma), 0);
        out.get() << "dist,gamma,q,alpha,q_c,q_c_possible,cascade_possible,xi,pivotal,zeta,cascade_fraction,"
                     "regularity_ok\n";
        for (const double q : ac_qs) {
            auto report = contagion_report(p, profile, q);
            std::string alpha_cell;
            if (ac_alpha) {
                alpha_cell = fmt_double(*ac_alpha);
                const auto t = ThresholdDistribution::contagion(q, p.support_max());
                const auto cs =
                    activation_cascade_fraction(p, profile, t, ActivationProfile::constant(*ac_alpha));
                report.zeta = cs.zeta;
                report.cascade_fraction = cs.fraction;
                report.regularity_ok = cs.regularity_ok;
            }
            out.get() << ac_spec << ',' << fmt_double(ac_gamma) << ',' << fmt_double(q) << ',' << alpha_cell
                      << ',' << fmt_double(report.q_c.value_or(0.0)) << ',' << report.q_c_possible << ','
                      << report.cascade_possible << ',' << fmt_double(report.xi) << ','
                      << fmt_double(report.pivotal_fraction) << ',' << fmt_double(report.zeta) << ','
                      << fmt_double(report.cascade_fraction) << ',' << report.regularity_ok << "\n";
        }
    });

    auto* an_thresh = cmd_analyze->add_subcommand("threshold", "symmetric threshold model with a row file");
    std::string at_spec, at_rows, at_out;
    double at_gamma = 0.0;
    an_thresh->add_option("--dist", at_spec)->required();
    an_thresh->add_option("--gamma", at_gamma)->required();
    an_thresh->add_option("--thresholds", at_rows, "file: one row per degree, entries t_s0..t_ss")->required();
    an_thresh->add_option("--out", at_out, "CSV output (default stdout)");
    an_thresh->callback([&] {
        const auto p = parse_dist(at_spec);
        std::ifstream in(at_rows);
        if (!in) throw parameter_error("cannot open threshold file: " + at_rows);
        std::vector<std::vector<double>> rows;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            rows.emplace_back();
            double x;
            while (ls >> x) rows.back().push_back(x);
        }
        const auto t = ThresholdDistribution::from_rows(std::move(rows));
        const auto report = threshold_report(p, CliqueProfile::constant(at_gamma), t);
        OutStream out(at_out);
        stamp_stream(out.get(), "analyze threshold",
                     "dist=" + at_spec + " gamma=" + fmt_double(at_gamma) + " thresholds=" + at_rows, 0);
        out.get() << "dist,gamma,t_id,cascade_possible,xi,pivotal,zeta,cascade_fraction,regularity_ok\n";
        out.get() << at_spec << ',' << fmt_double(at_gamma) << ',' << at_rows << ','
                  << report.cascade_possible << ',' << fmt_double(report.xi) << ','
                  << fmt_double(report.pivotal_fraction) << ',' << fmt_double(report.zeta) << ','
                  << fmt_double(report.cascade_fraction) << ',' << report.regularity_ok << "\n";
    });

    // ---- gen ----
    auto* cmd_gen = app.add_subcommand("gen", "generate a clique-substituted configuration graph");
    std::string gen_spec, gen_out, gen_policy = "reject";
    double gen_gamma = 0.0;
    std::size_t gen_n = 1000;
    std::uint64_t gen_seed = 1;
    cmd_gen->add_option("--dist", gen_spec)->required();
    cmd_gen->add_option("--gamma", gen_gamma)->required();
    cmd_gen->add_option("--n", gen_n, "number of base vertices")->required();
    cmd_gen->add_option("--seed", gen_seed, "RNG seed");
    cmd_gen->add_option("--policy", gen_policy, "multigraph|erase|reject");
    cmd_gen->add_option("--out", gen_out, "graph file")->required();
    cmd_gen->callback([&] {
        const auto p = parse_dist(gen_spec);
        const auto g = build_graph(p, gen_gamma, gen_n, parse_policy(gen_policy), gen_seed);
        save_graph(g, gen_out);
        std::cerr << "wrote " << gen_out << " (" << g.n_vertices() << " vertices, " << g.n_edges()
                  << " edges, policy " << gen_policy << (gen_policy == "erase" ? ", degrees deviate from the model" : "")
                  << ")\n";
    });

    // ---- simulate ----
    auto* cmd_sim = app.add_subcommand("simulate", "Monte Carlo validation runs");
    cmd_sim->require_subcommand(1);

    auto* sim_diff = cmd_sim->add_subcommand("diffusion", "percolation giant / activated fraction");
    std::string sd_spec, sd_out, sd_policy = "erase";
    double sd_gamma = 0.0, sd_pi = 0.5;
    std::optional<double> sd_alpha;
    std::size_t sd_n = 100000, sd_replicas = 10;
    std::uint64_t sd_seed = 1;
    sim_diff->add_option("--dist", sd_spec)->required();
    sim_diff->add_option("--gamma", sd_gamma)->required();
    sim_diff->add_option("--pi", sd_pi)->required();
    sim_diff->add_option("--alpha", sd_alpha, "degree-independent seeding probability");
    sim_diff->add_option("--n", sd_n);
    sim_diff->add_option("--replicas", sd_replicas);
    sim_diff->add_option("--seed", sd_seed);
    sim_diff->add_option("--policy", sd_policy);
    sim_diff->add_option("--out", sd_out, "CSV output (default stdout)");
    sim_diff->callback([&] {
        const auto p = parse_dist(sd_spec);
        const auto policy = parse_policy(sd_policy);
        const auto run = [&](std::uint64_t seed) -> MetricMap {
            Rng split(seed);
            const auto seq = sample_degree_sequence(p, sd_n, split.next_u64());
            const auto base = configuration_match(seq, split.next_u64(), policy);
            const auto g = clique_substitute(base, CliqueProfile::constant(sd_gamma), split.next_u64());
            MetricMap metrics;
            if (sd_alpha) {
                const auto seeds =
                    seed_degree_independent(g, ActivationProfile::constant(*sd_alpha), split.next_u64());
                const auto res = run_diffusion(g, sd_pi, seeds, split.next_u64());
                metrics["active_fraction"] = static_cast<double>(res.final_active_count) / g.n_vertices();
            } else {
                const auto out = bond_percolate_components(g, sd_pi, split.next_u64());
                metrics["largest_component_fraction"] = static_cast<double>(out.largest) / g.n_vertices();
                metrics["second_component_fraction"] = static_cast<double>(out.second) / g.n_vertices();
            }
            return metrics;
        };
        const auto aggregates = monte_carlo(sd_replicas, sd_seed, run);
        OutStream out(sd_out);
        stamp_stream(out.get(), "simulate diffusion",
                     "dist=" + sd_spec + " gamma=" + fmt_double(sd_gamma) + " pi=" + fmt_double(sd_pi) +
                         " n=" + std::to_string(sd_n) + " policy=" + sd_policy,
                     sd_seed);
        out.get() << "metric,mean,std,ci_lo,ci_hi,replicas,base_seed\n";
        for (const auto& [name, agg] : aggregates) {
            out.get() << name << ',' << fmt_double(agg.mean) << ',' << fmt_double(agg.stddev) << ','
                      << fmt_double(agg.ci_lo) << ',' << fmt_double(agg.ci_hi) << ',' << agg.replicas << ','
                      << sd_seed << "\n";
        }
    });

    auto* sim_cont = cmd_sim->add_subcommand("contagion", "pivotal set and cascade from a pivotal seed");
    std::string sc_spec, sc_out, sc_policy = "erase";
    double sc_gamma = 0.0, sc_q = 0.15;
    std::optional<double> sc_alpha;
    std::size_t sc_n = 100000, sc_replicas = 10;
    std::uint64_t sc_seed = 1;
    sim_cont->add_option("--dist", sc_spec)->required();
    sim_cont->add_option("--gamma", sc_gamma)->required();
    sim_cont->add_option("--q", sc_q)->required();
    sim_cont->add_option("--alpha", sc_alpha, "clique-correlated seeding probability");
    sim_cont->add_option("--n", sc_n);
    sim_cont->add_option("--replicas", sc_replicas);
    sim_cont->add_option("--seed", sc_seed);
    sim_cont->add_option("--policy", sc_policy);
    sim_cont->add_option("--out", sc_out, "CSV output (default stdout)");
    sim_cont->callback([&] {
        const auto p = parse_dist(sc_spec);
        const auto policy = parse_policy(sc_policy);
        const auto run = [&](std::uint64_t seed) -> MetricMap {
            Rng split(seed);
            const auto seq = sample_degree_sequence(p, sc_n, split.next_u64());
            const auto base = configuration_match(seq, split.next_u64(), policy);
            const auto g = clique_substitute(base, CliqueProfile::constant(sc_gamma), split.next_u64());
            std::uint32_t max_deg = 0;
            for (std::uint32_t v = 0; v < g.n_vertices(); ++v) max_deg = std::max(max_deg, g.degree(v));
            const auto t = ThresholdDistribution::contagion(sc_q, max_deg);
            const auto assignment = assign_thresholds(g, t, split.next_u64());
            MetricMap metrics;
            if (sc_alpha) {
                const auto seeds =
                    seed_clique_correlated(g, ActivationProfile::constant(*sc_alpha), split.next_u64());
                const auto res = run_threshold(g, assignment, seeds);
                metrics["active_fraction"] = static_cast<double>(res.final_active_count) / g.n_vertices();
            } else {
                const auto pivots = pivotal_set(g, assignment);
                metrics["pivotal_fraction"] = static_cast<double>(pivots.size()) / g.n_vertices();
                if (pivots.empty()) {
                    metrics["cascade_fraction"] = 0.0;
                } else {
                    const std::uint32_t u = pivots[split.uniform_below(pivots.size())];
                    const auto res = run_threshold(g, assignment, seed_single(u));
                    metrics["cascade_fraction"] = static_cast<double>(res.final_active_count) / g.n_vertices();
                }
            }
            return metrics;
        };
        const auto aggregates = monte_carlo(sc_replicas, sc_seed, run);
        OutStream out(sc_out);
        stamp_stream(out.get(), "simulate contagion",
                     "dist=" + sc_spec + " gamma=" + fmt_double(sc_gamma) + " q=" + fmt_double(sc_q) +
                         " n=" + std::to_string(sc_n) + " policy=" + sc_policy,
                     sc_seed);
        out.get() << "metric,mean,std,ci_lo,ci_hi,replicas,base_seed\n";
        for (const auto& [name, agg] : aggregates) {
            out.get() << name << ',' << fmt_double(agg.mean) << ',' << fmt_double(agg.stddev) << ','
                      << fmt_double(agg.ci_lo) << ',' << fmt_double(agg.ci_hi) << ',' << agg.replicas << ','
                      << sc_seed << "\n";
        }
    });

    // ---- experiment ----
    auto* cmd_exp = app.add_subcommand("experiment", "figure-reproduction CSV bundles");
    std::string exp_name, exp_dir = ".";
    ExperimentOptions exp_opts;
    cmd_exp->add_option("--name", exp_name, "experiment name or 'all'")->required();
    cmd_exp->add_option("--out-dir", exp_dir, "output directory");
    cmd_exp->add_flag("--simulate", exp_opts.simulate, "add Monte Carlo overlay columns");
    cmd_exp->add_option("--n", exp_opts.n, "graph size for overlays");
    cmd_exp->add_option("--replicas", exp_opts.replicas, "replicas per overlay point");
    cmd_exp->add_option("--seed", exp_opts.base_seed, "base seed for overlays");
    cmd_exp->set_config("--config", "", "key=value config file; flags override");
    cmd_exp->callback([&] {
        exp_opts.out_dir = exp_dir;
        for (const auto& f : run_experiment(exp_name, exp_opts)) std::cerr << "wrote " << f << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // validation error
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const clustnet::parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const clustnet::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
