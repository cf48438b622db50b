#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clustnet/experiments.hpp"
#include "clustnet/gilbert.hpp"
#include "clustnet/graph.hpp"
#include "clustnet/percolation.hpp"
#include "clustnet/rng.hpp"
#include "clustnet/sim.hpp"
#include "clustnet/threshold.hpp"
#include "clustnet/tuner.hpp"

namespace py = pybind11;
using namespace clustnet;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Clustered random graphs: generation, cascade analytics, Monte Carlo validation";
    m.attr("__version__") = kToolVersion;

    py::register_exception<parameter_error>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<numeric_error>(m, "NumericError", PyExc_RuntimeError);

    // ---- distributions ----
    py::class_<DegreeDistribution>(m, "DegreeDistribution")
        .def_static("from_pmf", &DegreeDistribution::from_pmf, py::arg("probs"),
                    py::arg("tail_mass_dropped") = 0.0)
        .def_static("regular", &DegreeDistribution::regular, py::arg("d"))
        .def_static("power_law_cutoff", &DegreeDistribution::power_law_cutoff, py::arg("tau"),
                    py::arg("kappa"), py::arg("r_max"))
        .def_static("poisson_shifted", &DegreeDistribution::poisson_shifted, py::arg("lam"), py::arg("r_max"))
        .def_static("poisson", &DegreeDistribution::poisson, py::arg("lam"), py::arg("r_max"))
        .def("__call__", &DegreeDistribution::operator(), py::arg("r"))
        .def_property_readonly("support_max", &DegreeDistribution::support_max)
        .def_property_readonly("pmf", &DegreeDistribution::pmf)
        .def_property_readonly("tail_mass_dropped", &DegreeDistribution::tail_mass_dropped)
        .def("mean", &DegreeDistribution::mean)
        .def("factorial_moment", &DegreeDistribution::factorial_moment, py::arg("k"))
        .def("to_table", &DegreeDistribution::to_table)
        .def_static("load", &DegreeDistribution::load, py::arg("path"))
        .def("save", &DegreeDistribution::save, py::arg("path"));

    py::class_<SizeBiasedDistribution>(m, "SizeBiasedDistribution")
        .def("__call__", &SizeBiasedDistribution::operator(), py::arg("r"))
        .def_property_readonly("pmf", &SizeBiasedDistribution::pmf);
    m.def("size_biased", &size_biased, py::arg("dist"));
    m.def("binomial_pmf", &binomial_pmf, py::arg("s"), py::arg("r"), py::arg("p"));

    py::class_<CliqueProfile>(m, "CliqueProfile")
        .def_static("constant", &CliqueProfile::constant, py::arg("c"))
        .def_static("from_values", &CliqueProfile::from_values, py::arg("values"), py::arg("fallback") = 0.0)
        .def("__call__", &CliqueProfile::operator(), py::arg("r"));
    py::class_<ActivationProfile>(m, "ActivationProfile")
        .def_static("constant", &ActivationProfile::constant, py::arg("a"))
        .def_static("from_values", &ActivationProfile::from_values, py::arg("values"),
                    py::arg("fallback") = 0.0)
        .def("__call__", &ActivationProfile::operator(), py::arg("d"));

    m.def("gamma_tilde", &gamma_tilde, py::arg("p"), py::arg("gamma"));
    m.def("degree_law_after_substitution", &degree_law_after_substitution, py::arg("p"), py::arg("gamma"));
    m.def("clustering_global", &clustering_global, py::arg("p"), py::arg("gamma"));
    m.def("clustering_biased", &clustering_biased, py::arg("p"), py::arg("gamma"));

    // ---- tuner ----
    py::class_<TuneResult>(m, "TuneResult")
        .def_readonly("gamma", &TuneResult::gamma)
        .def_readonly("lambda_", &TuneResult::lambda)
        .def_readonly("p", &TuneResult::p)
        .def_readonly("achieved_c", &TuneResult::achieved_c);
    m.def("c_max", &c_max, py::arg("p_tilde"));
    m.def("c_of_gamma", &c_of_gamma, py::arg("p_tilde"), py::arg("gamma"));
    m.def("c2_max", &c2_max, py::arg("p_tilde"));
    m.def("c2_of_gamma", &c2_of_gamma, py::arg("p_tilde"), py::arg("gamma"));
    m.def("tune", &tune, py::arg("p_tilde"), py::arg("target_c"));

    // ---- percolation analytics ----
    py::class_<GilbertTable>(m, "GilbertTable")
        .def(py::init<unsigned, double>(), py::arg("d_max"), py::arg("pi"))
        .def("__call__", &GilbertTable::operator(), py::arg("d"), py::arg("k"))
        .def_property_readonly("d_max", &GilbertTable::d_max)
        .def_property_readonly("pi", &GilbertTable::pi)
        .def("mean_component_size", &GilbertTable::mean_component_size, py::arg("d"));
    m.def("k_mixture", &k_mixture, py::arg("table"), py::arg("d"), py::arg("gamma_d"));

    py::class_<DerivedLaw>(m, "DerivedLaw")
        .def_readonly("pi", &DerivedLaw::pi)
        .def_readonly("rho_k", &DerivedLaw::rho_k)
        .def_readonly("sigma_k", &DerivedLaw::sigma_k)
        .def_readonly("rho", &DerivedLaw::rho)
        .def_readonly("mu", &DerivedLaw::mu)
        .def("p_prime", &DerivedLaw::p_prime);
    m.def("derived_law", &derived_law, py::arg("p"), py::arg("gamma"), py::arg("pi"));

    py::class_<PiCResult>(m, "PiCResult")
        .def_readonly("value", &PiCResult::value)
        .def_readonly("finite", &PiCResult::finite);
    m.def("diffusion_pi_c", &diffusion_pi_c, py::arg("p"), py::arg("gamma"));
    m.def("diffusion_offspring_mean", &diffusion_offspring_mean, py::arg("p"), py::arg("gamma"),
          py::arg("pi"));

    py::class_<ZetaResult>(m, "ZetaResult")
        .def_readonly("zeta", &ZetaResult::zeta)
        .def_readonly("interior", &ZetaResult::interior)
        .def_readonly("regularity_ok", &ZetaResult::regularity_ok);
    m.def("diffusion_zeta", &diffusion_zeta, py::arg("p"), py::arg("gamma"), py::arg("pi"));
    m.def("diffusion_zeta_two_stage", &diffusion_zeta_two_stage, py::arg("p"), py::arg("gamma"),
          py::arg("pi"));

    py::class_<DiffusionReport>(m, "DiffusionReport")
        .def_readonly("pi", &DiffusionReport::pi)
        .def_readonly("pi_c", &DiffusionReport::pi_c)
        .def_readonly("pi_c_finite", &DiffusionReport::pi_c_finite)
        .def_readonly("zeta", &DiffusionReport::zeta)
        .def_readonly("giant_fraction", &DiffusionReport::giant_fraction)
        .def_readonly("regularity_ok", &DiffusionReport::regularity_ok)
        .def_readonly("supercritical", &DiffusionReport::supercritical);
    m.def("diffusion_giant_fraction", &diffusion_giant_fraction, py::arg("p"), py::arg("gamma"),
          py::arg("pi"));

    py::class_<ActivationResult>(m, "ActivationResult")
        .def_readonly("zeta", &ActivationResult::zeta)
        .def_readonly("fraction", &ActivationResult::fraction)
        .def_readonly("regularity_ok", &ActivationResult::regularity_ok);
    m.def("diffusion_activation_fraction", &diffusion_activation_fraction, py::arg("p"), py::arg("gamma"),
          py::arg("pi"), py::arg("alpha"));

    // ---- threshold / contagion analytics ----
    py::class_<ThresholdDistribution>(m, "ThresholdDistribution")
        .def_static("from_rows", &ThresholdDistribution::from_rows, py::arg("rows"))
        .def_static("contagion", &ThresholdDistribution::contagion, py::arg("q"), py::arg("s_max"))
        .def_static("constant_threshold", &ThresholdDistribution::constant_threshold, py::arg("k"),
                    py::arg("s_max"))
        .def_static("all_zero", &ThresholdDistribution::all_zero, py::arg("s_max"))
        .def("__call__", &ThresholdDistribution::operator(), py::arg("s"), py::arg("l"))
        .def_property_readonly("s_max", &ThresholdDistribution::s_max)
        .def("row", &ThresholdDistribution::row, py::arg("s"));
    m.def("threshold_prime", &threshold_prime, py::arg("t"), py::arg("gamma"));

    py::class_<CascadeCondition>(m, "CascadeCondition")
        .def_readonly("holds", &CascadeCondition::holds)
        .def_readonly("critical", &CascadeCondition::critical)
        .def_readonly("lhs", &CascadeCondition::lhs)
        .def_readonly("rhs", &CascadeCondition::rhs);
    m.def("cascade_condition", &cascade_condition, py::arg("p"), py::arg("t"));

    py::class_<QcResult>(m, "QcResult")
        .def_readonly("value", &QcResult::value)
        .def_readonly("possible", &QcResult::possible);
    m.def("contagion_qc", &contagion_qc, py::arg("p"));

    py::class_<XiResult>(m, "XiResult")
        .def_readonly("value", &XiResult::value)
        .def_readonly("degenerate", &XiResult::degenerate);
    m.def("xi_solve", &xi_solve, py::arg("p"), py::arg("t"));
    m.def("pivotal_fraction", &pivotal_fraction, py::arg("p"), py::arg("gamma"), py::arg("t"));

    py::class_<CascadeSize>(m, "CascadeSize")
        .def_readonly("zeta", &CascadeSize::zeta)
        .def_readonly("fraction", &CascadeSize::fraction)
        .def_readonly("regularity_ok", &CascadeSize::regularity_ok);
    m.def("contagion_zeta_L", &contagion_zeta_L, py::arg("p"), py::arg("gamma"), py::arg("t"));
    m.def("activation_cascade_fraction", &activation_cascade_fraction, py::arg("p"), py::arg("gamma"),
          py::arg("t"), py::arg("alpha"));

    py::class_<ContagionReport>(m, "ContagionReport")
        .def_readonly("cascade_possible", &ContagionReport::cascade_possible)
        .def_readonly("critical", &ContagionReport::critical)
        .def_readonly("cascade_lhs", &ContagionReport::cascade_lhs)
        .def_readonly("cascade_rhs", &ContagionReport::cascade_rhs)
        .def_readonly("q_c", &ContagionReport::q_c)
        .def_readonly("q_c_possible", &ContagionReport::q_c_possible)
        .def_readonly("xi", &ContagionReport::xi)
        .def_readonly("xi_degenerate", &ContagionReport::xi_degenerate)
        .def_readonly("pivotal_fraction", &ContagionReport::pivotal_fraction)
        .def_readonly("zeta", &ContagionReport::zeta)
        .def_readonly("cascade_fraction", &ContagionReport::cascade_fraction)
        .def_readonly("regularity_ok", &ContagionReport::regularity_ok);
    m.def("threshold_report", &threshold_report, py::arg("p"), py::arg("gamma"), py::arg("t"));
    m.def("contagion_report", &contagion_report, py::arg("p"), py::arg("gamma"), py::arg("q"));

    // ---- graphs ----
    py::enum_<SimplePolicy>(m, "SimplePolicy")
        .value("multigraph", SimplePolicy::multigraph)
        .value("erase", SimplePolicy::erase)
        .value("reject", SimplePolicy::reject);
    py::enum_<EdgeKind>(m, "EdgeKind")
        .value("external", EdgeKind::external)
        .value("internal", EdgeKind::internal);
    py::class_<Edge>(m, "Edge")
        .def_readonly("u", &Edge::u)
        .def_readonly("v", &Edge::v)
        .def_readonly("kind", &Edge::kind);

    py::class_<DegreeSequence>(m, "DegreeSequence")
        .def_readonly("degrees", &DegreeSequence::degrees)
        .def("total", &DegreeSequence::total);
    m.def("sample_degree_sequence", &sample_degree_sequence, py::arg("dist"), py::arg("n"), py::arg("seed"));

    py::class_<GraphInstance>(m, "GraphInstance")
        .def_property_readonly("n_vertices", &GraphInstance::n_vertices)
        .def_property_readonly("n_edges", &GraphInstance::n_edges)
        .def("degree", &GraphInstance::degree, py::arg("v"))
        .def("neighbors",
             [](const GraphInstance& g, std::uint32_t v) {
                 return std::vector<std::uint32_t>(g.neighbors_begin(v), g.neighbors_end(v));
             })
        .def("parent", &GraphInstance::parent, py::arg("v"))
        .def("is_clique_member", &GraphInstance::is_clique_member, py::arg("v"))
        .def_property_readonly("n_parents", &GraphInstance::n_parents)
        .def("parent_substituted", &GraphInstance::parent_substituted, py::arg("i"))
        .def("parent_degree", &GraphInstance::parent_degree, py::arg("i"))
        .def_property_readonly("is_simple", &GraphInstance::is_simple)
        .def_property_readonly("edges", &GraphInstance::edges);
    m.def("configuration_match", &configuration_match, py::arg("seq"), py::arg("seed"),
          py::arg("policy") = SimplePolicy::reject, py::arg("max_tries") = 1000);
    m.def("clique_substitute", &clique_substitute, py::arg("g"), py::arg("profile"), py::arg("seed"));

    py::class_<ProjectionResult>(m, "ProjectionResult")
        .def_readonly("graph", &ProjectionResult::graph)
        .def_readonly("vertex_map", &ProjectionResult::vertex_map)
        .def_readonly("vertex_of_parent", &ProjectionResult::vertex_of_parent);
    m.def("project", &project, py::arg("g"), py::arg("sub_vertices"), py::arg("sub_edge_ids"));
    m.def("project_full", &project_full, py::arg("g"));

    m.def("empirical_degree_hist", &empirical_degree_hist, py::arg("g"));
    py::class_<ClusteringEstimate>(m, "ClusteringEstimate")
        .def_readonly("c", &ClusteringEstimate::c)
        .def_readonly("c2", &ClusteringEstimate::c2);
    m.def("empirical_clustering", &empirical_clustering, py::arg("g"));
    m.def("save_graph", &save_graph, py::arg("g"), py::arg("path"));
    m.def("load_graph", &load_graph, py::arg("path"));

    // ---- simulation ----
    py::class_<ThresholdAssignment>(m, "ThresholdAssignment").def_readonly("k", &ThresholdAssignment::k);
    py::class_<SeedSet>(m, "SeedSet")
        .def_readonly("active", &SeedSet::active);
    m.def("seed_single", &seed_single, py::arg("v"));
    m.def("seed_all", &seed_all, py::arg("g"));
    m.def("seed_degree_independent", &seed_degree_independent, py::arg("g"), py::arg("alpha"),
          py::arg("seed"));
    m.def("seed_clique_correlated", &seed_clique_correlated, py::arg("g"), py::arg("alpha"), py::arg("seed"));

    py::class_<PercolationOutcome>(m, "PercolationOutcome")
        .def_readonly("largest", &PercolationOutcome::largest)
        .def_readonly("second", &PercolationOutcome::second)
        .def_readonly("component", &PercolationOutcome::component);
    m.def("bond_percolate_components", &bond_percolate_components, py::arg("g"), py::arg("pi"),
          py::arg("seed"));

    py::class_<RunResult>(m, "RunResult")
        .def_readonly("final_active_count", &RunResult::final_active_count)
        .def_readonly("largest_component", &RunResult::largest_component)
        .def_readonly("per_degree_active", &RunResult::per_degree_active)
        .def_readonly("replica_seed", &RunResult::replica_seed);
    m.def("run_diffusion", &run_diffusion, py::arg("g"), py::arg("pi"), py::arg("seeds"), py::arg("seed"));
    m.def("assign_thresholds", &assign_thresholds, py::arg("g"), py::arg("t"), py::arg("seed"));
    m.def("run_threshold", &run_threshold, py::arg("g"), py::arg("assignment"), py::arg("seeds"));
    m.def("pivotal_set", &pivotal_set, py::arg("g"), py::arg("assignment"));
    m.def("two_stage_internal_percolation_census", &two_stage_internal_percolation_census, py::arg("g"),
          py::arg("pi"), py::arg("seed"));

    py::class_<CouplingOutcome>(m, "CouplingOutcome")
        .def_readonly("ran", &CouplingOutcome::ran)
        .def_readonly("equal", &CouplingOutcome::equal);
    m.def("coupling_check", &coupling_check, py::arg("g"), py::arg("t"), py::arg("seed"));

    py::class_<Aggregate>(m, "Aggregate")
        .def_readonly("mean", &Aggregate::mean)
        .def_readonly("stddev", &Aggregate::stddev)
        .def_readonly("ci_lo", &Aggregate::ci_lo)
        .def_readonly("ci_hi", &Aggregate::ci_hi)
        .def_readonly("replicas", &Aggregate::replicas);
    m.def("monte_carlo", &monte_carlo, py::arg("replicas"), py::arg("base_seed"), py::arg("run"));

    m.def("split_seed", &split_seed, py::arg("base"), py::arg("index"));

    // ---- experiments ----
    py::class_<ExperimentOptions>(m, "ExperimentOptions")
        .def(py::init<>())
        .def_readwrite("out_dir", &ExperimentOptions::out_dir)
        .def_readwrite("simulate", &ExperimentOptions::simulate)
        .def_readwrite("n", &ExperimentOptions::n)
        .def_readwrite("replicas", &ExperimentOptions::replicas)
        .def_readwrite("base_seed", &ExperimentOptions::base_seed);
    m.def("run_experiment", &run_experiment, py::arg("name"), py::arg("opts"));
    m.def("experiment_names", &experiment_names);
}
