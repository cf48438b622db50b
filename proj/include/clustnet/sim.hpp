#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "clustnet/graph.hpp"
#include "clustnet/threshold.hpp"

namespace clustnet {

/// Per-vertex thresholds; one draw per parent, copied to clique members.
struct ThresholdAssignment {
    std::vector<std::uint32_t> k;
};

/// Realized initial active set. The three schemes differ in how the draw is
/// correlated: per-vertex (diffusion activation) vs per-clique (threshold
/// activation); keeping them as separate constructors prevents mixing them up.
struct SeedSet {
    enum class Scheme { single, degree_independent, clique_correlated };
    Scheme scheme = Scheme::single;
    std::vector<std::uint32_t> active;
};

SeedSet seed_single(std::uint32_t v);
SeedSet seed_all(const GraphInstance& g);
/// Each vertex independently with probability alpha_{deg(v)}.
SeedSet seed_degree_independent(const GraphInstance& g, const ActivationProfile& alpha, std::uint64_t seed);
/// One coin per parent with probability alpha_{d_parent}; a clique is seeded
/// atomically or not at all.
SeedSet seed_clique_correlated(const GraphInstance& g, const ActivationProfile& alpha, std::uint64_t seed);

struct PercolationOutcome {
    std::uint32_t largest = 0;
    std::uint32_t second = 0;
    std::vector<std::uint32_t> component; // root id per vertex
};

/// Keeps each edge independently with probability pi, then union-find.
PercolationOutcome bond_percolate_components(const GraphInstance& g, double pi, std::uint64_t seed);

struct RunResult {
    std::uint64_t final_active_count = 0;
    std::uint32_t largest_component = 0; // percolation runs only
    std::vector<std::uint64_t> per_degree_active;
    std::uint64_t replica_seed = 0;
};

/// Final state of the diffusion: percolate, then activate every component
/// containing a seed.
RunResult run_diffusion(const GraphInstance& g, double pi, const SeedSet& seeds, std::uint64_t seed);

/// One threshold draw per parent from its degree row; clique members inherit.
ThresholdAssignment assign_thresholds(const GraphInstance& g, const ThresholdDistribution& t,
                                      std::uint64_t seed);

/// Queue-driven symmetric threshold dynamics: v activates once strictly more
/// than k(v) of its neighbors are active. Deterministic in (g, k, seeds).
RunResult run_threshold(const GraphInstance& g, const ThresholdAssignment& assignment, const SeedSet& seeds);

/// Largest connected component of the zero-threshold induced subgraph
/// (sorted vertex ids; empty when no zero-threshold vertex exists).
std::vector<std::uint32_t> pivotal_set(const GraphInstance& g, const ThresholdAssignment& assignment);

/// Percolates clique-internal edges only and counts, per original clique size
/// d, the fragments of each size k.
std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t>
two_stage_internal_percolation_census(const GraphInstance& g, double pi, std::uint64_t seed);

struct CouplingOutcome {
    bool ran = false;   // false: no zero-threshold clique vertex to seed from
    bool equal = false; // projected active sets match exactly
};

/// Draws thresholds, seeds a random zero-threshold clique vertex u, runs the
/// epidemic on g and the coupled t'-epidemic on the projected graph with the
/// transformed per-parent thresholds, then compares the projected active sets.
CouplingOutcome coupling_check(const GraphInstance& g, const ThresholdDistribution& t, std::uint64_t seed);

/// Same with a fixed assignment and seed vertex (for hand-built gadgets).
CouplingOutcome coupling_check_with(const GraphInstance& g, const ThresholdAssignment& assignment,
                                    std::uint32_t u);

struct Aggregate {
    double mean = 0.0;
    double stddev = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::size_t replicas = 0;
};

using MetricMap = std::map<std::string, double>;

/// Runs `run` once per replica with seeds split off base_seed and aggregates
/// each metric (mean, sample std, normal 95% CI).
std::map<std::string, Aggregate> monte_carlo(std::size_t replicas, std::uint64_t base_seed,
                                             const std::function<MetricMap(std::uint64_t)>& run);

} // namespace clustnet
