#pragma once

#include <vector>

#include "clustnet/dist.hpp"

namespace clustnet {

/// Per-degree clique substitution probabilities gamma_r in [0,1].
class CliqueProfile {
public:
    /// gamma_r = c for every degree.
    static CliqueProfile constant(double c);

    /// Explicit values per degree; degrees past the table use `fallback`.
    static CliqueProfile from_values(std::vector<double> values, double fallback = 0.0);

    double operator()(std::size_t r) const {
        return r < values_.size() ? values_[r] : fallback_;
    }

private:
    CliqueProfile(std::vector<double> values, double fallback)
        : values_(std::move(values)), fallback_(fallback) {}
    std::vector<double> values_;
    double fallback_ = 0.0;
};

/// Per-degree seed-activation probabilities alpha_d in [0,1].
class ActivationProfile {
public:
    static ActivationProfile constant(double a);
    static ActivationProfile from_values(std::vector<double> values, double fallback = 0.0);

    double operator()(std::size_t d) const {
        return d < values_.size() ? values_[d] : fallback_;
    }

private:
    ActivationProfile(std::vector<double> values, double fallback)
        : values_(std::move(values)), fallback_(fallback) {}
    std::vector<double> values_;
    double fallback_ = 0.0;
};

/// Vertex-count inflation of clique substitution:
/// gamma~ = sum_d [d gamma_d + (1 - gamma_d)] p_d.
double gamma_tilde(const DegreeDistribution& p, const CliqueProfile& gamma);

/// Asymptotic degree law of the substituted graph,
/// p~_r = [r gamma_r + (1 - gamma_r)] p_r / gamma~. Degrees are preserved per
/// vertex, only their frequencies shift.
DegreeDistribution degree_law_after_substitution(const DegreeDistribution& p, const CliqueProfile& gamma);

/// Asymptotic global clustering coefficient (transitivity) of the substituted
/// graph. Requires some mass on degrees >= 2.
double clustering_global(const DegreeDistribution& p, const CliqueProfile& gamma);

/// Asymptotic biased clustering coefficient (mean local coefficient, degree
/// <= 1 vertices count as zero).
double clustering_biased(const DegreeDistribution& p, const CliqueProfile& gamma);

} // namespace clustnet
