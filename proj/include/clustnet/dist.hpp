#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace clustnet {

/// Finite-support degree law (p_r)_{r=0..r_max}. Heavier-tailed families are
/// truncated at r_max and renormalized; the mass cut off is recorded so
/// downstream series evaluations know their truncation error.
class DegreeDistribution {
public:
    /// Normalizes `probs` (indexed by degree, degree 0 first). Entries must be
    /// non-negative with a positive sum and a positive mean.
    static DegreeDistribution from_pmf(std::vector<double> probs, double tail_mass_dropped = 0.0);

    /// Point mass at d >= 1.
    static DegreeDistribution regular(unsigned d);

    /// p_r = c * r^-tau * exp(-r/kappa) on 1..r_max, p_0 = 0.
    static DegreeDistribution power_law_cutoff(double tau, double kappa, unsigned r_max);

    /// Shifted Poisson: p_r = exp(-lambda) lambda^(r-1)/(r-1)! for r >= 1.
    /// Fails if the mass beyond r_max exceeds 1e-10.
    static DegreeDistribution poisson_shifted(double lambda, unsigned r_max);

    /// Plain Poisson with parameter lambda truncated at r_max (tail must be < 1e-10).
    static DegreeDistribution poisson(double lambda, unsigned r_max);

    double operator()(std::size_t r) const { return r < probs_.size() ? probs_[r] : 0.0; }
    unsigned support_max() const { return static_cast<unsigned>(probs_.size()) - 1; }
    const std::vector<double>& pmf() const { return probs_; }
    double tail_mass_dropped() const { return tail_mass_dropped_; }

    double mean() const;

    /// E[D(D-1)...(D-k+1)], k >= 1. factorial_moment(1) == mean() exactly.
    double factorial_moment(unsigned k) const;

    /// Text table "r p_r", degrees ascending, zero entries skipped.
    std::string to_table() const;
    static DegreeDistribution from_table(std::istream& in);
    static DegreeDistribution load(const std::string& path);
    void save(const std::string& path) const;

private:
    DegreeDistribution(std::vector<double> probs, double dropped)
        : probs_(std::move(probs)), tail_mass_dropped_(dropped) {}

    std::vector<double> probs_;
    double tail_mass_dropped_ = 0.0;
};

/// Law of D*: p*_{r-1} = r p_r / lambda (degree of the vertex reached by a
/// uniformly random half-edge, minus one).
class SizeBiasedDistribution {
public:
    explicit SizeBiasedDistribution(std::vector<double> probs) : probs_(std::move(probs)) {}
    double operator()(std::size_t r) const { return r < probs_.size() ? probs_[r] : 0.0; }
    unsigned support_max() const { return static_cast<unsigned>(probs_.size()) - 1; }
    const std::vector<double>& pmf() const { return probs_; }

private:
    std::vector<double> probs_;
};

SizeBiasedDistribution size_biased(const DegreeDistribution& dist);

/// P(Bi(s, p) = r), stable for large s (log-space with lgamma).
double binomial_pmf(unsigned s, unsigned r, double p);

} // namespace clustnet
