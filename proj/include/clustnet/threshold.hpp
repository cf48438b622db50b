#pragma once

#include <optional>
#include <vector>

#include "clustnet/dist.hpp"
#include "clustnet/model.hpp"

namespace clustnet {

/// Row-stochastic threshold law: t(s, l) = P(threshold = l | degree = s),
/// 0 <= l <= s, for s = 0..s_max.
class ThresholdDistribution {
public:
    /// rows[s] must have s+1 non-negative entries summing to 1 (tol 1e-10).
    static ThresholdDistribution from_rows(std::vector<std::vector<double>> rows);

    /// Contagion specialization: point mass at l = floor(q s).
    static ThresholdDistribution contagion(double q, unsigned s_max);

    /// Constant threshold k for every vertex (bootstrap-percolation style);
    /// rows with s < k put the mass at l = s, which likewise never activates.
    static ThresholdDistribution constant_threshold(unsigned k, unsigned s_max);

    /// All thresholds zero.
    static ThresholdDistribution all_zero(unsigned s_max);

    double operator()(unsigned s, unsigned l) const { return rows_[s][l]; }
    unsigned s_max() const { return static_cast<unsigned>(rows_.size()) - 1; }
    const std::vector<double>& row(unsigned s) const { return rows_[s]; }

private:
    explicit ThresholdDistribution(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {}
    std::vector<std::vector<double>> rows_;
};

/// Threshold transform matching clique substitution: an epidemic with law t on
/// the substituted graph projects onto an epidemic with law t' on the original
/// graph (zero rows kept, positive thresholds inside cliques pushed to s).
ThresholdDistribution threshold_prime(const ThresholdDistribution& t, const CliqueProfile& gamma);

struct CascadeCondition {
    bool holds = false;    // strict inequality lhs > rhs
    bool critical = false; // |lhs - rhs| below tolerance: no prediction
    double lhs = 0.0;      // sum_r r(r-1) p_r t_{r0}
    double rhs = 0.0;      // sum_r r p_r
};

/// Eq. for cascade existence. Depends only on p and t, not on gamma.
CascadeCondition cascade_condition(const DegreeDistribution& p, const ThresholdDistribution& t);

struct QcResult {
    double value = 0.0;  // contagion threshold, 0 when flagged impossible
    bool possible = false;
};

/// Contagion threshold q_c = sup{ q : sum_{r < 1/q} r(r-1) p_r > sum_r r p_r }.
/// The condition is piecewise constant in q with breakpoints at reciprocals of
/// integers, so the sup is found combinatorially: q_c = 1/m* with
/// m* = min{ m : S(m) > lambda }, S(m) = sum_{r<=m} r(r-1) p_r.
QcResult contagion_qc(const DegreeDistribution& p);

struct XiResult {
    double value = 0.0;
    bool degenerate = false; // interior root merges with a boundary root
};

/// Unique xi in (0,1) with sum_d d p_d t_{d0} (1 - xi^(d-1)) = lambda (1 - xi),
/// given the cascade condition. Degenerate inputs (all relevant thresholds
/// zero with no degree-1 mass) collapse the root to 0 and are flagged.
XiResult xi_solve(const DegreeDistribution& p, const ThresholdDistribution& t);

/// Asymptotic fraction of pivotal players (largest zero-threshold component):
/// sum_d [d gamma_d + (1-gamma_d)] p_d t_{d0} (1 - xi^d) / gamma~.
double pivotal_fraction(const DegreeDistribution& p, const CliqueProfile& gamma,
                        const ThresholdDistribution& t);

struct CascadeSize {
    double zeta = 1.0;
    double fraction = 0.0; // L(zeta)
    bool regularity_ok = true;
};

/// Cascade-size fixed point for the symmetric threshold model:
/// zeta = sup{ z in [0,1) : lambda z^2 = h(z) }, L(zeta) the active fraction.
CascadeSize contagion_zeta_L(const DegreeDistribution& p, const CliqueProfile& gamma,
                             const ThresholdDistribution& t);

/// Variant with clique-correlated degree-based activation alpha; alpha = 0
/// recovers contagion_zeta_L.
CascadeSize activation_cascade_fraction(const DegreeDistribution& p, const CliqueProfile& gamma,
                                        const ThresholdDistribution& t, const ActivationProfile& alpha);

struct ContagionReport {
    bool cascade_possible = false;
    bool critical = false;
    double cascade_lhs = 0.0;
    double cascade_rhs = 0.0;
    std::optional<double> q_c;   // set for contagion runs only
    bool q_c_possible = false;
    double xi = 0.0;
    bool xi_degenerate = false;
    double pivotal_fraction = 0.0;
    double zeta = 1.0;
    double cascade_fraction = 0.0; // 0 when no cascade is possible
    bool regularity_ok = true;
};

/// Full report for an arbitrary threshold law. Fixed points are only evaluated
/// when the cascade condition holds; otherwise the theorem predicts o(n) and
/// the fractions are reported as zero.
ContagionReport threshold_report(const DegreeDistribution& p, const CliqueProfile& gamma,
                                 const ThresholdDistribution& t);

/// Contagion specialization with parameter q; fills q_c as well.
ContagionReport contagion_report(const DegreeDistribution& p, const CliqueProfile& gamma, double q);

} // namespace clustnet
