#pragma once

#include <vector>

#include "clustnet/dist.hpp"
#include "clustnet/gilbert.hpp"
#include "clustnet/model.hpp"

namespace clustnet {

/// Degree law of the graph obtained by percolating clique-internal edges and
/// projecting fragments back onto the original vertex set:
///   rho_k   = p_k (1-gamma_k) + sum_{d>=k} (d/k) f(d,k,pi) p_d gamma_d
///   sigma_k = p_k (1-gamma_k) + sum_{d>=k} d     f(d,k,pi) p_d gamma_d
///   rho = sum_k rho_k,  mu = sum_k k rho_k / rho.
/// rho_0 covers kept degree-0 vertices (p_0 (1-gamma_0)), so rho is the
/// vertex-count ratio of the projected graph. p'_k = rho_k / rho.
struct DerivedLaw {
    double pi = 0.0;
    std::vector<double> rho_k;
    std::vector<double> sigma_k;
    double rho = 0.0;
    double mu = 0.0;

    std::vector<double> p_prime() const;
};

DerivedLaw derived_law(const DegreeDistribution& p, const CliqueProfile& gamma, double pi);

struct PiCResult {
    double value = 1.0;  // diffusion threshold; 1.0 when flagged infinite
    bool finite = true;  // false: no pi in [0,1] sustains a giant
};

/// Diffusion threshold: the pi solving pi * E[K(D*+1, pi, gamma) - 1] = 1,
/// by bisection (the map is increasing in pi).
PiCResult diffusion_pi_c(const DegreeDistribution& p, const CliqueProfile& gamma);

/// Offspring mean pi * E[K(D*+1, pi, gamma) - 1] of the branching-process
/// approximation; equals 1 at pi = pi_c.
double diffusion_offspring_mean(const DegreeDistribution& p, const CliqueProfile& gamma, double pi);

/// Debug aid: evaluates the offspring mean on a pi grid and reports whether it
/// is non-decreasing (the bisection assumes it is).
bool diffusion_phi_is_monotone(const DegreeDistribution& p, const CliqueProfile& gamma,
                               unsigned grid_points = 101);

struct ZetaResult {
    double zeta = 1.0;        // largest fixed point in [0,1); 1.0 = none (subcritical)
    bool interior = false;    // true if a root in [0,1) was found
    bool regularity_ok = true;
};

/// Largest z in [0,1) with mu z (1-pi+pi z) = h(z),
/// h(z) = sum_s s (rho_s/rho) (1-pi+pi z)^s.
ZetaResult diffusion_zeta(const DegreeDistribution& p, const CliqueProfile& gamma, double pi);

/// Same fixed point through the two-stage sqrt(pi) route used in the proofs:
/// solve g'(1-sqrt(pi)+sqrt(pi) xi) = mu (1-1/sqrt(pi)+xi/sqrt(pi)) for the
/// largest xi in [0,1), then map zeta = 1-1/sqrt(pi)+xi/sqrt(pi). Agrees with
/// diffusion_zeta; exposed so the two routes can be checked against each other.
ZetaResult diffusion_zeta_two_stage(const DegreeDistribution& p, const CliqueProfile& gamma, double pi);

struct DiffusionReport {
    double pi = 0.0;
    double pi_c = 1.0;
    bool pi_c_finite = true;
    double zeta = 1.0;
    double giant_fraction = 0.0; // L(zeta)
    bool regularity_ok = true;
    bool supercritical = false;
};

/// Full diffusion report: threshold, fixed point, giant-component fraction
/// L(zeta) = sum_s (sigma_s/gamma~) [1 - (1-pi+pi zeta)^s].
DiffusionReport diffusion_giant_fraction(const DegreeDistribution& p, const CliqueProfile& gamma, double pi);

struct ActivationResult {
    double zeta = 1.0;
    double fraction = 0.0;
    bool regularity_ok = true;
};

/// Final active fraction of the diffusion seeded per-vertex with probability
/// alpha_d (degree based). alpha = 0 recovers diffusion_giant_fraction.
ActivationResult diffusion_activation_fraction(const DegreeDistribution& p, const CliqueProfile& gamma,
                                               double pi, const ActivationProfile& alpha);

} // namespace clustnet
