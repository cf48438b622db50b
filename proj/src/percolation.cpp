#include "clustnet/percolation.hpp"

#include <cmath>

#include "clustnet/errors.hpp"
#include "clustnet/fixed_point.hpp"

namespace clustnet {

std::vector<double> DerivedLaw::p_prime() const {
    std::vector<double> out(rho_k.size(), 0.0);
    for (std::size_t k = 0; k < rho_k.size(); ++k) out[k] = rho_k[k] / rho;
    return out;
}

DerivedLaw derived_law(const DegreeDistribution& p, const CliqueProfile& gamma, double pi) {
    const unsigned d_max = p.support_max();
    const GilbertTable table(std::max(1u, d_max), pi);
    DerivedLaw law;
    law.pi = pi;
    law.rho_k.assign(d_max + 1, 0.0);
    law.sigma_k.assign(d_max + 1, 0.0);
    law.rho_k[0] = p(0) * (1.0 - gamma(0));
    law.sigma_k[0] = law.rho_k[0];
    for (unsigned k = 1; k <= d_max; ++k) {
        const double keep = p(k) * (1.0 - gamma(k));
        double frag_over_k = 0.0;
        double frag = 0.0;
        for (unsigned d = k; d <= d_max; ++d) {
            const double w = static_cast<double>(d) * table(d, k) * p(d) * gamma(d);
            frag += w;
            frag_over_k += w / static_cast<double>(k);
        }
        law.rho_k[k] = keep + frag_over_k;
        law.sigma_k[k] = keep + frag;
    }
    double rho = 0.0, first = 0.0;
    for (unsigned k = 0; k <= d_max; ++k) {
        rho += law.rho_k[k];
        first += static_cast<double>(k) * law.rho_k[k];
    }
    law.rho = rho;
    law.mu = first / rho;
    return law;
}

double diffusion_offspring_mean(const DegreeDistribution& p, const CliqueProfile& gamma, double pi) {
    const double lambda = p.mean();
    const unsigned d_max = p.support_max();
    const GilbertTable table(std::max(1u, d_max), pi);
    double mean_excess = 0.0; // E[K(D*+1, pi, gamma) - 1]
    for (unsigned r = 1; r <= d_max; ++r) {
        if (p(r) == 0.0) continue;
        const double g = gamma(r);
        const double ek = (1.0 - g) * static_cast<double>(r) + g * table.mean_component_size(r);
        mean_excess += static_cast<double>(r) * p(r) / lambda * (ek - 1.0);
    }
    return pi * mean_excess;
}

PiCResult diffusion_pi_c(const DegreeDistribution& p, const CliqueProfile& gamma) {
    if (p.factorial_moment(2) <= 0.0) return {1.0, false};
    const auto phi = [&](double pi) { return diffusion_offspring_mean(p, gamma, pi) - 1.0; };
    if (phi(1.0) <= 0.0) return {1.0, false};
    double lo = 0.0, hi = 1.0; // phi(0) = -1
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (phi(mid) < 0.0) lo = mid;
        else hi = mid;
    }
    return {0.5 * (lo + hi), true};
}

bool diffusion_phi_is_monotone(const DegreeDistribution& p, const CliqueProfile& gamma,
                               unsigned grid_points) {
    double prev = 0.0;
    for (unsigned i = 0; i < grid_points; ++i) {
        const double pi = static_cast<double>(i) / (grid_points - 1);
        const double v = diffusion_offspring_mean(p, gamma, pi);
        if (v < prev - 1e-12) return false;
        prev = v;
    }
    return true;
}

namespace {

ZetaResult zeta_from_coeffs(const std::vector<double>& hcoef, double mu, double pi) {
    // g(z) = mu z u - sum_s hcoef[s] u^s, u = 1 - pi + pi z
    const auto g = [&](double z) {
        const double u = 1.0 - pi + pi * z;
        double h = 0.0, us = 1.0;
        for (std::size_t s = 1; s < hcoef.size(); ++s) {
            us *= u;
            h += hcoef[s] * us;
        }
        return mu * z * u - h;
    };
    const auto scan = largest_root_below_one(g, 10000, 1e-12 * std::max(1.0, mu));
    ZetaResult out;
    if (scan.root) {
        out.zeta = *scan.root;
        out.interior = true;
        out.regularity_ok = scan.regularity_ok;
    } else {
        out.zeta = 1.0; // only the trivial fixed point: subcritical, L(1) = 0
        out.interior = false;
        out.regularity_ok = true;
    }
    return out;
}

} // namespace

ZetaResult diffusion_zeta(const DegreeDistribution& p, const CliqueProfile& gamma, double pi) {
    const DerivedLaw law = derived_law(p, gamma, pi);
    std::vector<double> hcoef(law.rho_k.size(), 0.0);
    for (std::size_t s = 1; s < law.rho_k.size(); ++s) {
        hcoef[s] = static_cast<double>(s) * law.rho_k[s] / law.rho;
    }
    return zeta_from_coeffs(hcoef, law.mu, pi);
}

ZetaResult diffusion_zeta_two_stage(const DegreeDistribution& p, const CliqueProfile& gamma, double pi) {
    if (!(pi > 0.0)) throw parameter_error("two-stage route needs pi > 0");
    const DerivedLaw law = derived_law(p, gamma, pi);
    const auto pp = law.p_prime();
    const double sqrt_pi = std::sqrt(pi);
    const double inv = 1.0 / sqrt_pi;
    const double mu = law.mu;
    // g'(x) = sum_k k p'_k x^(k-1)
    const auto gprime = [&](double x) {
        double acc = 0.0, xp = 1.0;
        for (std::size_t k = 1; k < pp.size(); ++k) {
            acc += static_cast<double>(k) * pp[k] * xp;
            xp *= x;
        }
        return acc;
    };
    const auto eq = [&](double xi) {
        const double x = 1.0 - sqrt_pi + sqrt_pi * xi;
        return mu * (1.0 - inv + inv * xi) - gprime(x);
    };
    const auto scan = largest_root_below_one(eq, 10000, 1e-12 * std::max(1.0, mu));
    ZetaResult out;
    if (scan.root) {
        const double zeta = 1.0 - inv + inv * *scan.root;
        out.zeta = std::min(1.0, std::max(0.0, zeta));
        out.interior = true;
        out.regularity_ok = scan.regularity_ok;
    }
    return out;
}

DiffusionReport diffusion_giant_fraction(const DegreeDistribution& p, const CliqueProfile& gamma, double pi) {
    DiffusionReport report;
    report.pi = pi;
    const auto pc = diffusion_pi_c(p, gamma);
    report.pi_c = pc.value;
    report.pi_c_finite = pc.finite;
    report.supercritical = pc.finite && pi > pc.value;

    const DerivedLaw law = derived_law(p, gamma, pi);
    const auto zr = diffusion_zeta(p, gamma, pi);
    report.zeta = zr.zeta;
    report.regularity_ok = zr.regularity_ok;

    const double gt = gamma_tilde(p, gamma);
    const double u = 1.0 - pi + pi * report.zeta;
    double L = 0.0, us = 1.0;
    for (std::size_t s = 1; s < law.sigma_k.size(); ++s) {
        us *= u;
        L += law.sigma_k[s] * (1.0 - us);
    }
    report.giant_fraction = L / gt;
    return report;
}

ActivationResult diffusion_activation_fraction(const DegreeDistribution& p, const CliqueProfile& gamma,
                                               double pi, const ActivationProfile& alpha) {
    const unsigned d_max = p.support_max();
    const GilbertTable table(std::max(1u, d_max), pi);
    const DerivedLaw law = derived_law(p, gamma, pi);

    // A_s = sum_{d>=s} d f(d,s,pi) gamma_d p_d (1-alpha_d)^s  (seed-free fragments)
    // B_s = sum_{d>=s} d f(d,s,pi) gamma_d p_d
    std::vector<double> A(d_max + 1, 0.0), B(d_max + 1, 0.0);
    for (unsigned d = 1; d <= d_max; ++d) {
        const double w = static_cast<double>(d) * gamma(d) * p(d);
        if (w == 0.0) continue;
        const double base = 1.0 - alpha(d);
        double base_s = 1.0;
        for (unsigned s = 1; s <= d; ++s) {
            base_s *= base;
            A[s] += w * table(d, s) * base_s;
            B[s] += w * table(d, s);
        }
    }
    std::vector<double> hcoef(d_max + 1, 0.0);
    for (unsigned s = 1; s <= d_max; ++s) {
        hcoef[s] = (static_cast<double>(s) * (1.0 - gamma(s)) * p(s) * (1.0 - alpha(s)) + A[s]) / law.rho;
    }
    const auto zr = zeta_from_coeffs(hcoef, law.mu, pi);

    const double gt = gamma_tilde(p, gamma);
    const double u = 1.0 - pi + pi * zr.zeta;
    double L = p(0) * (1.0 - gamma(0)) * alpha(0);
    double us = 1.0;
    for (unsigned s = 1; s <= d_max; ++s) {
        us *= u;
        L += (1.0 - gamma(s)) * p(s) * (1.0 - (1.0 - alpha(s)) * us);
        L += B[s] - A[s] * us;
    }
    ActivationResult out;
    out.zeta = zr.zeta;
    out.fraction = L / gt;
    out.regularity_ok = zr.regularity_ok;
    return out;
}

} // namespace clustnet
