#include "clustnet/model.hpp"

#include "clustnet/errors.hpp"

namespace clustnet {

namespace {

void check_unit_interval(const std::vector<double>& values, double fallback, const char* what) {
    for (double v : values) {
        if (!(v >= 0.0 && v <= 1.0)) throw parameter_error(std::string(what) + " values must lie in [0,1]");
    }
    if (!(fallback >= 0.0 && fallback <= 1.0)) throw parameter_error(std::string(what) + " values must lie in [0,1]");
}

} // namespace

CliqueProfile CliqueProfile::constant(double c) {
    check_unit_interval({}, c, "clique profile");
    return CliqueProfile({}, c);
}

CliqueProfile CliqueProfile::from_values(std::vector<double> values, double fallback) {
    check_unit_interval(values, fallback, "clique profile");
    return CliqueProfile(std::move(values), fallback);
}

ActivationProfile ActivationProfile::constant(double a) {
    check_unit_interval({}, a, "activation profile");
    return ActivationProfile({}, a);
}

ActivationProfile ActivationProfile::from_values(std::vector<double> values, double fallback) {
    check_unit_interval(values, fallback, "activation profile");
    return ActivationProfile(std::move(values), fallback);
}

double gamma_tilde(const DegreeDistribution& p, const CliqueProfile& gamma) {
    double total = 0.0;
    for (unsigned d = 0; d <= p.support_max(); ++d) {
        const double g = gamma(d);
        total += (static_cast<double>(d) * g + 1.0 - g) * p(d);
    }
    return total;
}

DegreeDistribution degree_law_after_substitution(const DegreeDistribution& p, const CliqueProfile& gamma) {
    std::vector<double> probs(p.support_max() + 1, 0.0);
    for (unsigned r = 0; r <= p.support_max(); ++r) {
        const double g = gamma(r);
        probs[r] = (static_cast<double>(r) * g + 1.0 - g) * p(r);
    }
    return DegreeDistribution::from_pmf(std::move(probs), p.tail_mass_dropped());
}

double clustering_global(const DegreeDistribution& p, const CliqueProfile& gamma) {
    double num = 0.0;
    double den = 0.0;
    for (unsigned r = 2; r <= p.support_max(); ++r) {
        const double g = gamma(r);
        const double rr = static_cast<double>(r);
        num += rr * (rr - 1.0) * (rr - 2.0) * g * p(r);
        den += ((rr - 1.0) * g + 1.0) * rr * (rr - 1.0) * p(r);
    }
    if (den <= 0.0) throw parameter_error("clustering undefined: no mass on degrees >= 2");
    return num / den;
}

double clustering_biased(const DegreeDistribution& p, const CliqueProfile& gamma) {
    const double gt = gamma_tilde(p, gamma);
    double total = 0.0;
    for (unsigned r = 3; r <= p.support_max(); ++r) {
        total += p(r) * gamma(r) / gt * (static_cast<double>(r) - 2.0);
    }
    return total;
}

} // namespace clustnet
