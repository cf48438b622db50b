#include "clustnet/tuner.hpp"

#include <cmath>
#include <sstream>

#include "clustnet/errors.hpp"

namespace clustnet {

namespace {

void check_target(const DegreeDistribution& p_tilde) {
    if (p_tilde(0) > 0.0) {
        throw parameter_error("target degree law must have no mass at degree 0");
    }
    double above_two = 0.0;
    for (unsigned r = 3; r <= p_tilde.support_max(); ++r) above_two += p_tilde(r);
    if (above_two <= 0.0) {
        throw parameter_error("target degree law needs mass on degrees >= 3 "
                              "(no clustering is reachable otherwise)");
    }
}

double pair_sum(const DegreeDistribution& p_tilde) {
    double s = 0.0;
    for (unsigned r = 2; r <= p_tilde.support_max(); ++r) {
        s += static_cast<double>(r) * (static_cast<double>(r) - 1.0) * p_tilde(r);
    }
    return s;
}

} // namespace

double c_max(const DegreeDistribution& p_tilde) {
    check_target(p_tilde);
    double num = 0.0;
    for (unsigned r = 2; r <= p_tilde.support_max(); ++r) {
        num += (static_cast<double>(r) - 1.0) * p_tilde(r);
    }
    return 1.0 - 2.0 * num / pair_sum(p_tilde);
}

double c_of_gamma(const DegreeDistribution& p_tilde, double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw parameter_error("gamma must lie in [0,1]");
    double num = 0.0;
    for (unsigned r = 3; r <= p_tilde.support_max(); ++r) {
        const double rr = static_cast<double>(r);
        num += rr * (rr - 1.0) * (rr - 2.0) * gamma / ((rr - 1.0) * gamma + 1.0) * p_tilde(r);
    }
    return num / pair_sum(p_tilde);
}

double c2_max(const DegreeDistribution& p_tilde) {
    check_target(p_tilde);
    double total = 0.0;
    for (unsigned r = 3; r <= p_tilde.support_max(); ++r) {
        total += (static_cast<double>(r) - 2.0) / static_cast<double>(r) * p_tilde(r);
    }
    return total;
}

double c2_of_gamma(const DegreeDistribution& p_tilde, double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw parameter_error("gamma must lie in [0,1]");
    double total = 0.0;
    for (unsigned r = 3; r <= p_tilde.support_max(); ++r) {
        const double rr = static_cast<double>(r);
        total += (rr - 2.0) * gamma / (rr * gamma + 1.0 - gamma) * p_tilde(r);
    }
    return total;
}

TuneResult tune(const DegreeDistribution& p_tilde, double target_c) {
    check_target(p_tilde);
    const double cmax = c_max(p_tilde);
    if (!(target_c >= 0.0) || target_c > cmax + 1e-12) {
        std::ostringstream os;
        os << "target clustering " << target_c << " outside feasible range [0, " << cmax << "]";
        throw parameter_error(os.str());
    }

    // gamma: bisection on the increasing map C(gamma)
    double gamma;
    if (target_c <= 0.0) {
        gamma = 0.0;
    } else if (target_c >= cmax) {
        gamma = 1.0;
    } else {
        double lo = 0.0, hi = 1.0;
        while (hi - lo > 1e-10) {
            const double mid = 0.5 * (lo + hi);
            if (c_of_gamma(p_tilde, mid) < target_c) lo = mid;
            else hi = mid;
        }
        gamma = 0.5 * (lo + hi);
    }

    // F(gamma) = sum_r r p~_r / ((r-1) gamma + 1), then lambda
    double lambda;
    if (gamma == 1.0) {
        double inv = 0.0;
        for (unsigned r = 1; r <= p_tilde.support_max(); ++r) {
            inv += p_tilde(r) / static_cast<double>(r);
        }
        lambda = 1.0 / inv;
    } else {
        double F = 0.0;
        for (unsigned r = 1; r <= p_tilde.support_max(); ++r) {
            const double rr = static_cast<double>(r);
            F += rr * p_tilde(r) / ((rr - 1.0) * gamma + 1.0);
        }
        lambda = F * (1.0 - gamma) / (1.0 - gamma * F);
    }

    std::vector<double> probs(p_tilde.support_max() + 1, 0.0);
    for (unsigned r = 1; r <= p_tilde.support_max(); ++r) {
        const double rr = static_cast<double>(r);
        probs[r] = p_tilde(r) * ((lambda - 1.0) * gamma + 1.0) / ((rr - 1.0) * gamma + 1.0);
    }

    TuneResult out{gamma, lambda, DegreeDistribution::from_pmf(std::move(probs), p_tilde.tail_mass_dropped()),
                   c_of_gamma(p_tilde, gamma)};
    return out;
}

} // namespace clustnet
