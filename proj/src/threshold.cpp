#include "clustnet/threshold.hpp"

#include <cmath>
#include <sstream>

#include "clustnet/errors.hpp"
#include "clustnet/fixed_point.hpp"

namespace clustnet {

namespace {

constexpr double kRowTol = 1e-10;

void validate_rows(const std::vector<std::vector<double>>& rows) {
    for (std::size_t s = 0; s < rows.size(); ++s) {
        if (rows[s].size() != s + 1) {
            std::ostringstream os;
            os << "threshold row " << s << " must have " << s + 1 << " entries, got " << rows[s].size();
            throw parameter_error(os.str());
        }
        double sum = 0.0;
        for (double x : rows[s]) {
            if (x < 0.0 || !std::isfinite(x)) throw parameter_error("threshold probabilities must be non-negative");
            sum += x;
        }
        if (std::abs(sum - 1.0) > kRowTol) {
            std::ostringstream os;
            os << "threshold row " << s << " sums to " << sum << ", expected 1";
            throw parameter_error(os.str());
        }
    }
}

/// Bi(s, z) pmf, filled outward from the mode so rows with s in the hundreds
/// stay finite (straight recurrences underflow at the ends).
void binom_row(unsigned s, double z, std::vector<double>& b) {
    b.assign(s + 1, 0.0);
    if (z <= 0.0) { b[0] = 1.0; return; }
    if (z >= 1.0) { b[s] = 1.0; return; }
    unsigned mode = static_cast<unsigned>(std::floor((static_cast<double>(s) + 1.0) * z));
    if (mode > s) mode = s;
    const double log_mode = std::lgamma(static_cast<double>(s) + 1.0) -
                            std::lgamma(static_cast<double>(mode) + 1.0) -
                            std::lgamma(static_cast<double>(s - mode) + 1.0) +
                            static_cast<double>(mode) * std::log(z) +
                            static_cast<double>(s - mode) * std::log1p(-z);
    b[mode] = std::exp(log_mode);
    const double odds = z / (1.0 - z);
    for (unsigned r = mode; r < s; ++r) {
        b[r + 1] = b[r] * odds * static_cast<double>(s - r) / static_cast<double>(r + 1);
    }
    for (unsigned r = mode; r > 0; --r) {
        b[r - 1] = b[r] / odds * static_cast<double>(r) / static_cast<double>(s - r + 1);
    }
}

unsigned required_s_max(const DegreeDistribution& p, const ThresholdDistribution& t) {
    if (t.s_max() < p.support_max()) {
        std::ostringstream os;
        os << "threshold law covers degrees up to " << t.s_max()
           << " but the degree distribution has support up to " << p.support_max();
        throw parameter_error(os.str());
    }
    return p.support_max();
}

} // namespace

ThresholdDistribution ThresholdDistribution::from_rows(std::vector<std::vector<double>> rows) {
    if (rows.empty()) throw parameter_error("threshold distribution needs at least row s=0");
    validate_rows(rows);
    return ThresholdDistribution(std::move(rows));
}

ThresholdDistribution ThresholdDistribution::contagion(double q, unsigned s_max) {
    if (!(q > 0.0 && q < 1.0)) throw parameter_error("contagion parameter q must lie in (0,1)");
    std::vector<std::vector<double>> rows(s_max + 1);
    for (unsigned s = 0; s <= s_max; ++s) {
        rows[s].assign(s + 1, 0.0);
        const unsigned l = static_cast<unsigned>(std::floor(q * static_cast<double>(s)));
        rows[s][std::min(l, s)] = 1.0;
    }
    return ThresholdDistribution(std::move(rows));
}

ThresholdDistribution ThresholdDistribution::constant_threshold(unsigned k, unsigned s_max) {
    std::vector<std::vector<double>> rows(s_max + 1);
    for (unsigned s = 0; s <= s_max; ++s) {
        rows[s].assign(s + 1, 0.0);
        rows[s][std::min(k, s)] = 1.0;
    }
    return ThresholdDistribution(std::move(rows));
}

ThresholdDistribution ThresholdDistribution::all_zero(unsigned s_max) {
    std::vector<std::vector<double>> rows(s_max + 1);
    for (unsigned s = 0; s <= s_max; ++s) {
        rows[s].assign(s + 1, 0.0);
        rows[s][0] = 1.0;
    }
    return ThresholdDistribution(std::move(rows));
}

ThresholdDistribution threshold_prime(const ThresholdDistribution& t, const CliqueProfile& gamma) {
    std::vector<std::vector<double>> rows(t.s_max() + 1);
    for (unsigned s = 0; s <= t.s_max(); ++s) {
        const double g = gamma(s);
        rows[s].assign(s + 1, 0.0);
        rows[s][0] = t(s, 0);
        for (unsigned l = 1; l < s; ++l) rows[s][l] = (1.0 - g) * t(s, l);
        if (s >= 1) rows[s][s] = (1.0 - g) * t(s, s) + g * (1.0 - t(s, 0));
    }
    try {
        validate_rows(rows);
    } catch (const parameter_error& e) {
        throw numeric_error(std::string("threshold_prime produced an invalid row (input violated "
                                        "stochasticity?): ") + e.what());
    }
    return ThresholdDistribution::from_rows(std::move(rows));
}

CascadeCondition cascade_condition(const DegreeDistribution& p, const ThresholdDistribution& t) {
    required_s_max(p, t);
    CascadeCondition out;
    for (unsigned r = 2; r <= p.support_max(); ++r) {
        out.lhs += static_cast<double>(r) * (static_cast<double>(r) - 1.0) * p(r) * t(r, 0);
    }
    out.rhs = p.mean();
    const double scale = std::max(1.0, std::max(std::abs(out.lhs), std::abs(out.rhs)));
    out.critical = std::abs(out.lhs - out.rhs) <= 1e-12 * scale;
    out.holds = !out.critical && out.lhs > out.rhs;
    return out;
}

QcResult contagion_qc(const DegreeDistribution& p) {
    const double lambda = p.mean();
    double S = 0.0;
    for (unsigned m = 2; m <= p.support_max(); ++m) {
        S += static_cast<double>(m) * (static_cast<double>(m) - 1.0) * p(m);
        if (S > lambda) return {1.0 / static_cast<double>(m), true};
    }
    return {0.0, false};
}

XiResult xi_solve(const DegreeDistribution& p, const ThresholdDistribution& t) {
    const unsigned d_max = required_s_max(p, t);
    const double lambda = p.mean();
    const auto phi = [&](double xi) {
        double acc = 0.0, xp = 1.0; // xi^(d-1)
        for (unsigned d = 1; d <= d_max; ++d) {
            acc += static_cast<double>(d) * p(d) * t(d, 0) * (1.0 - xp);
            xp *= xi;
        }
        return acc - lambda * (1.0 - xi);
    };
    const double at_zero = phi(0.0);
    if (at_zero >= -1e-12 * std::max(1.0, lambda)) {
        // Interior root collapsed into the boundary ones (e.g. regular graph
        // with all thresholds zero); the meaningful limit is xi = 0.
        return {0.0, true};
    }
    double lo = 0.0, hi = 1.0 - 1e-12;
    if (phi(hi) <= 0.0) {
        throw numeric_error("xi_solve: no interior root found; does the cascade condition hold?");
    }
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (phi(mid) < 0.0) lo = mid;
        else hi = mid;
    }
    return {0.5 * (lo + hi), false};
}

double pivotal_fraction(const DegreeDistribution& p, const CliqueProfile& gamma,
                        const ThresholdDistribution& t) {
    const unsigned d_max = required_s_max(p, t);
    const double xi = xi_solve(p, t).value;
    const double gt = gamma_tilde(p, gamma);
    double total = 0.0, xp = xi; // xi^d
    for (unsigned d = 1; d <= d_max; ++d) {
        const double g = gamma(d);
        total += (static_cast<double>(d) * g + 1.0 - g) * p(d) * t(d, 0) * (1.0 - xp);
        xp *= xi;
    }
    return total / gt;
}

namespace {

CascadeSize cascade_size_impl(const DegreeDistribution& p, const CliqueProfile& gamma,
                              const ThresholdDistribution& t, const ActivationProfile& alpha) {
    const unsigned d_max = required_s_max(p, t);
    const double lambda = p.mean();

    std::vector<double> row, rsuf;
    const auto h = [&](double z) {
        double tot = 0.0;
        double zs = 1.0; // z^s
        for (unsigned s = 1; s <= d_max; ++s) {
            zs *= z;
            if (p(s) == 0.0) continue;
            const double a = alpha(s);
            const double g = gamma(s);
            const double sd = static_cast<double>(s);
            tot += (1.0 - a) * sd * p(s) * (t(s, 0) * zs + g * (1.0 - t(s, 0)) * z);
            if (g < 1.0) {
                binom_row(s, z, row);
                rsuf.assign(s + 2, 0.0); // rsuf[m] = sum_{r>=m} r b_{sr}(z)
                for (unsigned r = s + 1; r-- > 0;) {
                    rsuf[r] = rsuf[r + 1] + static_cast<double>(r) * row[r];
                }
                double inner = 0.0;
                for (unsigned l = 1; l <= s; ++l) {
                    const double tl = t(s, l);
                    if (tl == 0.0) continue;
                    inner += tl * rsuf[s - l];
                }
                tot += (1.0 - a) * p(s) * (1.0 - g) * inner;
            }
        }
        return tot;
    };

    const auto g_fn = [&](double z) { return lambda * z * z - h(z); };
    const auto scan = largest_root_below_one(g_fn, 10000, 1e-12 * std::max(1.0, lambda));

    CascadeSize out;
    out.zeta = scan.root ? *scan.root : 1.0;
    out.regularity_ok = scan.root ? scan.regularity_ok : true;

    const double z = out.zeta;
    const double gt = gamma_tilde(p, gamma);
    std::vector<double> b, bsuf;
    double L = 0.0;
    {
        const double a0 = alpha(0);
        const double g0 = gamma(0);
        L += (1.0 - g0) * p(0) * a0; // seeded isolated vertices
    }
    double zs = 1.0;
    for (unsigned s = 1; s <= d_max; ++s) {
        zs *= z;
        if (p(s) == 0.0) continue;
        const double a = alpha(s);
        const double g = gamma(s);
        const double sd = static_cast<double>(s);
        L += (sd * g + 1.0 - g) * p(s) * ((1.0 - a) * t(s, 0) * (1.0 - zs) + a);
        if (g < 1.0) {
            binom_row(s, z, b);
            bsuf.assign(s + 2, 0.0);
            for (unsigned r = s + 1; r-- > 0;) bsuf[r] = bsuf[r + 1] + b[r];
            double inner = 0.0;
            for (unsigned l = 1; l <= s; ++l) {
                const double tl = t(s, l);
                if (tl == 0.0) continue;
                inner += tl * bsuf[s - l];
            }
            L += (1.0 - g) * p(s) * (1.0 - a) * (1.0 - t(s, 0) - inner);
        }
    }
    out.fraction = L / gt;
    return out;
}

} // namespace

CascadeSize contagion_zeta_L(const DegreeDistribution& p, const CliqueProfile& gamma,
                             const ThresholdDistribution& t) {
    return cascade_size_impl(p, gamma, t, ActivationProfile::constant(0.0));
}

CascadeSize activation_cascade_fraction(const DegreeDistribution& p, const CliqueProfile& gamma,
                                        const ThresholdDistribution& t, const ActivationProfile& alpha) {
    return cascade_size_impl(p, gamma, t, alpha);
}

ContagionReport threshold_report(const DegreeDistribution& p, const CliqueProfile& gamma,
                                 const ThresholdDistribution& t) {
    ContagionReport report;
    const auto cc = cascade_condition(p, t);
    report.cascade_possible = cc.holds;
    report.critical = cc.critical;
    report.cascade_lhs = cc.lhs;
    report.cascade_rhs = cc.rhs;
    if (cc.holds) {
        const auto xi = xi_solve(p, t);
        report.xi = xi.value;
        report.xi_degenerate = xi.degenerate;
        report.pivotal_fraction = pivotal_fraction(p, gamma, t);
        const auto cs = contagion_zeta_L(p, gamma, t);
        report.zeta = cs.zeta;
        report.cascade_fraction = cs.fraction;
        report.regularity_ok = cs.regularity_ok;
    }
    return report;
}

ContagionReport contagion_report(const DegreeDistribution& p, const CliqueProfile& gamma, double q) {
    const auto t = ThresholdDistribution::contagion(q, p.support_max());
    ContagionReport report = threshold_report(p, gamma, t);
    const auto qc = contagion_qc(p);
    report.q_c = qc.value;
    report.q_c_possible = qc.possible;
    return report;
}

} // namespace clustnet
