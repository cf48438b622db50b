#include "clustnet/dist.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "clustnet/errors.hpp"

namespace clustnet {

namespace {

constexpr double kProbTol = 1e-10;

void normalize(std::vector<double>& probs) {
    double sum = 0.0;
    for (double x : probs) {
        if (x < 0.0 || !std::isfinite(x)) throw parameter_error("degree probabilities must be finite and non-negative");
        sum += x;
    }
    if (sum <= 0.0) throw parameter_error("degree distribution has zero total mass");
    for (double& x : probs) x /= sum;
}

} // namespace

DegreeDistribution DegreeDistribution::from_pmf(std::vector<double> probs, double tail_mass_dropped) {
    if (probs.empty()) throw parameter_error("empty degree distribution");
    normalize(probs);
    DegreeDistribution d(std::move(probs), tail_mass_dropped);
    if (d.mean() <= 0.0) throw parameter_error("degree distribution must have positive mean");
    return d;
}

DegreeDistribution DegreeDistribution::regular(unsigned d) {
    if (d < 1) throw parameter_error("regular degree must be >= 1 (mean would be zero)");
    std::vector<double> probs(d + 1, 0.0);
    probs[d] = 1.0;
    return DegreeDistribution(std::move(probs), 0.0);
}

DegreeDistribution DegreeDistribution::power_law_cutoff(double tau, double kappa, unsigned r_max) {
    if (!(tau > 0.0)) throw parameter_error("power law exponent tau must be > 0");
    if (!(kappa > 0.0)) throw parameter_error("power law cutoff kappa must be > 0");
    if (r_max < 1) throw parameter_error("power law r_max must be >= 1");
    std::vector<double> w(r_max + 1, 0.0);
    double head = 0.0;
    for (unsigned r = 1; r <= r_max; ++r) {
        w[r] = std::exp(-tau * std::log(static_cast<double>(r)) - static_cast<double>(r) / kappa);
        head += w[r];
    }
    // Tail estimate past r_max. Terms decay at least geometrically with ratio
    // exp(-1/kappa); sum until negligible or bound the remainder.
    double tail = 0.0;
    const double ratio = std::exp(-1.0 / kappa);
    double r = static_cast<double>(r_max) + 1.0;
    double term = std::exp(-tau * std::log(r) - r / kappa);
    for (unsigned long it = 0; it < (1UL << 22) && term > 0.0; ++it) {
        tail += term;
        if (term < 1e-18 * (head + tail)) { term = 0.0; break; }
        r += 1.0;
        term = std::exp(-tau * std::log(r) - r / kappa);
    }
    if (term > 0.0 && ratio < 1.0) tail += term / (1.0 - ratio);
    const double dropped = tail / (head + tail);
    normalize(w);
    return DegreeDistribution(std::move(w), dropped);
}

DegreeDistribution DegreeDistribution::poisson_shifted(double lambda, unsigned r_max) {
    if (!(lambda > 0.0)) throw parameter_error("poisson parameter lambda must be > 0");
    if (r_max < 1) throw parameter_error("poisson r_max must be >= 1");
    std::vector<double> probs(r_max + 1, 0.0);
    double term = std::exp(-lambda); // lambda^(r-1)/(r-1)! e^-lambda at r=1
    double head = 0.0;
    for (unsigned rr = 1; rr <= r_max; ++rr) {
        probs[rr] = term;
        head += term;
        term *= lambda / static_cast<double>(rr);
    }
    const double dropped = std::max(0.0, 1.0 - head);
    if (dropped > kProbTol) {
        std::ostringstream os;
        os << "poisson_shifted(" << lambda << ") truncated at r_max=" << r_max
           << " drops mass " << dropped << " > 1e-10; increase r_max";
        throw parameter_error(os.str());
    }
    normalize(probs);
    return DegreeDistribution(std::move(probs), dropped);
}

DegreeDistribution DegreeDistribution::poisson(double lambda, unsigned r_max) {
    if (!(lambda > 0.0)) throw parameter_error("poisson parameter lambda must be > 0");
    if (r_max < 1) throw parameter_error("poisson r_max must be >= 1");
    std::vector<double> probs(r_max + 1, 0.0);
    double term = std::exp(-lambda);
    double head = 0.0;
    for (unsigned rr = 0; rr <= r_max; ++rr) {
        probs[rr] = term;
        head += term;
        term *= lambda / static_cast<double>(rr + 1);
    }
    const double dropped = std::max(0.0, 1.0 - head);
    if (dropped > kProbTol) {
        std::ostringstream os;
        os << "poisson(" << lambda << ") truncated at r_max=" << r_max
           << " drops mass " << dropped << " > 1e-10; increase r_max";
        throw parameter_error(os.str());
    }
    normalize(probs);
    return DegreeDistribution(std::move(probs), dropped);
}

double DegreeDistribution::mean() const {
    double m = 0.0;
    for (std::size_t r = 1; r < probs_.size(); ++r) m += static_cast<double>(r) * probs_[r];
    return m;
}

double DegreeDistribution::factorial_moment(unsigned k) const {
    if (k < 1) throw parameter_error("factorial moment order must be >= 1");
    double total = 0.0;
    for (std::size_t r = k; r < probs_.size(); ++r) {
        double f = 1.0;
        for (unsigned j = 0; j < k; ++j) f *= static_cast<double>(r - j);
        total += f * probs_[r];
    }
    return total;
}

std::string DegreeDistribution::to_table() const {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t r = 0; r < probs_.size(); ++r) {
        if (probs_[r] > 0.0) os << r << ' ' << probs_[r] << '\n';
    }
    return os.str();
}

DegreeDistribution DegreeDistribution::from_table(std::istream& in) {
    std::vector<double> probs;
    std::string line;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        long r = -1;
        double p = -1.0;
        if (!(ls >> r >> p) || r < 0) throw parameter_error("malformed distribution line: '" + line + "'");
        if (static_cast<std::size_t>(r) >= probs.size()) probs.resize(static_cast<std::size_t>(r) + 1, 0.0);
        probs[static_cast<std::size_t>(r)] = p;
    }
    return from_pmf(std::move(probs));
}

DegreeDistribution DegreeDistribution::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parameter_error("cannot open distribution file: " + path);
    return from_table(in);
}

void DegreeDistribution::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw parameter_error("cannot write distribution file: " + path);
    out << to_table();
}

SizeBiasedDistribution size_biased(const DegreeDistribution& dist) {
    const double lambda = dist.mean();
    if (lambda <= 0.0) throw parameter_error("size biasing needs a positive mean");
    std::vector<double> probs(dist.support_max() > 0 ? dist.support_max() : 1, 0.0);
    for (unsigned r = 1; r <= dist.support_max(); ++r) {
        probs[r - 1] = static_cast<double>(r) * dist(r) / lambda;
    }
    return SizeBiasedDistribution(std::move(probs));
}

double binomial_pmf(unsigned s, unsigned r, double p) {
    if (r > s) throw parameter_error("binomial_pmf needs r <= s");
    if (!(p >= 0.0 && p <= 1.0)) throw parameter_error("binomial_pmf needs p in [0,1]");
    if (p == 0.0) return r == 0 ? 1.0 : 0.0;
    if (p == 1.0) return r == s ? 1.0 : 0.0;
    const double lc = std::lgamma(static_cast<double>(s) + 1.0) -
                      std::lgamma(static_cast<double>(r) + 1.0) -
                      std::lgamma(static_cast<double>(s - r) + 1.0);
    return std::exp(lc + static_cast<double>(r) * std::log(p) +
                    static_cast<double>(s - r) * std::log1p(-p));
}

} // namespace clustnet
