#include "clustnet/gilbert.hpp"

#include <cmath>

#include "clustnet/errors.hpp"

namespace clustnet {

GilbertTable::GilbertTable(unsigned d_max, double pi) : pi_(pi) {
    if (d_max < 1) throw parameter_error("gilbert table needs d_max >= 1");
    if (!(pi >= 0.0 && pi <= 1.0)) throw parameter_error("gilbert table needs pi in [0,1]");

    const double log_q = pi < 1.0 ? std::log1p(-pi) : 0.0; // unused when pi == 1
    std::vector<double> lfact(d_max + 1, 0.0);
    for (unsigned i = 2; i <= d_max; ++i) lfact[i] = std::lgamma(static_cast<double>(i) + 1.0);

    f_.resize(d_max + 1);
    f_[0] = {0.0};
    for (unsigned d = 1; d <= d_max; ++d) {
        f_[d].assign(d + 1, 0.0);
        double partial = 0.0;
        for (unsigned k = 1; k < d; ++k) {
            if (f_[k][k] <= 0.0) continue;
            const double cross = static_cast<double>(k) * static_cast<double>(d - k);
            double survive;
            if (pi >= 1.0) {
                survive = 0.0; // all cross edges kept, component cannot stop at k < d
            } else {
                const double log_binom = lfact[d - 1] - lfact[k - 1] - lfact[d - k];
                survive = std::exp(log_binom + cross * log_q);
            }
            const double val = survive * f_[k][k];
            f_[d][k] = val;
            partial += val;
        }
        f_[d][d] = partial >= 1.0 ? 0.0 : 1.0 - partial;
    }
}

double GilbertTable::mean_component_size(unsigned d) const {
    double m = 0.0;
    for (unsigned k = 1; k <= d; ++k) m += static_cast<double>(k) * f_[d][k];
    return m;
}

std::vector<double> k_mixture(const GilbertTable& table, unsigned d, double gamma_d) {
    if (d < 1 || d > table.d_max()) throw parameter_error("k_mixture: d outside table range");
    if (!(gamma_d >= 0.0 && gamma_d <= 1.0)) throw parameter_error("k_mixture: gamma_d outside [0,1]");
    std::vector<double> probs(d + 1, 0.0);
    for (unsigned k = 1; k <= d; ++k) probs[k] = gamma_d * table(d, k);
    probs[d] += 1.0 - gamma_d;
    return probs;
}

} // namespace clustnet
