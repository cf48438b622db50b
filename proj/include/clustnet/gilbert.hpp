#pragma once

#include <vector>

namespace clustnet {

/// f(d,k,pi): probability that the component of a tagged vertex in a
/// bond-percolated complete graph K_d(pi) has exactly k vertices.
/// Filled by the recurrence
///   f(d,k,pi) = C(d-1,k-1) f(k,k,pi) (1-pi)^(k(d-k)),   k < d,
///   f(d,d,pi) = 1 - sum_{k<d} f(d,k,pi),
/// with the binomial prefactor in log space so d in the hundreds is fine.
class GilbertTable {
public:
    GilbertTable(unsigned d_max, double pi);

    double operator()(unsigned d, unsigned k) const { return f_[d][k]; }
    unsigned d_max() const { return static_cast<unsigned>(f_.size()) - 1; }
    double pi() const { return pi_; }

    /// sum_k k f(d,k,pi): mean size of the tagged component.
    double mean_component_size(unsigned d) const;

private:
    std::vector<std::vector<double>> f_; // f_[d][k], 1 <= k <= d
    double pi_;
};

/// P(K(d,pi,gamma_d) = k) for k=1..d: the tagged fragment size when the vertex
/// is a clique with probability gamma_d and left intact otherwise.
std::vector<double> k_mixture(const GilbertTable& table, unsigned d, double gamma_d);

} // namespace clustnet
