#pragma once

#include "clustnet/dist.hpp"
#include "clustnet/model.hpp"

namespace clustnet {

/// Largest clustering coefficient reachable for target degree law p~:
/// C^max = 1 - 2 sum_{r>=2}(r-1) p~_r / sum_{r>=2} r(r-1) p~_r.
/// Needs p~_0 = 0 and some mass on degrees >= 3.
double c_max(const DegreeDistribution& p_tilde);

/// Clustering achieved by constant gamma while holding the degree law at p~;
/// strictly increasing in gamma, from 0 to c_max.
double c_of_gamma(const DegreeDistribution& p_tilde, double gamma);

/// Biased-coefficient variants of the two maps above.
double c2_max(const DegreeDistribution& p_tilde);
double c2_of_gamma(const DegreeDistribution& p_tilde, double gamma);

struct TuneResult {
    double gamma = 0.0;
    double lambda = 0.0;    // mean of the base law p
    DegreeDistribution p;   // base law handed to the graph generator
    double achieved_c = 0.0;
};

/// Inverts the construction: finds (p, gamma) such that the substituted graph
/// has asymptotic degree law p~ and clustering C. gamma by bisection on the
/// monotone clustering map, then lambda and p in closed form.
TuneResult tune(const DegreeDistribution& p_tilde, double target_c);

} // namespace clustnet
