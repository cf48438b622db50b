#include "clustnet/fixed_point.hpp"

#include <cmath>

namespace clustnet {

namespace {

bool regularity_below(const std::function<double(double)>& g, double root, double eps, double atol) {
    if (root <= 0.0) return true; // empty interval, condition vacuous
    const double lo = std::max(0.0, root - eps);
    const int samples = 10;
    for (int j = 1; j <= samples; ++j) {
        const double z = root - (root - lo) * static_cast<double>(j) / (samples + 1);
        if (g(z) > atol) return false;
    }
    return true;
}

} // namespace

RootScanResult largest_root_below_one(const std::function<double(double)>& g,
                                      unsigned grid, double atol, double bisect_tol,
                                      double regularity_eps) {
    RootScanResult result;
    const double step = 1.0 / static_cast<double>(grid);
    double z_hi = 1.0 - step;
    double g_hi = g(z_hi);
    if (std::abs(g_hi) <= atol) {
        result.root = z_hi;
        result.regularity_ok = regularity_below(g, z_hi, regularity_eps, atol);
        return result;
    }
    for (long i = static_cast<long>(grid) - 2; i >= 0; --i) {
        const double z = static_cast<double>(i) * step;
        const double gz = g(z);
        if (std::abs(gz) <= atol) {
            result.root = z;
            result.regularity_ok = regularity_below(g, z, regularity_eps, atol);
            return result;
        }
        if ((gz < 0.0) != (g_hi < 0.0)) {
            double lo = z, hi = z_hi;
            double g_lo = gz;
            while (hi - lo > bisect_tol) {
                const double mid = 0.5 * (lo + hi);
                const double gm = g(mid);
                if ((gm < 0.0) == (g_lo < 0.0)) {
                    lo = mid;
                    g_lo = gm;
                } else {
                    hi = mid;
                }
            }
            const double root = 0.5 * (lo + hi);
            result.root = root;
            result.regularity_ok = regularity_below(g, root, regularity_eps, atol);
            return result;
        }
        z_hi = z;
        g_hi = gz;
    }
    return result; // no root in [0,1)
}

} // namespace clustnet
