#pragma once

#include <functional>
#include <optional>

namespace clustnet {

struct RootScanResult {
    std::optional<double> root; // largest z in [0,1) with g(z) = 0, if any
    bool regularity_ok = true;  // g < 0 just below the root (within eps band)
};

/// Locates sup{ z in [0,1) : g(z) = 0 } by a descending grid scan followed by
/// bisection. The scan never evaluates g at z = 1 (which is typically an exact
/// root of these fixed-point equations, up to rounding noise). Grid-point
/// values with |g| <= atol count as roots, which catches tangencies such as a
/// double root at z = 0. The regularity flag samples g on (root - eps, root).
RootScanResult largest_root_below_one(const std::function<double(double)>& g,
                                      unsigned grid = 10000,
                                      double atol = 1e-12,
                                      double bisect_tol = 1e-10,
                                      double regularity_eps = 1e-4);

} // namespace clustnet
