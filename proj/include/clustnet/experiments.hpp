#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace clustnet {

inline constexpr const char* kToolVersion = "0.1.0";

struct ExperimentOptions {
    std::string out_dir = ".";
    bool simulate = false;       // add Monte Carlo overlay columns
    std::size_t n = 100000;      // graph size for overlays
    std::size_t replicas = 50;   // replicas per overlay point
    std::uint64_t base_seed = 12345;
};

/// Figure-reproduction experiments; each writes one CSV into out_dir and
/// returns the paths written. Analytic columns are always emitted;
/// simulation overlays only with opts.simulate.
std::vector<std::string> run_experiment(const std::string& name, const ExperimentOptions& opts);

const std::vector<std::string>& experiment_names();

} // namespace clustnet
