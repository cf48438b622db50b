#pragma once

#include <stdexcept>
#include <string>

namespace clustnet {

/// Invalid user-supplied parameter or precondition violation. CLI exit code 2.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Solver or numeric failure (no bracket, retry limit, degenerate input). CLI exit code 3.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace clustnet
