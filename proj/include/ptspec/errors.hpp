#pragma once

#include <stdexcept>
#include <string>

namespace ptspec {

/// Invalid model parameter or argument outside an operation's domain.
/// The message names the violated invariant.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Matrix orders (or a matrix order and an expected dimension) do not match.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A ray scan found no domain-boundary crossing within the search cap.
struct NoBoundaryOnRayError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ptspec
