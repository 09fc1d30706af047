#pragma once

#include <stdexcept>
#include <string>

namespace galetope {

// An argument violates a documented precondition.
struct InvalidInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A facet family cannot be the facet family of a convex polytope.
struct NotPolytopalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Geometric input without full affine span, or a degenerate facet.
struct DegenerateInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A construction step found no beyond or no beneath facets.
struct DegenerateStepError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A strict linear feasibility region is empty.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The incremental construction is restricted to even dimension >= 4.
struct UnsupportedParametersError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace galetope
