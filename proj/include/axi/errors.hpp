#pragma once

#include <stdexcept>
#include <string>

namespace axi {

// Contract violation: caller passed inconsistent arguments (mismatched grids,
// bad preconditions that indicate a programming error).
struct contract_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Mathematical domain error: argument outside the domain of the operation.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Evaluation requested at or past the blowup time of an exact solution.
struct blowup_exceeded_error : domain_error {
    using domain_error::domain_error;
};

// A bound was queried past the time where the estimate says anything.
struct bound_expired_error : domain_error {
    using domain_error::domain_error;
};

// Iterative or quadrature machinery failed to reach its tolerance.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Kernel evaluated at coincident source/target points.
struct singular_kernel_error : domain_error {
    using domain_error::domain_error;
};

// Semi-Lagrangian step rejected because the CFL precondition fails.
struct cfl_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rate fit rejected (non-monotone tail or degenerate data).
struct fit_rejected_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace axi
