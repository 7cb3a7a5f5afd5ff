#pragma once

#include <stdexcept>

namespace fmctl {

/// Bad or inconsistent scenario configuration. CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Field/force evaluation requested inside a magnet's exclusion radius.
struct SingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Command outside actuator limits where the caller asked for a hard check.
struct SaturationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Force inversion impossible: no inducing field, so no actuation authority.
struct NoAuthorityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two-marble allocation matrix is singular or too ill-conditioned to invert.
struct AllocationSingularError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Integrator produced a non-finite state.
struct IntegrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fmctl
