#pragma once

#include <stdexcept>

namespace uncover {

// Raised when an internal computation violates a structural guarantee (a
// tree count comes out non-integral, a quadrature fails to converge, ...).
// Distinct from std::invalid_argument so callers can map it to an
// internal-error exit code.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace uncover
