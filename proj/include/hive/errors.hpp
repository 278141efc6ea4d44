#pragma once

#include <stdexcept>

namespace hive {

/// Thrown when an operation needs a nonempty hive polytope and gets none.
struct EmptyPolytopeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a functional turns out not to have a unique maximizer, so the
/// caller should re-sample its coefficients.
struct NonGenericFunctionalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structural guarantee the library relies on failed to hold.  Seeing this
/// means a bug (or a disproved claim), never bad user input.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace hive
