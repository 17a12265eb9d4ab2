#pragma once

#include <stdexcept>
#include <string>

namespace hytet {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad values, unparsable requests).
struct input_error : error {
    using error::error;
};

/// The six values do not bound a tetrahedron of the requested geometry.
struct realizability_error : error {
    using error::error;
};

/// The classified geometry does not admit the requested operation.
struct shape_error : error {
    using error::error;
};

/// A function was evaluated at a singular point (log 0, dilogarithm at 1, ...).
struct evaluation_error : error {
    using error::error;
};

/// Invalid argument for a special function (zero log argument, non-finite input).
struct domain_error : error {
    using error::error;
};

/// The root-finding quadratic degenerated (vanishing leading coefficient).
struct degenerate_error : error {
    using error::error;
};

/// Branch bookkeeping failed integrity checks (non-integral residues,
/// irreconcilable derivative corrections).
struct branch_error : error {
    using error::error;
};

/// Analytic continuation along a path could not be certified.
struct continuation_error : error {
    using error::error;
};

/// An iterative scheme exhausted its budget before reaching tolerance.
struct convergence_error : error {
    using error::error;
};

/// Process exit code for an exception, following the CLI contract:
/// 2 malformed input, 3 not realizable / wrong shape, 4 numerical failure.
int exit_code_for(const error& e);

}  // namespace hytet
