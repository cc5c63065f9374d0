// errors.hpp — exception taxonomy shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace epspectra {

// Base class for every library-defined failure.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Eigensolver exceeded its iteration budget (cap: 100 * dim sweeps).
struct NonConvergence : Error {
    using Error::Error;
};

// Incompatible or out-of-range matrix dimensions.
struct DimensionMismatch : Error {
    using Error::Error;
};

// An operation that divides by a coupling constant received zero coupling.
struct ZeroCoupling : Error {
    using Error::Error;
};

// A supplied symmetry permutation does not commute with the Hamiltonian.
struct SymmetryViolation : Error {
    using Error::Error;
};

// Best and second-best branch assignments are indistinguishable and
// refinement could not separate them.
struct AmbiguousMatching : Error {
    using Error::Error;
};

// Loop discretization too coarse: a transport step moved eigenvalues by
// more than half the local spectral gap.
struct RadiusTooSmall : Error {
    using Error::Error;
};

// Instance file rejected.  line/column are 1-based positions into the JSON
// text when the failure happened during parsing, 0 when it is semantic.
struct InstanceError : Error {
    int line = 0;
    int column = 0;
    InstanceError(const std::string& what, int line_ = 0, int column_ = 0)
        : Error(what), line(line_), column(column_) {}
};

}  // namespace epspectra
