#pragma once

#include <stdexcept>

namespace ascert {

// Input text could not be parsed.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The object is not an association scheme, or a claimed exact identity
// fails; the message names the first violated identity.
struct CertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was applied to a scheme of the wrong kind (class, symmetry
// type) or with an inadmissible parameter.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The exact machinery cannot represent the result (eigenvalues outside a
// single quadratic field, class > 3, ...).
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ascert
