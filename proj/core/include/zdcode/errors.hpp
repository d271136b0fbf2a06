#pragma once

#include <stdexcept>
#include <string>

namespace zdcode {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument: unsupported field, malformed matrix, out-of-range n.
struct InvalidArgument : Error {
    using Error::Error;
};

// Structurally valid input with no object to compute (prime n, empty code).
struct DegenerateInput : Error {
    using Error::Error;
};

// Exact computation would exceed the caller's enumeration budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

} // namespace zdcode
