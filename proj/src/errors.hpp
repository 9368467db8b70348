#pragma once

#include <stdexcept>
#include <string>

namespace cd4 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two operands live in different polynomial rings.
struct RingMismatch : Error {
    using Error::Error;
};

// Malformed textual input (polynomial syntax, family spec, ...).
struct ParseError : Error {
    using Error::Error;
};

// Violated precondition or out-of-domain argument.
struct DomainError : Error {
    using Error::Error;
};

// A Groebner-type computation exceeded its configured resource budget.
// Callers treat this as "indeterminate", never as a silent truncation.
struct BudgetExceeded : Error {
    using Error::Error;
};

} // namespace cd4
