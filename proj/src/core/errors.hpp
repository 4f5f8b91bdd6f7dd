#pragma once

#include <stdexcept>
#include <string>

namespace cubicfolds {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (configuration grammar, edge lists, matrices).
struct ParseError : Error {
    using Error::Error;
};

// Structurally valid input outside an operation's domain (A0, D3, non-ADE
// parts where ADE is required, odd lattice where even is required, ...).
struct DomainError : Error {
    using Error::Error;
};

// Input exceeds a documented size bound of an exhaustive search.
struct LimitError : Error {
    using Error::Error;
};

// Embedded table data failed validation on load.
struct DataError : Error {
    using Error::Error;
};

// Deformation requested from a configuration with total Milnor number > 15,
// where the global-to-local surjectivity assumption does not hold.  Callers
// may override explicitly.
struct GateError : Error {
    using Error::Error;
};

}  // namespace cubicfolds
