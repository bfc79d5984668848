#pragma once

#include <stdexcept>
#include <string>

namespace msp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vector/table length does not match the instance dimensions.
struct DimensionError : Error {
    using Error::Error;
};

// No feasible point exists (covering with unreachable b, empty LP, ...).
struct InfeasibleError : Error {
    using Error::Error;
};

// A configured cap (tree size, basis count, lift fold) would be exceeded.
struct ResourceError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// Operation undefined for this input (e.g. c(P,w) on a single-point polytope).
struct DomainError : Error {
    using Error::Error;
};

} // namespace msp
