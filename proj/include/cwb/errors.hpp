#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cwb {

// Base for all workbench errors; the CLI maps these to exit status 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed source text (machine files, expressions, polynomials).
struct SyntaxError : Error {
    using Error::Error;
};

// Two quadruples share the same (state, symbol) pair.
struct DeterminismError : Error {
    DeterminismError(std::uint32_t state_, unsigned symbol_)
        : Error("duplicate quadruples for (q" + std::to_string(state_) + ", " +
                std::to_string(symbol_) + ")"),
          state(state_),
          symbol(symbol_) {}

    std::uint32_t state;
    unsigned symbol;
};

struct TraceCapExceeded : Error {
    using Error::Error;
};

// A configured resource cap (generation budget, rounds cap, box step cap,
// precision cap) was exceeded.
struct ResourceLimit : Error {
    using Error::Error;
};

struct IllFormedExpr : Error {
    using Error::Error;
};

struct ArityMismatch : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct DegreeTooHigh : Error {
    using Error::Error;
};

struct UnsupportedCoefficient : Error {
    using Error::Error;
};

struct NonNaturalExponent : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

}  // namespace cwb
