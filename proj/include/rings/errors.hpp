#pragma once

/**
 * @file errors.hpp
 * @brief Exception types shared by every module.
 */

#include <cstddef>
#include <stdexcept>
#include <string>

#include "bigint.hpp"

namespace rings {

/// Division by zero, non-invertible element, inexact division.
struct ArithmeticError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised by modular inversion; carries gcd(a, p).
struct NonInvertibleError : ArithmeticError {
    Integer gcd;
    NonInvertibleError(const std::string& what, Integer g)
        : ArithmeticError(what), gcd(std::move(g)) {}
};

/// The requested operation is not available for this ring.
struct UnsupportedRingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed ring or expression text; position is 1-based.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

/// Probabilistic algorithm ran out of retries.
struct AlgorithmFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TimeoutError : std::runtime_error {
    TimeoutError() : std::runtime_error("timeout") {}
};

}  // namespace rings
