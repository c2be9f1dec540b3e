#pragma once

#include <stdexcept>

namespace edd {

/// Raised when an operation leaves its mathematical domain: division by
/// zero, gcd of two zero polynomials, inconsistent input classes, a violated
/// geometric precondition.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The request is well formed but outside what the library can decide,
/// e.g. an exact smoothness check above the configured degree bound.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace edd
