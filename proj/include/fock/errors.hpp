#pragma once

#include <stdexcept>
#include <string>

namespace fock {

/// Bad input: out-of-range parameters, malformed files, contract violations.
/// CLI maps this to exit code 2.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure: non-finite quadrature, loss of positive definiteness,
/// eigensolver breakdown. CLI maps this to exit code 3.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fock
