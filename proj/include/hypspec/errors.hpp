#pragma once

#include <stdexcept>
#include <string>

namespace hypspec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// argument outside the operation's domain
struct DomainError : Error {
    using Error::Error;
};

// gamma or hypergeometric parameter sitting on a pole
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// series budget, quadrature, or ODE integration gave up
struct ConvergenceError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace hypspec
