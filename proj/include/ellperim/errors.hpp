#pragma once

#include <stdexcept>
#include <string>

namespace ellperim {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Adaptive quadrature hit its recursion budget before meeting tolerance.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An integrand or formula produced NaN or infinity.
class NonFiniteValue : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iteration failed to converge within its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A power series was requested outside its disc of convergence.
class DivergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

}  // namespace ellperim
