#pragma once

#include <stdexcept>
#include <string>

namespace expsum {

// Base class for every failure this library reports.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Flag/argument misuse detected before any computation.
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

// Exponent set does not belong to the class an operation requires.
class WrongClass : public Error {
public:
    explicit WrongClass(const std::string& msg) : Error(msg) {}
};

// Half-line integral with non-decaying integrand.
class DivergentIntegral : public Error {
public:
    explicit DivergentIntegral(const std::string& msg) : Error(msg) {}
};

// Adaptive quadrature did not converge within the panel budget.
class QuadratureFailure : public Error {
public:
    explicit QuadratureFailure(const std::string& msg) : Error(msg) {}
};

// Cholesky pivot breakdown: the Gram matrix is numerically singular,
// which signals an over-degenerate exponent set.
class NotPositiveDefinite : public Error {
public:
    explicit NotPositiveDefinite(const std::string& msg) : Error(msg) {}
};

// Solve requested on a matrix with condition number beyond the trusted range.
class ConditionExceeded : public Error {
public:
    ConditionExceeded(const std::string& msg, double cond)
        : Error(msg), condition(cond) {}
    double condition;
};

// Jacobi iteration did not reach the off-diagonal threshold.
class EigenFailure : public Error {
public:
    explicit EigenFailure(const std::string& msg) : Error(msg) {}
};

// Functional entries would exceed the double-precision exponent range.
class OverflowGuard : public Error {
public:
    explicit OverflowGuard(const std::string& msg) : Error(msg) {}
};

}  // namespace expsum
