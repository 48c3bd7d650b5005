#pragma once

#include <stdexcept>
#include <string>

namespace quadcf {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a certified comparison cannot be decided at the maximum
// precision allowed by the active policy.
struct CertificationFailure : Error {
    explicit CertificationFailure(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

struct ZeroDenominator : Error {
    long index;
    explicit ZeroDenominator(long idx)
        : Error("zero convergent denominator q_" + std::to_string(idx)), index(idx) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct ZeroDerivative : Error {
    explicit ZeroDerivative(const std::string& msg) : Error(msg) {}
};

struct ZeroTerm : Error {
    explicit ZeroTerm(const std::string& msg) : Error(msg) {}
};

}  // namespace quadcf
