#pragma once

#include <stdexcept>
#include <string>

namespace drmod {

// Every mathematical failure mode carries a stable kind name so the CLI can
// print it on stderr and callers can dispatch without string matching.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define DRMOD_ERROR(Name)                                         \
    class Name : public Error {                                   \
    public:                                                       \
        explicit Name(const std::string& msg) : Error(#Name, msg) {} \
    }

DRMOD_ERROR(DivisionByZero);
DRMOD_ERROR(ContextMismatch);
DRMOD_ERROR(UndefinedGcd);
DRMOD_ERROR(InvalidInput);
DRMOD_ERROR(InseparableInput);
DRMOD_ERROR(NonInvertibleDenominator);
DRMOD_ERROR(NotDivisible);
DRMOD_ERROR(NotAnIsogeny);
DRMOD_ERROR(DegenerateDenominator);
DRMOD_ERROR(DegenerateJDenominator);
DRMOD_ERROR(IntegralityViolation);
DRMOD_ERROR(NotAnIdeal);
DRMOD_ERROR(NotPrime);
DRMOD_ERROR(TooLarge);
DRMOD_ERROR(HypothesisViolation);

#undef DRMOD_ERROR

// Internal consistency failures (bugs, not domain errors).
class LogicError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace drmod
