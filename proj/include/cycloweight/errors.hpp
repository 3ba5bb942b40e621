// errors.hpp -- exception hierarchy shared by all modules.
#ifndef CYCLOWEIGHT_ERRORS_HPP
#define CYCLOWEIGHT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cycloweight {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A value fell outside a documented input cap.
struct InputRangeError : Error { using Error::Error; };

struct InvalidArgumentError : Error { using Error::Error; };

struct DivisionByZeroError : Error { using Error::Error; };

// Polynomial division left a nonzero remainder.
struct RemainderNonzeroError : Error { using Error::Error; };

// Message length does not match the code dimension.
struct DimensionMismatchError : Error { using Error::Error; };

// A factorization routine was called with parameters of the other case.
struct CaseMismatchError : Error { using Error::Error; };

// rad(n) does not divide q-1: no closed-form factorization.
struct OutOfRegimeError : Error { using Error::Error; };

// gcd(n, q) != 1.
struct InvalidLengthError : Error { using Error::Error; };

// The coset oracle's splitting-field degree cap was exceeded.
struct OracleOutOfRangeError : Error { using Error::Error; };

// Brute-force enumeration would exceed the codeword cap.
struct CapExceededError : Error { using Error::Error; };

struct DegenerateDenominatorError : Error { using Error::Error; };

// Derived quantities contradict each other; signals an upstream bug.
struct InconsistentParametersError : Error { using Error::Error; };

struct NotInBaseFieldError : Error { using Error::Error; };

struct ParseError : Error { using Error::Error; };

}  // namespace cycloweight

#endif
