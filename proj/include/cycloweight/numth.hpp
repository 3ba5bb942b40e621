// numth.hpp -- exact integer number theory used throughout the project.
//
// Everything here is exact 64-bit arithmetic; inputs are capped at 10^12,
// which comfortably covers q^2-1 for the supported field sizes.
#ifndef CYCLOWEIGHT_NUMTH_HPP
#define CYCLOWEIGHT_NUMTH_HPP

#include <cstdint>
#include <vector>

namespace cycloweight::numth {

inline constexpr std::uint64_t kFactorizeCap = 1'000'000'000'000ULL;

struct PrimeFactor {
    std::uint64_t prime;
    std::uint32_t exponent;
    friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

// Ascending by prime; empty for m = 1.
using PrimeFactorization = std::vector<PrimeFactor>;

bool is_prime(std::uint64_t m);

// Trial division up to 10^6, Pollard rho beyond. Throws InputRangeError
// for m = 0 or m > 10^12.
PrimeFactorization factorize(std::uint64_t m);

// Largest k with p^k | m. Throws InvalidArgumentError if p is not prime.
std::uint32_t nu(std::uint64_t p, std::uint64_t m);

// Product of the distinct prime divisors; radical(1) = 1.
std::uint64_t radical(std::uint64_t m);

// a / gcd(a, b).
std::uint64_t div_part(std::uint64_t a, std::uint64_t b);

std::uint64_t euler_phi(std::uint64_t t);

// All divisors of m, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t m);

}  // namespace cycloweight::numth

#endif
