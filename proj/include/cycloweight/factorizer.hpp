// factorizer.hpp -- closed-form factorization of x^n - 1 over F_q when every
// prime divisor of n divides q-1, together with the derived case parameters
// and an independent cyclotomic-coset factorization oracle.
//
// Two regimes:
//   * binomial-only (8 does not divide n, or q != 3 mod 4): all irreducible
//     factors are binomials x^t - theta^(ul), t | m.
//   * mixed (8 | n and q = 3 mod 4): binomials over odd t | m' plus factors
//     x^(2t) - (a + a^q) x^t + a^(q+1) with a = alpha^(ul'), u in S_t. When
//     the middle coefficient vanishes such a factor is itself a binomial of
//     degree 2t and is classified as one.
#ifndef CYCLOWEIGHT_FACTORIZER_HPP
#define CYCLOWEIGHT_FACTORIZER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cycloweight/gfield.hpp"
#include "cycloweight/polyring.hpp"

namespace cycloweight {

enum class CaseTag { binomial_only, mixed };

struct CaseParameters {
    std::uint32_t n = 0;
    std::uint32_t q = 0;
    CaseTag tag = CaseTag::binomial_only;
    std::uint64_t m = 0;        // n / gcd(n, q-1)
    std::uint64_t l = 0;        // (q-1) / gcd(q-1, n)
    std::uint64_t m_prime = 0;  // n / gcd(n, q^2-1)
    std::uint64_t l_prime = 0;  // (q^2-1) / gcd(q^2-1, n)
    std::uint32_t r = 0;        // min(nu2(n/2), nu2(q+1)); mixed case only
    std::uint64_t gcd_n_qm1 = 0;
    std::uint64_t gcd_n_q2m1 = 0;
    friend bool operator==(const CaseParameters&, const CaseParameters&) = default;
};

// Throws InvalidLengthError when gcd(n, q) != 1, OutOfRegimeError when
// rad(n) does not divide q-1, InvalidArgumentError when q is not a prime
// power, InputRangeError when n < 1.
CaseParameters case_parameters(std::uint32_t n, std::uint32_t q);

enum class FactorKind { binomial, trinomial };

struct IrreducibleFactor {
    FactorKind kind = FactorKind::binomial;
    std::uint32_t degree = 0;  // s for binomials, 2t for trinomials
    std::uint32_t t = 0;       // binomials: s; trinomials: half-degree
    Fq constant{};             // binomials: c with factor = x^s - c
    Fq2 a{};                   // trinomials: defining element alpha^(ul')
    Fq mid{};                  // trinomials: a + a^q (nonzero by construction)
    Fq norm{};                 // trinomials: a^(q+1)
    // Label of the factor in the generating product. The value depends on
    // which generator alpha the tower picked; only nu2(u) is intrinsic.
    std::uint64_t u = 0;
    std::optional<std::uint32_t> nu2u;  // recorded for conjugate-pair factors
};

Poly factor_poly(const FieldTower& t, const IrreducibleFactor& f);

// Binomial-only case product; throws CaseMismatchError on mixed parameters.
std::vector<IrreducibleFactor> factor_binomial_case(const CaseParameters& params,
                                                    const FieldTower& tower);

// The label set S_t: u in [1, gcd(n, q^2-1)] with gcd(u, t) = 1, 2^r not
// dividing u, and u < (qu mod gcd(n, q^2-1)). Throws InvalidArgumentError
// unless t | m', CaseMismatchError outside the mixed case.
std::vector<std::uint64_t> s_t_set(std::uint64_t t, const CaseParameters& params);

std::vector<IrreducibleFactor> factor_mixed_case(const CaseParameters& params,
                                                 const FieldTower& tower);

// Case dispatch; result sorted by (degree, coefficient-vector encoding).
std::vector<IrreducibleFactor> factor_xn_minus_1(const CaseParameters& params,
                                                 const FieldTower& tower);

struct CountPrediction {
    std::uint32_t degree = 0;
    FactorKind kind = FactorKind::binomial;
    // Set on the refined per-nu2(u) trinomial formula. Those entries count
    // labels u rather than factors and are audited against measured counts
    // instead of asserted; see the verification report.
    std::optional<std::uint32_t> nu2u;
    std::uint64_t count = 0;
};

// Closed-form factor counts; no factorization is performed.
std::vector<CountPrediction> predicted_counts(const CaseParameters& params);

// Independent oracle: partitions Z_n into multiply-by-q orbits and expands
// prod (x - rho^i) over a splitting field F_{q^s}. Works for any n coprime
// to q; throws OracleOutOfRangeError when s = ord_n(q) exceeds 12.
std::vector<Poly> coset_oracle(std::uint32_t n, const FieldTower& tower);

inline constexpr std::uint32_t kCosetOracleDegreeCap = 12;

}  // namespace cycloweight

#endif
