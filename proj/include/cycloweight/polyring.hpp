// polyring.hpp -- univariate polynomials over F_q and the quotient ring
// F_q[x]/(x^n - 1): sparse representation, exact division, codeword
// synthesis, Hamming weight, text rendering and parsing.
#ifndef CYCLOWEIGHT_POLYRING_HPP
#define CYCLOWEIGHT_POLYRING_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "cycloweight/gfield.hpp"

namespace cycloweight {

// Sparse polynomial: degree -> nonzero coefficient. Generator polynomials
// have n/t terms but degree up to n-1, so a dense vector would mostly hold
// zeros at interesting lengths.
struct Poly {
    std::map<std::uint32_t, Fq> terms;

    bool is_zero() const { return terms.empty(); }
    // -1 sentinel for the zero polynomial.
    std::int64_t degree() const {
        return terms.empty() ? -1 : static_cast<std::int64_t>(terms.rbegin()->first);
    }
    friend bool operator==(const Poly&, const Poly&) = default;
};

Poly poly_one(const FieldTower& t);
Poly poly_monomial(Fq c, std::uint32_t deg);
// x^n - 1
Poly poly_xn_minus_1(const FieldTower& t, std::uint32_t n);

Poly poly_add(const FieldTower& t, const Poly& f, const Poly& g);
Poly poly_sub(const FieldTower& t, const Poly& f, const Poly& g);
Poly poly_scale(const FieldTower& t, Fq c, const Poly& f);
Poly poly_mul(const FieldTower& t, const Poly& f, const Poly& g);

// Exact division; throws RemainderNonzeroError if g does not divide f and
// DivisionByZeroError for g = 0.
Poly poly_div_exact(const FieldTower& t, const Poly& f, const Poly& g);

// g = (x^n - 1)/h for a proper divisor h (0 < deg h < n); throws
// InvalidArgumentError for degenerate h and RemainderNonzeroError if h does
// not divide x^n - 1.
Poly check_to_generator(const FieldTower& t, std::uint32_t n, const Poly& h);

// Message encoding: sum of message[j] * x^j * g. Requires message.size() ==
// n - deg g (DimensionMismatchError otherwise).
Poly codeword(const FieldTower& t, std::span<const Fq> message, const Poly& g,
              std::uint32_t n);

std::uint32_t hamming_weight(const Poly& f);

// Text form matching the catalog tables: descending degree, canonical
// integer encodings, e.g. "x^2 + 8x + 1". Zero renders as "0".
std::string render_poly(const Poly& f);
Poly parse_poly(const FieldTower& t, std::string_view text);

// Total order: by degree, then coefficient vectors compared from the top
// degree down by encoding (the order of the integer sum(c_i q^i)).
int poly_compare(const Poly& f, const Poly& g);

}  // namespace cycloweight

#endif
