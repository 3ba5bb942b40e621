// gfield.hpp -- F_q (q = p^e) and its quadratic extension F_{q^2} with a
// compatible generator pair: alpha generates F_{q^2}^* and theta = alpha^(q+1)
// generates F_q^*.
//
// Elements carry a canonical integer encoding (sum of coeffs[i]*p^i for the
// base field, lo + hi*q for the extension); every "smallest element" choice
// below -- moduli, alpha -- is taken in this total order, so tower
// construction is deterministic and output never depends on generator luck.
#ifndef CYCLOWEIGHT_GFIELD_HPP
#define CYCLOWEIGHT_GFIELD_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "cycloweight/numth.hpp"

namespace cycloweight {

// Element of F_q, stored as its canonical encoding in [0, q).
struct Fq {
    std::uint32_t v = 0;
    friend bool operator==(Fq, Fq) = default;
    friend auto operator<=>(Fq a, Fq b) { return a.v <=> b.v; }
};

// Element lo + hi*beta of F_{q^2}, beta the residue class of the extension
// variable.
struct Fq2 {
    Fq lo, hi;
    friend bool operator==(Fq2, Fq2) = default;
};

class FieldTower {
public:
    // Deterministic construction; p prime, p^e <= 10^6.
    static FieldTower build(std::uint32_t p, std::uint32_t e);
    // Same but with a caller-chosen generator of F_{q^2}^* (testing hook);
    // throws InvalidArgumentError if the encoding is not a generator.
    static FieldTower build_with_alpha(std::uint32_t p, std::uint32_t e,
                                       std::uint64_t alpha_encoding);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }
    std::uint64_t base_group_order() const { return q_ - 1; }
    std::uint64_t ext_group_order() const {
        return static_cast<std::uint64_t>(q_) * q_ - 1;
    }

    // Monic irreducible moduli: degree e over F_p, degree 2 over F_q.
    const std::vector<std::uint32_t>& base_modulus() const { return base_modulus_; }
    const std::array<Fq, 3>& ext_modulus() const { return ext_modulus_; }

    Fq2 alpha() const { return alpha_; }
    Fq theta() const { return theta_; }

    // --- base field arithmetic ---
    Fq zero() const { return Fq{0}; }
    Fq one() const { return Fq{1}; }
    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const;
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;
    Fq inv(Fq a) const;  // throws DivisionByZeroError at 0
    Fq pow(Fq a, std::uint64_t k) const;
    // Reduce an integer into the prime subfield (prime q) or accept an
    // encoding (< q) verbatim; used by the polynomial text parser.
    Fq from_int(std::uint64_t v) const;

    // --- extension field arithmetic ---
    Fq2 zero2() const { return Fq2{}; }
    Fq2 one2() const { return Fq2{one(), zero()}; }
    Fq2 add2(Fq2 a, Fq2 b) const;
    Fq2 sub2(Fq2 a, Fq2 b) const;
    Fq2 neg2(Fq2 a) const;
    Fq2 mul2(Fq2 a, Fq2 b) const;
    Fq2 inv2(Fq2 a) const;
    Fq2 pow2(Fq2 a, std::uint64_t k) const;
    Fq2 embed(Fq a) const { return Fq2{a, zero()}; }
    // x -> x^q. Applying twice is the identity.
    Fq2 frobenius(Fq2 x) const;
    // Canonical preimage of a Frobenius-fixed element; throws
    // NotInBaseFieldError otherwise.
    Fq descend(Fq2 x) const;

    std::uint64_t encode2(Fq2 x) const {
        return x.lo.v + static_cast<std::uint64_t>(x.hi.v) * q_;
    }
    Fq2 decode2(std::uint64_t enc) const {
        return Fq2{Fq{static_cast<std::uint32_t>(enc % q_)},
                   Fq{static_cast<std::uint32_t>(enc / q_)}};
    }

    // Multiplicative orders, computed by dividing the group order down by
    // its prime factors. Throw InvalidArgumentError at 0.
    std::uint64_t element_order(Fq x) const;
    std::uint64_t element_order2(Fq2 x) const;

    const numth::PrimeFactorization& base_order_factors() const {
        return base_order_factors_;
    }
    const numth::PrimeFactorization& ext_order_factors() const {
        return ext_order_factors_;
    }

private:
    FieldTower() = default;
    static FieldTower build_impl(std::uint32_t p, std::uint32_t e,
                                 const std::uint64_t* forced_alpha);

    std::vector<std::uint32_t> digits(Fq a) const;  // e residues mod p
    Fq from_digits(const std::uint32_t* d) const;

    std::uint32_t p_ = 0, e_ = 0, q_ = 0;
    std::vector<std::uint32_t> base_modulus_;  // e+1 coeffs over F_p, low first
    std::array<Fq, 3> ext_modulus_{};          // c0 + c1 x + x^2
    Fq2 alpha_{};
    Fq theta_{};
    numth::PrimeFactorization base_order_factors_;
    numth::PrimeFactorization ext_order_factors_;
    // x^(e+i) mod base modulus for i in [0, e-2], used to fold products.
    std::vector<std::vector<std::uint32_t>> reduction_rows_;
};

}  // namespace cycloweight

#endif
