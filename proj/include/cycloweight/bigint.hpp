// bigint.hpp -- unsigned arbitrary-precision integers for weight counts.
//
// Weight distributions carry counts like (q-1)^t and q^k that overflow 64
// bits already at modest dimensions, so counts are kept exact here and only
// converted to floating point at the channel-probability boundary.
#ifndef CYCLOWEIGHT_BIGINT_HPP
#define CYCLOWEIGHT_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cycloweight {

class BigUInt {
public:
    BigUInt() = default;  // zero
    BigUInt(std::uint64_t v);

    static BigUInt from_decimal(std::string_view s);  // throws ParseError
    static BigUInt pow(const BigUInt& base, std::uint64_t exp);

    bool is_zero() const { return limbs_.empty(); }

    BigUInt& operator+=(const BigUInt& o);
    friend BigUInt operator+(BigUInt a, const BigUInt& b) { return a += b; }
    friend BigUInt operator*(const BigUInt& a, const BigUInt& b);
    BigUInt& operator*=(const BigUInt& o) { return *this = *this * o; }

    BigUInt& mul_small(std::uint32_t m);
    BigUInt& add_small(std::uint32_t a);
    BigUInt& sub_small(std::uint32_t s);     // throws InvalidArgumentError on underflow
    std::uint32_t divmod_small(std::uint32_t d);  // in-place quotient, returns remainder

    friend bool operator==(const BigUInt&, const BigUInt&) = default;
    friend std::strong_ordering operator<=>(const BigUInt& a, const BigUInt& b);

    std::size_t bit_length() const;
    bool bit(std::size_t i) const;

    std::string to_decimal() const;
    long double to_long_double() const;

private:
    void trim();
    std::vector<std::uint32_t> limbs_;  // little-endian; no trailing zero limbs
};

}  // namespace cycloweight

#endif
