#include "cycloweight/bigint.hpp"

#include <algorithm>

#include "cycloweight/errors.hpp"

namespace cycloweight {

BigUInt::BigUInt(std::uint64_t v) {
    if (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
}

void BigUInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUInt& BigUInt::operator+=(const BigUInt& o) {
    if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t s = carry + limbs_[i];
        if (i < o.limbs_.size()) s += o.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUInt operator*(const BigUInt& a, const BigUInt& b) {
    BigUInt r;
    if (a.is_zero() || b.is_zero()) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] +
                                static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

BigUInt& BigUInt::mul_small(std::uint32_t m) {
    if (m == 0) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& l : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(l) * m + carry;
        l = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUInt& BigUInt::add_small(std::uint32_t a) {
    std::uint64_t carry = a;
    for (std::size_t i = 0; carry && i < limbs_.size(); ++i) {
        std::uint64_t cur = limbs_[i] + carry;
        limbs_[i] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUInt& BigUInt::sub_small(std::uint32_t s) {
    if (s == 0) return *this;
    if (limbs_.empty()) throw InvalidArgumentError("BigUInt underflow");
    std::int64_t borrow = s;
    for (std::size_t i = 0; borrow && i < limbs_.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow;
        if (cur < 0) {
            limbs_[i] = static_cast<std::uint32_t>(cur + (1LL << 32));
            borrow = 1;
        } else {
            limbs_[i] = static_cast<std::uint32_t>(cur);
            borrow = 0;
        }
    }
    if (borrow) throw InvalidArgumentError("BigUInt underflow");
    trim();
    return *this;
}

std::uint32_t BigUInt::divmod_small(std::uint32_t d) {
    if (d == 0) throw DivisionByZeroError("BigUInt division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

std::strong_ordering operator<=>(const BigUInt& a, const BigUInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    return std::strong_ordering::equal;
}

BigUInt BigUInt::pow(const BigUInt& base, std::uint64_t exp) {
    BigUInt r(1), b = base;
    while (exp) {
        if (exp & 1) r *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return r;
}

BigUInt BigUInt::from_decimal(std::string_view s) {
    if (s.empty()) throw ParseError("empty integer literal");
    BigUInt r;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("bad digit in integer literal");
        r.mul_small(10).add_small(static_cast<std::uint32_t>(c - '0'));
    }
    return r;
}

std::size_t BigUInt::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool BigUInt::bit(std::size_t i) const {
    std::size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

std::string BigUInt::to_decimal() const {
    if (is_zero()) return "0";
    BigUInt tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        std::uint32_t chunk = tmp.divmod_small(1000000000u);
        if (tmp.is_zero()) {
            out.insert(0, std::to_string(chunk));
        } else {
            std::string part = std::to_string(chunk);
            out.insert(0, std::string(9 - part.size(), '0') + part);
        }
    }
    return out;
}

long double BigUInt::to_long_double() const {
    long double v = 0.0L;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        v = v * 4294967296.0L + static_cast<long double>(limbs_[i]);
    return v;
}

}  // namespace cycloweight
