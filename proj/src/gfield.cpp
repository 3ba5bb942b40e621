#include "cycloweight/gfield.hpp"

#include <algorithm>

#include "cycloweight/errors.hpp"

namespace cycloweight {

namespace {

// --- dense polynomial arithmetic over F_p, used only during tower
// construction (modulus search) ---

using PPoly = std::vector<std::uint32_t>;  // coeffs mod p, low degree first

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    // reduce by monic f
    std::size_t df = f.size() - 1;
    for (std::size_t i = prod.size(); i-- > df;) {
        std::uint32_t c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < df; ++j) {
            std::uint64_t sub = static_cast<std::uint64_t>(c) * f[j] % p;
            prod[i - df + j] = static_cast<std::uint32_t>(
                (prod[i - df + j] + p - sub) % p);
        }
    }
    prod.resize(df);
    ptrim(prod);
    return prod;
}

PPoly ppowmod(PPoly base, std::uint64_t e, const PPoly& f, std::uint32_t p) {
    PPoly r{1};
    while (e) {
        if (e & 1) r = pmulmod(r, base, f, p);
        e >>= 1;
        if (e) base = pmulmod(base, base, f, p);
    }
    return r;
}

std::uint32_t pinv_scalar(std::uint32_t a, std::uint32_t p) {
    // Fermat; p prime, a != 0.
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

PPoly pmod(PPoly a, const PPoly& b, std::uint32_t p) {
    std::size_t db = b.size() - 1;
    std::uint32_t lead_inv = pinv_scalar(b.back(), p);
    while (a.size() > db) {
        std::uint32_t c = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a.back()) * lead_inv % p);
        if (c) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t sub = static_cast<std::uint64_t>(c) * b[j] % p;
                a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - sub) % p);
            }
        }
        a.pop_back();
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

PPoly pgcd(PPoly a, PPoly b, std::uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin irreducibility test for a monic degree-e polynomial over F_p.
bool irreducible_over_fp(const PPoly& f, std::uint32_t p) {
    std::size_t e = f.size() - 1;
    PPoly x{0, 1};
    // frob[i] = x^(p^(i+1)) mod f
    std::vector<PPoly> frob(e);
    frob[0] = ppowmod(x, p, f, p);
    for (std::size_t i = 1; i < e; ++i) frob[i] = ppowmod(frob[i - 1], p, f, p);
    if (frob[e - 1] != x) return false;
    for (const auto& pf : numth::factorize(e)) {
        std::size_t idx = e / pf.prime;  // x^(p^idx)
        PPoly diff = frob[idx - 1];
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        ptrim(diff);
        PPoly g = pgcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

std::vector<std::uint32_t> FieldTower::digits(Fq a) const {
    std::vector<std::uint32_t> d(e_);
    std::uint32_t v = a.v;
    for (std::uint32_t i = 0; i < e_; ++i) {
        d[i] = v % p_;
        v /= p_;
    }
    return d;
}

Fq FieldTower::from_digits(const std::uint32_t* d) const {
    std::uint32_t v = 0;
    for (std::uint32_t i = e_; i-- > 0;) v = v * p_ + d[i];
    return Fq{v};
}

Fq FieldTower::add(Fq a, Fq b) const {
    if (e_ == 1) return Fq{static_cast<std::uint32_t>((a.v + b.v) % p_)};
    if (p_ == 2) return Fq{a.v ^ b.v};
    auto da = digits(a), db = digits(b);
    for (std::uint32_t i = 0; i < e_; ++i) da[i] = (da[i] + db[i]) % p_;
    return from_digits(da.data());
}

Fq FieldTower::neg(Fq a) const {
    if (e_ == 1) return Fq{a.v ? p_ - a.v : 0};
    if (p_ == 2) return a;
    auto da = digits(a);
    for (auto& d : da) d = d ? p_ - d : 0;
    return from_digits(da.data());
}

Fq FieldTower::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FieldTower::mul(Fq a, Fq b) const {
    if (e_ == 1)
        return Fq{static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a.v) * b.v % p_)};
    if (a.v == 0 || b.v == 0) return Fq{0};
    auto da = digits(a), db = digits(b);
    std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (!da[i]) continue;
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    }
    for (std::uint32_t i = 2 * e_ - 2; i >= e_; --i) {
        std::uint32_t c = prod[i];
        if (!c) continue;
        const auto& row = reduction_rows_[i - e_];
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[j] = static_cast<std::uint32_t>(
                (prod[j] + static_cast<std::uint64_t>(c) * row[j]) % p_);
    }
    return from_digits(prod.data());
}

Fq FieldTower::pow(Fq a, std::uint64_t k) const {
    Fq r = one(), b = a;
    while (k) {
        if (k & 1) r = mul(r, b);
        k >>= 1;
        if (k) b = mul(b, b);
    }
    return r;
}

Fq FieldTower::inv(Fq a) const {
    if (a.v == 0) throw DivisionByZeroError("inverse of zero in F_q");
    return pow(a, q_ - 2);
}

Fq FieldTower::from_int(std::uint64_t v) const {
    if (e_ == 1) return Fq{static_cast<std::uint32_t>(v % p_)};
    if (v >= q_)
        throw InputRangeError("element encoding out of range for F_q");
    return Fq{static_cast<std::uint32_t>(v)};
}

Fq2 FieldTower::add2(Fq2 a, Fq2 b) const {
    return Fq2{add(a.lo, b.lo), add(a.hi, b.hi)};
}

Fq2 FieldTower::neg2(Fq2 a) const { return Fq2{neg(a.lo), neg(a.hi)}; }

Fq2 FieldTower::sub2(Fq2 a, Fq2 b) const { return add2(a, neg2(b)); }

Fq2 FieldTower::mul2(Fq2 a, Fq2 b) const {
    // (lo1 + hi1 b)(lo2 + hi2 b) with b^2 = -c1 b - c0.
    Fq c0 = ext_modulus_[0], c1 = ext_modulus_[1];
    Fq ll = mul(a.lo, b.lo);
    Fq hh = mul(a.hi, b.hi);
    Fq cross = add(mul(a.lo, b.hi), mul(a.hi, b.lo));
    return Fq2{sub(ll, mul(hh, c0)), sub(cross, mul(hh, c1))};
}

Fq2 FieldTower::pow2(Fq2 a, std::uint64_t k) const {
    Fq2 r = one2(), b = a;
    while (k) {
        if (k & 1) r = mul2(r, b);
        k >>= 1;
        if (k) b = mul2(b, b);
    }
    return r;
}

Fq2 FieldTower::inv2(Fq2 a) const {
    if (a == zero2()) throw DivisionByZeroError("inverse of zero in F_{q^2}");
    return pow2(a, ext_group_order() - 1);
}

Fq2 FieldTower::frobenius(Fq2 x) const { return pow2(x, q_); }

Fq FieldTower::descend(Fq2 x) const {
    if (x.hi.v != 0)
        throw NotInBaseFieldError("element is not fixed by Frobenius");
    return x.lo;
}

std::uint64_t FieldTower::element_order(Fq x) const {
    if (x.v == 0) throw InvalidArgumentError("order of zero is undefined");
    std::uint64_t o = base_group_order();
    for (const auto& f : base_order_factors_)
        for (std::uint32_t i = 0; i < f.exponent; ++i) {
            if (o % f.prime == 0 && pow(x, o / f.prime) == one())
                o /= f.prime;
            else
                break;
        }
    return o;
}

std::uint64_t FieldTower::element_order2(Fq2 x) const {
    if (x == zero2()) throw InvalidArgumentError("order of zero is undefined");
    std::uint64_t o = ext_group_order();
    for (const auto& f : ext_order_factors_)
        for (std::uint32_t i = 0; i < f.exponent; ++i) {
            if (o % f.prime == 0 && pow2(x, o / f.prime) == one2())
                o /= f.prime;
            else
                break;
        }
    return o;
}

FieldTower FieldTower::build(std::uint32_t p, std::uint32_t e) {
    return build_impl(p, e, nullptr);
}

FieldTower FieldTower::build_with_alpha(std::uint32_t p, std::uint32_t e,
                                        std::uint64_t alpha_encoding) {
    return build_impl(p, e, &alpha_encoding);
}

FieldTower FieldTower::build_impl(std::uint32_t p, std::uint32_t e,
                                  const std::uint64_t* forced_alpha) {
    if (!numth::is_prime(p)) throw InvalidArgumentError("p must be prime");
    if (e < 1) throw InvalidArgumentError("e must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > 1'000'000) throw InputRangeError("q = p^e must be <= 10^6");
    }

    FieldTower t;
    t.p_ = p;
    t.e_ = e;
    t.q_ = static_cast<std::uint32_t>(q);

    // Canonical base modulus: smallest coefficient-vector encoding among
    // monic irreducibles of degree e. Degree 1 collapses to x.
    if (e == 1) {
        t.base_modulus_ = {0, 1};
    } else {
        for (std::uint64_t v = 0;; ++v) {
            if (v >= q) throw InconsistentParametersError("no irreducible base modulus found");
            PPoly cand(e + 1, 0);
            std::uint64_t w = v;
            for (std::uint32_t i = 0; i < e; ++i) {
                cand[i] = static_cast<std::uint32_t>(w % p);
                w /= p;
            }
            cand[e] = 1;
            if (irreducible_over_fp(cand, p)) {
                t.base_modulus_ = cand;
                break;
            }
        }
        // reduction_rows_[j] = x^(e+j) mod base modulus
        t.reduction_rows_.resize(e - 1);
        std::vector<std::uint32_t> row(e);
        for (std::uint32_t i = 0; i < e; ++i)
            row[i] = t.base_modulus_[i] ? p - t.base_modulus_[i] : 0;
        t.reduction_rows_[0] = row;
        for (std::uint32_t j = 1; j + 1 < e; ++j) {
            std::vector<std::uint32_t> next(e, 0);
            std::uint32_t overflow = row[e - 1];
            for (std::uint32_t i = e - 1; i >= 1; --i) next[i] = row[i - 1];
            next[0] = 0;
            if (overflow)
                for (std::uint32_t i = 0; i < e; ++i)
                    next[i] = static_cast<std::uint32_t>(
                        (next[i] +
                         static_cast<std::uint64_t>(overflow) * t.reduction_rows_[0][i]) %
                        p);
            t.reduction_rows_[j] = next;
            row = std::move(next);
        }
    }

    // Canonical extension modulus: smallest (c0, c1) with x^2 + c1 x + c0
    // irreducible over F_q. Irreducibility: gcd(x^q - x, f) = 1, evaluated
    // without building the full gcd -- x^q mod f has degree <= 1.
    {
        auto quad_irreducible = [&t](Fq c0, Fq c1) {
            // Compute X^q mod (x^2 + c1 x + c0) by square-and-multiply on
            // pairs (u0, u1) = u0 + u1 X.
            auto qmul = [&](std::pair<Fq, Fq> a, std::pair<Fq, Fq> b) {
                Fq u0w0 = t.mul(a.first, b.first);
                Fq u1w1 = t.mul(a.second, b.second);
                Fq cr = t.add(t.mul(a.first, b.second), t.mul(a.second, b.first));
                return std::pair<Fq, Fq>{t.sub(u0w0, t.mul(u1w1, c0)),
                                         t.sub(cr, t.mul(u1w1, c1))};
            };
            std::pair<Fq, Fq> r{t.one(), t.zero()}, base{t.zero(), t.one()};
            std::uint64_t k = t.q_;
            while (k) {
                if (k & 1) r = qmul(r, base);
                k >>= 1;
                if (k) base = qmul(base, base);
            }
            Fq g0 = r.first, g1 = t.sub(r.second, t.one());
            if (g0.v == 0 && g1.v == 0) return false;  // f splits
            if (g1.v == 0) return true;                // gcd is 1
            // single common-root test at x = -g0/g1
            Fq root = t.neg(t.mul(g0, t.inv(g1)));
            Fq val = t.add(t.add(t.mul(root, root), t.mul(c1, root)), c0);
            return val.v != 0;
        };
        bool found = false;
        for (std::uint64_t w = 0; w < q * q && !found; ++w) {
            Fq c0{static_cast<std::uint32_t>(w % q)};
            Fq c1{static_cast<std::uint32_t>(w / q)};
            if (quad_irreducible(c0, c1)) {
                t.ext_modulus_ = {c0, c1, t.one()};
                found = true;
            }
        }
        if (!found) throw InconsistentParametersError("no irreducible quadratic found");
    }

    t.base_order_factors_ = numth::factorize(q - 1);
    t.ext_order_factors_ = numth::factorize(q * q - 1);

    // alpha: smallest-encoding generator of F_{q^2}^* unless injected.
    std::uint64_t group = q * q - 1;
    auto is_generator = [&](Fq2 x) {
        if (x == t.zero2()) return false;
        for (const auto& f : t.ext_order_factors_)
            if (t.pow2(x, group / f.prime) == t.one2()) return false;
        return true;
    };
    if (forced_alpha) {
        Fq2 a = t.decode2(*forced_alpha);
        if (*forced_alpha >= q * q || !is_generator(a))
            throw InvalidArgumentError("injected alpha does not generate F_{q^2}^*");
        t.alpha_ = a;
    } else {
        for (std::uint64_t v = 1;; ++v) {
            if (v >= q * q)
                throw InconsistentParametersError("no generator of F_{q^2}^* found");
            Fq2 cand = t.decode2(v);
            if (is_generator(cand)) {
                t.alpha_ = cand;
                break;
            }
        }
    }
    t.theta_ = t.descend(t.pow2(t.alpha_, q + 1));
    return t;
}

}  // namespace cycloweight
