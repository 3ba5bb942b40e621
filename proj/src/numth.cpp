#include "cycloweight/numth.hpp"

#include <algorithm>
#include <numeric>

#include "cycloweight/errors.hpp"

namespace cycloweight::numth {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool miller_rabin(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    std::uint64_t x = 2, y = 2, c = 1, d = 1;
    while (true) {
        x = 2;
        y = 2;
        d = 1;
        auto step = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
        ++c;
    }
}

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t bound = 1'000'000;
        std::vector<bool> sieve(bound + 1, true);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= bound; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= bound; j += i)
                sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

}  // namespace

bool is_prime(std::uint64_t m) { return miller_rabin(m); }

PrimeFactorization factorize(std::uint64_t m) {
    if (m < 1 || m > kFactorizeCap)
        throw InputRangeError("factorize: input must be in [1, 10^12]");
    PrimeFactorization out;
    for (std::uint32_t p : small_primes()) {
        if (static_cast<std::uint64_t>(p) * p > m) break;
        if (m % p == 0) {
            std::uint32_t e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            out.push_back({p, e});
        }
    }
    if (m > 1) {
        if (miller_rabin(m)) {
            out.push_back({m, 1});
        } else {
            // Under the 10^12 cap trial division already strips everything
            // composite, but keep a rho fallback for the remaining cofactor.
            std::uint64_t d = pollard_rho(m);
            std::uint64_t a = d, b = m / d;
            if (a > b) std::swap(a, b);
            std::uint32_t ea = 0;
            std::uint64_t mm = a * b;
            while (mm % a == 0) { mm /= a; ++ea; }
            out.push_back({a, ea});
            if (mm > 1) out.push_back({mm, 1});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PrimeFactor& x, const PrimeFactor& y) { return x.prime < y.prime; });
    return out;
}

std::uint32_t nu(std::uint64_t p, std::uint64_t m) {
    if (!is_prime(p)) throw InvalidArgumentError("nu: p must be prime");
    if (m < 1) throw InputRangeError("nu: m must be >= 1");
    std::uint32_t e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

std::uint64_t radical(std::uint64_t m) {
    std::uint64_t r = 1;
    for (const auto& f : factorize(m)) r *= f.prime;
    return r;
}

std::uint64_t div_part(std::uint64_t a, std::uint64_t b) {
    if (a < 1 || b < 1) throw InputRangeError("div_part: arguments must be >= 1");
    return a / std::gcd(a, b);
}

std::uint64_t euler_phi(std::uint64_t t) {
    std::uint64_t r = t;
    for (const auto& f : factorize(t)) r = r / f.prime * (f.prime - 1);
    return r;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
    std::vector<std::uint64_t> out{1};
    for (const auto& f : factorize(m)) {
        std::size_t count = out.size();
        std::uint64_t pe = 1;
        for (std::uint32_t e = 1; e <= f.exponent; ++e) {
            pe *= f.prime;
            for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cycloweight::numth
