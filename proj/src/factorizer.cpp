#include "cycloweight/factorizer.hpp"

#include <algorithm>
#include <numeric>

#include "cycloweight/bigint.hpp"
#include "cycloweight/errors.hpp"

namespace cycloweight {

CaseParameters case_parameters(std::uint32_t n, std::uint32_t q) {
    if (n < 1) throw InputRangeError("n must be >= 1");
    auto qf = numth::factorize(q);
    if (qf.size() != 1) throw InvalidArgumentError("q must be a prime power");
    if (std::gcd<std::uint64_t>(n, q) != 1)
        throw InvalidLengthError("gcd(n, q) != 1");
    if ((q - 1) % numth::radical(n) != 0)
        throw OutOfRegimeError("rad(n) does not divide q-1");

    CaseParameters p;
    p.n = n;
    p.q = q;
    std::uint64_t q2m1 = static_cast<std::uint64_t>(q) * q - 1;
    p.m = numth::div_part(n, q - 1);
    p.l = numth::div_part(q - 1, n);
    p.m_prime = numth::div_part(n, q2m1);
    p.l_prime = numth::div_part(q2m1, n);
    p.gcd_n_qm1 = std::gcd<std::uint64_t>(n, q - 1);
    p.gcd_n_q2m1 = std::gcd<std::uint64_t>(n, q2m1);
    if (n % 8 == 0 && q % 4 == 3) {
        p.tag = CaseTag::mixed;
        p.r = std::min(numth::nu(2, n / 2), numth::nu(2, q + 1));
    }
    return p;
}

Poly factor_poly(const FieldTower& t, const IrreducibleFactor& f) {
    Poly poly;
    poly.terms.emplace(f.degree, t.one());
    if (f.kind == FactorKind::binomial) {
        Fq c = t.neg(f.constant);
        if (c.v != 0) poly.terms.emplace(0, c);
    } else {
        Fq mid = t.neg(f.mid);
        if (mid.v != 0) poly.terms.emplace(f.t, mid);
        if (f.norm.v != 0) poly.terms.emplace(0, f.norm);
    }
    return poly;
}

namespace {

void sort_factors(const FieldTower& tower, std::vector<IrreducibleFactor>& fs) {
    std::vector<std::pair<Poly, IrreducibleFactor>> keyed;
    keyed.reserve(fs.size());
    for (auto& f : fs) keyed.emplace_back(factor_poly(tower, f), f);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        return poly_compare(a.first, b.first) < 0;
    });
    fs.clear();
    for (auto& [p, f] : keyed) fs.push_back(f);
}

}  // namespace

std::vector<IrreducibleFactor> factor_binomial_case(const CaseParameters& params,
                                                    const FieldTower& tower) {
    if (params.tag != CaseTag::binomial_only)
        throw CaseMismatchError("parameters belong to the mixed case");
    std::uint64_t N = params.gcd_n_qm1;
    Fq theta_l = tower.pow(tower.theta(), params.l);
    std::vector<IrreducibleFactor> out;
    // theta^(ul) for u = 1..N
    std::vector<Fq> powers(N + 1);
    powers[0] = tower.one();
    for (std::uint64_t u = 1; u <= N; ++u) powers[u] = tower.mul(powers[u - 1], theta_l);
    for (std::uint64_t t : numth::divisors(params.m)) {
        for (std::uint64_t u = 1; u <= N; ++u) {
            if (std::gcd(u, t) != 1) continue;
            IrreducibleFactor f;
            f.kind = FactorKind::binomial;
            f.degree = static_cast<std::uint32_t>(t);
            f.t = f.degree;
            f.constant = powers[u];
            f.u = u;
            out.push_back(f);
        }
    }
    sort_factors(tower, out);
    return out;
}

std::vector<std::uint64_t> s_t_set(std::uint64_t t, const CaseParameters& params) {
    if (params.tag != CaseTag::mixed)
        throw CaseMismatchError("S_t is defined only in the mixed case");
    if (t == 0 || params.m_prime % t != 0)
        throw InvalidArgumentError("t must divide m'");
    std::uint64_t N = params.gcd_n_q2m1;
    std::uint64_t two_r = 1ULL << params.r;
    std::vector<std::uint64_t> out;
    for (std::uint64_t u = 1; u <= N; ++u) {
        if (std::gcd(u, t) != 1) continue;
        if (u % two_r == 0) continue;
        if (u < (params.q * u) % N) out.push_back(u);
    }
    return out;
}

std::vector<IrreducibleFactor> factor_mixed_case(const CaseParameters& params,
                                                 const FieldTower& tower) {
    if (params.tag != CaseTag::mixed)
        throw CaseMismatchError("parameters belong to the binomial-only case");
    std::vector<IrreducibleFactor> out;

    // Binomials x^t - theta^(wl) over odd t | m'.
    std::uint64_t N1 = params.gcd_n_qm1;
    Fq theta_l = tower.pow(tower.theta(), params.l);
    std::vector<Fq> powers(N1 + 1);
    powers[0] = tower.one();
    for (std::uint64_t w = 1; w <= N1; ++w) powers[w] = tower.mul(powers[w - 1], theta_l);
    for (std::uint64_t t : numth::divisors(params.m_prime)) {
        if (t % 2 == 0) continue;
        for (std::uint64_t w = 1; w <= N1; ++w) {
            if (std::gcd(w, t) != 1) continue;
            IrreducibleFactor f;
            f.kind = FactorKind::binomial;
            f.degree = static_cast<std::uint32_t>(t);
            f.t = f.degree;
            f.constant = powers[w];
            f.u = w;
            out.push_back(f);
        }
    }

    // Conjugate-pair family over u in S_t: x^(2t) - (a + a^q)x^t + a^(q+1),
    // emitted as a binomial of degree 2t whenever the middle coefficient
    // vanishes. Classification is always by the computed coefficient.
    for (std::uint64_t t : numth::divisors(params.m_prime)) {
        for (std::uint64_t u : s_t_set(t, params)) {
            Fq2 a = tower.pow2(tower.alpha(), u * params.l_prime);
            Fq mid = tower.descend(tower.add2(a, tower.frobenius(a)));
            Fq norm = tower.descend(tower.pow2(a, tower.q() + 1));
            std::uint32_t nu2 = 0;
            for (std::uint64_t v = u; v % 2 == 0; v /= 2) ++nu2;
            IrreducibleFactor f;
            f.degree = static_cast<std::uint32_t>(2 * t);
            f.u = u;
            f.nu2u = nu2;
            if (mid.v == 0) {
                f.kind = FactorKind::binomial;
                f.t = f.degree;
                f.constant = tower.neg(norm);
            } else {
                if (nu2 > params.r - 2)
                    throw InconsistentParametersError(
                        "proper trinomial with nu2(u) > r-2");
                f.kind = FactorKind::trinomial;
                f.t = static_cast<std::uint32_t>(t);
                f.a = a;
                f.mid = mid;
                f.norm = norm;
            }
            out.push_back(f);
        }
    }
    sort_factors(tower, out);
    return out;
}

std::vector<IrreducibleFactor> factor_xn_minus_1(const CaseParameters& params,
                                                 const FieldTower& tower) {
    return params.tag == CaseTag::mixed ? factor_mixed_case(params, tower)
                                        : factor_binomial_case(params, tower);
}

std::vector<CountPrediction> predicted_counts(const CaseParameters& params) {
    std::vector<CountPrediction> out;
    auto phi_over_t = [](std::uint64_t t, std::uint64_t scale) {
        std::uint64_t num = numth::euler_phi(t) * scale;
        if (num % t != 0)
            throw InconsistentParametersError("phi(t)/t count is not integral");
        return num / t;
    };
    std::uint64_t G = params.gcd_n_qm1;
    if (params.tag == CaseTag::binomial_only) {
        for (std::uint64_t t : numth::divisors(params.m))
            out.push_back({static_cast<std::uint32_t>(t), FactorKind::binomial,
                           std::nullopt, phi_over_t(t, G)});
        return out;
    }
    std::uint64_t two_rm1 = 1ULL << (params.r - 1);
    for (std::uint64_t t : numth::divisors(params.m_prime)) {
        if (t % 2 == 1) {
            out.push_back({static_cast<std::uint32_t>(t), FactorKind::binomial,
                           std::nullopt, phi_over_t(t, G)});
            std::uint64_t num = numth::euler_phi(t) * G;
            if (num % (2 * t) != 0)
                throw InconsistentParametersError("phi(t)/(2t) count is not integral");
            out.push_back({static_cast<std::uint32_t>(2 * t), FactorKind::binomial,
                           std::nullopt, num / (2 * t)});
        }
        std::uint64_t aggregate =
            t % 2 == 0 ? phi_over_t(t, G) * two_rm1 : phi_over_t(t, G) * (two_rm1 - 1);
        out.push_back({static_cast<std::uint32_t>(2 * t), FactorKind::trinomial,
                       std::nullopt, aggregate});
        for (std::uint32_t nu2 = 0; nu2 + 2 <= params.r; ++nu2)
            out.push_back({static_cast<std::uint32_t>(2 * t), FactorKind::trinomial,
                           nu2, phi_over_t(t, G) * (1ULL << (params.r - 1 - nu2))});
    }
    return out;
}

// --- coset oracle ---

namespace {

// Dense polynomials over F_q, low degree first; used for the splitting-field
// modulus search and arithmetic.
using QPoly = std::vector<Fq>;

void qtrim(QPoly& f) {
    while (!f.empty() && f.back().v == 0) f.pop_back();
}

QPoly qmulmod(const FieldTower& t, const QPoly& a, const QPoly& b, const QPoly& f) {
    if (a.empty() || b.empty()) return {};
    QPoly prod(a.size() + b.size() - 1, Fq{0});
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].v == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = t.add(prod[i + j], t.mul(a[i], b[j]));
    }
    std::size_t df = f.size() - 1;
    for (std::size_t i = prod.size(); i-- > df;) {
        Fq c = prod[i];
        if (c.v == 0) continue;
        prod[i] = Fq{0};
        for (std::size_t j = 0; j < df; ++j)
            prod[i - df + j] = t.sub(prod[i - df + j], t.mul(c, f[j]));
    }
    prod.resize(df);
    qtrim(prod);
    return prod;
}

QPoly qpowmod(const FieldTower& t, QPoly base, std::uint64_t e, const QPoly& f) {
    QPoly r{t.one()};
    while (e) {
        if (e & 1) r = qmulmod(t, r, base, f);
        e >>= 1;
        if (e) base = qmulmod(t, base, base, f);
    }
    return r;
}

QPoly qmod(const FieldTower& t, QPoly a, const QPoly& b) {
    std::size_t db = b.size() - 1;
    Fq lead_inv = t.inv(b.back());
    while (a.size() > db) {
        Fq c = t.mul(a.back(), lead_inv);
        if (c.v != 0) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] = t.sub(a[shift + j], t.mul(c, b[j]));
        }
        a.pop_back();
        qtrim(a);
        if (a.empty()) break;
    }
    return a;
}

QPoly qgcd(const FieldTower& t, QPoly a, QPoly b) {
    qtrim(a);
    qtrim(b);
    while (!b.empty()) {
        QPoly r = qmod(t, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool irreducible_over_fq(const FieldTower& t, const QPoly& f) {
    std::size_t s = f.size() - 1;
    QPoly x{t.zero(), t.one()};
    std::vector<QPoly> frob(s);
    frob[0] = qpowmod(t, x, t.q(), f);
    for (std::size_t i = 1; i < s; ++i) frob[i] = qpowmod(t, frob[i - 1], t.q(), f);
    if (frob[s - 1] != x) return false;
    for (const auto& pf : numth::factorize(s)) {
        QPoly diff = frob[s / pf.prime - 1];
        if (diff.size() < 2) diff.resize(2, Fq{0});
        diff[1] = t.sub(diff[1], t.one());
        qtrim(diff);
        if (qgcd(t, f, diff).size() != 1) return false;
    }
    return true;
}

// F_{q^s} as an ad-hoc quotient by the canonical smallest irreducible of
// degree s over F_q.
struct SplittingField {
    const FieldTower& tower;
    std::uint32_t s;
    QPoly modulus;  // monic, degree s

    SplittingField(const FieldTower& t, std::uint32_t s_) : tower(t), s(s_) {
        if (s == 1) {
            modulus = {t.zero(), t.one()};
            return;
        }
        std::uint64_t q = t.q();
        // encodings enumerate coefficient vectors (c_0, ..., c_{s-1})
        for (std::uint64_t v = 0;; ++v) {
            QPoly cand(s + 1, Fq{0});
            std::uint64_t w = v;
            for (std::uint32_t i = 0; i < s; ++i) {
                cand[i] = Fq{static_cast<std::uint32_t>(w % q)};
                w /= q;
            }
            cand[s] = tower.one();
            if (irreducible_over_fq(tower, cand)) {
                modulus = cand;
                break;
            }
            if (v >= q * q * q && v > 1'000'000)
                throw InconsistentParametersError("splitting-field modulus search overran");
        }
    }

    QPoly one() const { return {tower.one()}; }

    QPoly mul(const QPoly& a, const QPoly& b) const {
        return qmulmod(tower, a, b, modulus);
    }

    QPoly pow(QPoly base, const BigUInt& e) const {
        QPoly r = one();
        for (std::size_t i = e.bit_length(); i-- > 0;) {
            r = mul(r, r);
            if (e.bit(i)) r = mul(r, base);
        }
        return r;
    }

    QPoly pow_u64(QPoly base, std::uint64_t e) const {
        return qpowmod(tower, std::move(base), e, modulus);
    }
};

}  // namespace

std::vector<Poly> coset_oracle(std::uint32_t n, const FieldTower& tower) {
    if (n < 1) throw InputRangeError("n must be >= 1");
    if (std::gcd<std::uint64_t>(n, tower.q()) != 1)
        throw InvalidLengthError("gcd(n, q) != 1");
    if (n == 1) {
        Poly f;
        f.terms.emplace(1, tower.one());
        f.terms.emplace(0, tower.neg(tower.one()));
        return {f};
    }

    // s = ord_n(q), the lcm of the coset sizes.
    std::uint32_t s = 0;
    {
        std::uint64_t acc = tower.q() % n;
        for (std::uint32_t k = 1; k <= kCosetOracleDegreeCap; ++k) {
            if (acc == 1 % n) {
                s = k;
                break;
            }
            acc = acc * tower.q() % n;
        }
        if (s == 0)
            throw OracleOutOfRangeError("splitting-field degree exceeds the oracle cap");
    }

    SplittingField field(tower, s);

    // rho: element of multiplicative order exactly n, found deterministically
    // by scanning candidate encodings and projecting into the order-n
    // subgroup.
    BigUInt cofactor = BigUInt::pow(BigUInt(tower.q()), s);
    cofactor.sub_small(1);
    if (cofactor.divmod_small(n) != 0)
        throw InconsistentParametersError("n does not divide q^s - 1");
    auto n_factors = numth::factorize(n);
    QPoly rho;
    for (std::uint64_t v = 1;; ++v) {
        QPoly cand;
        std::uint64_t w = v;
        for (std::uint32_t i = 0; i < s && (w || cand.empty()); ++i) {
            cand.push_back(Fq{static_cast<std::uint32_t>(w % tower.q())});
            w /= tower.q();
        }
        if (w) throw InconsistentParametersError("no element of order n found");
        qtrim(cand);
        if (cand.empty()) continue;
        QPoly y = field.pow(cand, cofactor);
        bool full_order = !y.empty();
        for (const auto& pf : n_factors) {
            if (!full_order) break;
            if (field.pow_u64(y, n / pf.prime) == field.one()) full_order = false;
        }
        if (full_order) {
            rho = y;
            break;
        }
    }

    // powers rho^0 .. rho^(n-1)
    std::vector<QPoly> rho_pow(n);
    rho_pow[0] = field.one();
    for (std::uint32_t i = 1; i < n; ++i) rho_pow[i] = field.mul(rho_pow[i - 1], rho);

    std::vector<Poly> out;
    std::vector<bool> visited(n, false);
    for (std::uint32_t start = 0; start < n; ++start) {
        if (visited[start]) continue;
        std::vector<std::uint32_t> coset;
        std::uint64_t cur = start;
        do {
            visited[cur] = true;
            coset.push_back(static_cast<std::uint32_t>(cur));
            cur = cur * tower.q() % n;
        } while (cur != start);

        // prod over the coset of (X - rho^i), coefficients in F_{q^s}
        std::vector<QPoly> coeffs{field.one()};
        for (std::uint32_t idx : coset) {
            std::vector<QPoly> next(coeffs.size() + 1);
            next[coeffs.size()] = coeffs.back();
            for (std::size_t j = coeffs.size(); j-- > 0;) {
                // next[j] = (j > 0 ? coeffs[j-1] : 0) - rho^idx * coeffs[j]
                QPoly scaled = field.mul(rho_pow[idx], coeffs[j]);
                QPoly base = j > 0 ? coeffs[j - 1] : QPoly{};
                if (base.size() < scaled.size()) base.resize(scaled.size(), Fq{0});
                for (std::size_t b = 0; b < scaled.size(); ++b)
                    base[b] = tower.sub(base[b], scaled[b]);
                qtrim(base);
                next[j] = std::move(base);
            }
            coeffs = std::move(next);
        }

        Poly f;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            const QPoly& c = coeffs[j];
            if (c.empty()) continue;
            if (c.size() > 1)
                throw InconsistentParametersError(
                    "coset product coefficient not in the base field");
            f.terms.emplace(static_cast<std::uint32_t>(j), c[0]);
        }
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(),
              [](const Poly& a, const Poly& b) { return poly_compare(a, b) < 0; });
    return out;
}

}  // namespace cycloweight
