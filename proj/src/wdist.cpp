#include "cycloweight/wdist.hpp"

#include <algorithm>
#include <cmath>

#include "cycloweight/errors.hpp"

namespace cycloweight {

WeightEnumerator::WeightEnumerator(
    std::vector<std::pair<std::uint32_t, BigUInt>> base_terms,
    std::uint32_t outer_exponent)
    : base_terms_(std::move(base_terms)), outer_(outer_exponent) {
    if (outer_ < 1) throw InvalidArgumentError("outer exponent must be >= 1");
    if (base_terms_.empty() || base_terms_.front().first != 0 ||
        base_terms_.front().second != BigUInt(1))
        throw InvalidArgumentError("base terms must start with the constant (0, 1)");
    for (std::size_t i = 0; i + 1 < base_terms_.size(); ++i)
        if (base_terms_[i].first >= base_terms_[i + 1].first)
            throw InvalidArgumentError("base weights must be strictly increasing");
    for (const auto& [w, c] : base_terms_)
        if (c.is_zero()) throw InvalidArgumentError("base counts must be positive");
}

WeightEnumerator::WeightEnumerator(const WeightEnumerator& o)
    : base_terms_(o.base_terms_), outer_(o.outer_) {
    std::lock_guard lock(o.cache_mutex_);
    cache_ = o.cache_;
}

WeightEnumerator& WeightEnumerator::operator=(const WeightEnumerator& o) {
    if (this == &o) return *this;
    std::shared_ptr<const WeightMap> their_cache;
    {
        std::lock_guard lock(o.cache_mutex_);
        their_cache = o.cache_;
    }
    std::lock_guard lock(cache_mutex_);
    base_terms_ = o.base_terms_;
    outer_ = o.outer_;
    cache_ = std::move(their_cache);
    return *this;
}

std::uint32_t WeightEnumerator::min_positive_weight() const {
    for (const auto& [w, c] : base_terms_)
        if (w > 0) return w;
    throw InconsistentParametersError("enumerator has no positive-weight term");
}

std::shared_ptr<const WeightMap> WeightEnumerator::expanded() const {
    std::lock_guard lock(cache_mutex_);
    if (!cache_) cache_ = std::make_shared<const WeightMap>(expand(*this));
    return cache_;
}

std::string WeightEnumerator::render() const {
    std::string inner;
    for (const auto& [w, c] : base_terms_) {
        if (!inner.empty()) inner += "+";
        if (w == 0) {
            inner += c.to_decimal();
            continue;
        }
        if (!(c == BigUInt(1))) inner += c.to_decimal();
        inner += "z";
        if (w > 1) inner += "^" + std::to_string(w);
    }
    if (outer_ == 1) return inner;
    return "(" + inner + ")^" + std::to_string(outer_);
}

WeightEnumerator enumerator_binomial(std::uint32_t q, std::uint32_t n, std::uint32_t s) {
    if (s == 0 || n % s != 0)
        throw InvalidArgumentError("binomial degree must divide n");
    std::vector<std::pair<std::uint32_t, BigUInt>> base;
    base.emplace_back(0, BigUInt(1));
    base.emplace_back(n / s, BigUInt(q - 1));
    return WeightEnumerator(std::move(base), s);
}

std::uint32_t trinomial_min_distance(std::uint32_t n, std::uint32_t t, std::uint32_t r,
                                     std::uint32_t nu2u) {
    if (t == 0 || r < 2 || nu2u > r - 2)
        throw InconsistentParametersError("need 0 <= nu2(u) <= r-2");
    std::uint64_t block = static_cast<std::uint64_t>(t) << (r - nu2u);
    if (n % block != 0)
        throw InconsistentParametersError("t * 2^(r-nu2u) must divide n");
    return n / t - static_cast<std::uint32_t>(n / block);
}

WeightEnumerator enumerator_trinomial(std::uint32_t q, std::uint32_t n, std::uint32_t t,
                                      std::uint32_t r, std::uint32_t nu2u) {
    std::uint32_t d = trinomial_min_distance(n, t, r, nu2u);
    std::uint64_t split = 1ULL << (r - nu2u);
    if (split > static_cast<std::uint64_t>(q) + 1)
        throw InconsistentParametersError("2^(r-nu2u) exceeds q+1");
    std::vector<std::pair<std::uint32_t, BigUInt>> base;
    base.emplace_back(0, BigUInt(1));
    base.emplace_back(d, BigUInt(split * (q - 1)));
    std::uint64_t top = static_cast<std::uint64_t>(q - 1) * (q + 1 - split);
    if (top > 0) base.emplace_back(n / t, BigUInt(top));
    return WeightEnumerator(std::move(base), t);
}

std::vector<Fq> lambda_set(const FieldTower& tower, Fq2 a, std::uint32_t r,
                           std::uint32_t nu2u) {
    if (r < 2 || nu2u > r - 2)
        throw InvalidArgumentError("need 0 <= nu2(u) <= r-2");
    Fq2 aq = tower.frobenius(a);
    if (tower.add2(a, aq) == tower.zero2())
        throw InvalidArgumentError("a + a^q must be nonzero");
    std::uint64_t count = (1ULL << (r - nu2u)) - 1;
    std::vector<Fq> out;
    Fq2 num_a = tower.one2(), num_aq = tower.one2();  // a^i, a^(qi)
    for (std::uint64_t i = 0; i < count; ++i) {
        Fq2 numer = tower.sub2(num_a, num_aq);
        Fq2 den_a = tower.mul2(num_a, a), den_aq = tower.mul2(num_aq, aq);
        Fq2 denom = tower.sub2(den_a, den_aq);
        if (denom == tower.zero2())
            throw DegenerateDenominatorError(
                "a^(i+1) = a^(q(i+1)) inside the lambda index range");
        out.push_back(tower.descend(tower.mul2(numer, tower.inv2(denom))));
        num_a = den_a;
        num_aq = den_aq;
    }
    std::sort(out.begin(), out.end());
    auto dup = std::adjacent_find(out.begin(), out.end());
    if (dup != out.end())
        throw InconsistentParametersError("lambda set has repeated elements");
    return out;
}

std::uint64_t pair_weight_count(std::uint32_t q, std::uint32_t r, std::uint32_t nu2u) {
    if (r < 2 || nu2u > r - 2)
        throw InvalidArgumentError("need 0 <= nu2(u) <= r-2");
    return (1ULL << (r - nu2u)) * (q - 1);
}

namespace {

WeightMap weight_map_mul(const WeightMap& a, const WeightMap& b) {
    WeightMap r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            auto [it, inserted] = r.try_emplace(wa + wb, BigUInt{});
            it->second += ca * cb;
        }
    return r;
}

}  // namespace

WeightMap expand(const WeightEnumerator& e) {
    WeightMap base;
    for (const auto& [w, c] : e.base_terms()) base.emplace(w, c);
    WeightMap result{{0, BigUInt(1)}};
    std::uint32_t exp = e.outer_exponent();
    while (exp) {
        if (exp & 1) result = weight_map_mul(result, base);
        exp >>= 1;
        if (exp) base = weight_map_mul(base, base);
    }
    return result;
}

long double undetected_error_probability(const WeightMap& dist, std::uint32_t q,
                                         std::uint32_t n, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputRangeError("p must lie in [0, 1]");
    if (q < 2) throw InvalidArgumentError("q must be >= 2");
    auto it = dist.find(0);
    if (it == dist.end() || !(it->second == BigUInt(1)))
        throw InvalidArgumentError("distribution must have A_0 = 1");

    // Kahan summation; the per-weight terms span many orders of magnitude.
    long double per_symbol = static_cast<long double>(p) / (q - 1);
    long double sum = 0.0L, comp = 0.0L;
    for (const auto& [w, count] : dist) {
        if (w == 0) continue;
        if (w > n) throw InvalidArgumentError("weight exceeds the code length");
        long double term = count.to_long_double() *
                           std::pow(per_symbol, static_cast<long double>(w)) *
                           std::pow(1.0L - static_cast<long double>(p),
                                    static_cast<long double>(n - w));
        long double y = term - comp;
        long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

CodeRecord build_code_record(const FieldTower& tower, const IrreducibleFactor& factor,
                             const CaseParameters& params) {
    CodeRecord rec;
    rec.q = params.q;
    rec.n = params.n;
    rec.k = factor.degree;
    rec.factor = factor;
    rec.check_poly = factor_poly(tower, factor);
    rec.generator_poly = check_to_generator(tower, params.n, rec.check_poly);

    std::uint32_t formula_d;
    if (factor.kind == FactorKind::binomial) {
        rec.enumerator = enumerator_binomial(params.q, params.n, factor.degree);
        formula_d = params.n / factor.degree;
    } else {
        if (!factor.nu2u)
            throw InconsistentParametersError("trinomial factor without nu2(u)");
        rec.enumerator = enumerator_trinomial(params.q, params.n, factor.t, params.r,
                                              *factor.nu2u);
        formula_d = trinomial_min_distance(params.n, factor.t, params.r, *factor.nu2u);
    }
    rec.d = rec.enumerator.min_positive_weight();
    if (rec.d != formula_d)
        throw InconsistentParametersError(
            "enumerator minimum distance disagrees with the parameter formula");
    return rec;
}

std::string render_distribution_csv(const WeightMap& dist) {
    std::string out = "weight,count\n";
    for (const auto& [w, c] : dist)
        out += std::to_string(w) + "," + c.to_decimal() + "\n";
    return out;
}

}  // namespace cycloweight
