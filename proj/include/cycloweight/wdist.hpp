// wdist.hpp -- closed-form weight enumerators for both code families, the
// lambda scalar sets, exact big-integer expansion, and symmetric-channel
// undetected-error probability.
#ifndef CYCLOWEIGHT_WDIST_HPP
#define CYCLOWEIGHT_WDIST_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cycloweight/bigint.hpp"
#include "cycloweight/factorizer.hpp"
#include "cycloweight/gfield.hpp"
#include "cycloweight/polyring.hpp"

namespace cycloweight {

using WeightMap = std::map<std::uint32_t, BigUInt>;

// Factored closed form: (sum over base_terms of count * z^weight)^outer.
// Stored factored because that is the canonical presentation and expansion
// is only needed on demand; the expansion is cached thread-safely.
class WeightEnumerator {
public:
    WeightEnumerator() = default;
    WeightEnumerator(std::vector<std::pair<std::uint32_t, BigUInt>> base_terms,
                     std::uint32_t outer_exponent);

    WeightEnumerator(const WeightEnumerator& o);
    WeightEnumerator& operator=(const WeightEnumerator& o);

    const std::vector<std::pair<std::uint32_t, BigUInt>>& base_terms() const {
        return base_terms_;
    }
    std::uint32_t outer_exponent() const { return outer_; }

    // Least positive base weight; equals the minimum distance of the code.
    std::uint32_t min_positive_weight() const;

    // Exact expansion; computed once, shared afterwards. Safe under
    // concurrent calls.
    std::shared_ptr<const WeightMap> expanded() const;

    // "(1+120z^72+840z^96)^3"; the parentheses and exponent are dropped when
    // the outer exponent is 1.
    std::string render() const;

    friend bool operator==(const WeightEnumerator& a, const WeightEnumerator& b) {
        return a.base_terms_ == b.base_terms_ && a.outer_ == b.outer_;
    }

private:
    std::vector<std::pair<std::uint32_t, BigUInt>> base_terms_;
    std::uint32_t outer_ = 1;
    mutable std::mutex cache_mutex_;
    mutable std::shared_ptr<const WeightMap> cache_;
};

// (1 + (q-1) z^(n/s))^s for a binomial check polynomial of degree s; throws
// InvalidArgumentError unless s | n.
WeightEnumerator enumerator_binomial(std::uint32_t q, std::uint32_t n, std::uint32_t s);

// (n/t)(1 - 2^-(r-nu2u)); throws InconsistentParametersError when the value
// is not an integer (t * 2^(r-nu2u) must divide n).
std::uint32_t trinomial_min_distance(std::uint32_t n, std::uint32_t t, std::uint32_t r,
                                     std::uint32_t nu2u);

// (1 + 2^(r-nu2u)(q-1) z^d + (q-1)(q+1-2^(r-nu2u)) z^(n/t))^t with the third
// term omitted when its count is zero; throws InconsistentParametersError
// when inputs would make it negative.
WeightEnumerator enumerator_trinomial(std::uint32_t q, std::uint32_t n, std::uint32_t t,
                                      std::uint32_t r, std::uint32_t nu2u);

// The scalars lambda with omega(g - lambda x^t g) below n/t:
// (a^i - a^(qi)) / (a^(i+1) - a^(q(i+1))) for i = 0 .. 2^(r-nu2u)-2.
// Sorted by encoding; contains 0; size exactly 2^(r-nu2u)-1.
std::vector<Fq> lambda_set(const FieldTower& tower, Fq2 a, std::uint32_t r,
                           std::uint32_t nu2u);

// Number of pairs (mu, lambda) whose combination mu*g + lambda*x^t*g hits
// the minimum distance: 2^(r-nu2u) (q-1).
std::uint64_t pair_weight_count(std::uint32_t q, std::uint32_t r, std::uint32_t nu2u);

// Standalone expansion of a factored enumerator.
WeightMap expand(const WeightEnumerator& e);

enum class Channel { binary, qary };

// Probability that a channel error pattern is itself a nonzero codeword:
// sum over i >= 1 of A_i (p/(q-1))^i (1-p)^(n-i); for q = 2 this is the
// binary symmetric channel formula. Throws InputRangeError for p outside
// [0, 1], InvalidArgumentError unless dist[0] = 1.
long double undetected_error_probability(const WeightMap& dist, std::uint32_t q,
                                         std::uint32_t n, double p);

struct CodeRecord {
    std::uint32_t q = 0, n = 0, k = 0, d = 0;
    Poly check_poly;
    Poly generator_poly;
    IrreducibleFactor factor;
    WeightEnumerator enumerator;
};

// Assembles the full record for one irreducible factor: check and generator
// polynomials, dispatched enumerator, minimum distance read off the
// enumerator and cross-checked against the parameter formulas.
CodeRecord build_code_record(const FieldTower& tower, const IrreducibleFactor& factor,
                             const CaseParameters& params);

// "weight,count" CSV of an expanded distribution, rows ascending by weight,
// counts in plain decimal.
std::string render_distribution_csv(const WeightMap& dist);

}  // namespace cycloweight

#endif
