#include "cycloweight/polyring.hpp"

#include <cctype>
#include <vector>

#include "cycloweight/errors.hpp"

namespace cycloweight {

Poly poly_one(const FieldTower& t) { return poly_monomial(t.one(), 0); }

Poly poly_monomial(Fq c, std::uint32_t deg) {
    Poly f;
    if (c.v != 0) f.terms.emplace(deg, c);
    return f;
}

Poly poly_xn_minus_1(const FieldTower& t, std::uint32_t n) {
    Poly f;
    f.terms.emplace(n, t.one());
    f.terms.emplace(0, t.neg(t.one()));
    return f;
}

Poly poly_add(const FieldTower& t, const Poly& f, const Poly& g) {
    Poly r = f;
    for (const auto& [deg, c] : g.terms) {
        auto it = r.terms.find(deg);
        if (it == r.terms.end()) {
            r.terms.emplace(deg, c);
        } else {
            it->second = t.add(it->second, c);
            if (it->second.v == 0) r.terms.erase(it);
        }
    }
    return r;
}

Poly poly_scale(const FieldTower& t, Fq c, const Poly& f) {
    Poly r;
    if (c.v == 0) return r;
    for (const auto& [deg, a] : f.terms) r.terms.emplace(deg, t.mul(c, a));
    return r;
}

Poly poly_sub(const FieldTower& t, const Poly& f, const Poly& g) {
    return poly_add(t, f, poly_scale(t, t.neg(t.one()), g));
}

Poly poly_mul(const FieldTower& t, const Poly& f, const Poly& g) {
    Poly r;
    for (const auto& [df, cf] : f.terms)
        for (const auto& [dg, cg] : g.terms) {
            std::uint32_t d = df + dg;
            Fq prod = t.mul(cf, cg);
            auto it = r.terms.find(d);
            if (it == r.terms.end()) {
                if (prod.v != 0) r.terms.emplace(d, prod);
            } else {
                it->second = t.add(it->second, prod);
                if (it->second.v == 0) r.terms.erase(it);
            }
        }
    return r;
}

Poly poly_div_exact(const FieldTower& t, const Poly& f, const Poly& g) {
    if (g.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    if (f.is_zero()) return {};
    std::int64_t df = f.degree(), dg = g.degree();
    if (df < dg) throw RemainderNonzeroError("divisor degree exceeds dividend");

    // Dense high-to-low synthetic division; g is iterated sparsely so the
    // cost is deg(f) * terms(g).
    std::vector<Fq> rem(static_cast<std::size_t>(df) + 1, Fq{0});
    for (const auto& [deg, c] : f.terms) rem[deg] = c;
    Fq lead_inv = t.inv(g.terms.rbegin()->second);

    Poly q;
    for (std::int64_t i = df - dg; i >= 0; --i) {
        Fq c = rem[static_cast<std::size_t>(i + dg)];
        if (c.v == 0) continue;
        Fq qc = t.mul(c, lead_inv);
        q.terms.emplace(static_cast<std::uint32_t>(i), qc);
        for (const auto& [deg, gc] : g.terms)
            rem[static_cast<std::size_t>(i) + deg] =
                t.sub(rem[static_cast<std::size_t>(i) + deg], t.mul(qc, gc));
    }
    for (const auto& c : rem)
        if (c.v != 0) throw RemainderNonzeroError("division left a remainder");
    return q;
}

Poly check_to_generator(const FieldTower& t, std::uint32_t n, const Poly& h) {
    std::int64_t dh = h.degree();
    if (dh <= 0 || dh >= static_cast<std::int64_t>(n))
        throw InvalidArgumentError(
            "check polynomial must be a proper divisor of x^n - 1");
    return poly_div_exact(t, poly_xn_minus_1(t, n), h);
}

Poly codeword(const FieldTower& t, std::span<const Fq> message, const Poly& g,
              std::uint32_t n) {
    std::int64_t k = static_cast<std::int64_t>(n) - g.degree();
    if (static_cast<std::int64_t>(message.size()) != k)
        throw DimensionMismatchError("message length must equal n - deg(g)");
    Poly r;
    for (std::size_t j = 0; j < message.size(); ++j) {
        if (message[j].v == 0) continue;
        for (const auto& [deg, c] : g.terms) {
            std::uint32_t d = deg + static_cast<std::uint32_t>(j);
            Fq prod = t.mul(message[j], c);
            auto it = r.terms.find(d);
            if (it == r.terms.end()) {
                if (prod.v != 0) r.terms.emplace(d, prod);
            } else {
                it->second = t.add(it->second, prod);
                if (it->second.v == 0) r.terms.erase(it);
            }
        }
    }
    return r;
}

std::uint32_t hamming_weight(const Poly& f) {
    return static_cast<std::uint32_t>(f.terms.size());
}

std::string render_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        if (!out.empty()) out += " + ";
        std::uint32_t deg = it->first, c = it->second.v;
        if (deg == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += "x";
            if (deg > 1) out += "^" + std::to_string(deg);
        }
    }
    return out;
}

Poly parse_poly(const FieldTower& t, std::string_view text) {
    Poly r;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (i < text.size()) {
        bool negative = false;
        skip_ws();
        if (!first || text[i] == '+' || text[i] == '-') {
            if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
                throw ParseError("expected '+' or '-' between terms");
            negative = text[i] == '-';
            ++i;
            skip_ws();
        }
        first = false;
        // coefficient
        std::uint64_t coef = 1;
        bool have_digits = false;
        std::uint64_t acc = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            acc = acc * 10 + static_cast<std::uint64_t>(text[i] - '0');
            if (acc > 100'000'000'000ULL) throw ParseError("coefficient too large");
            have_digits = true;
            ++i;
        }
        if (have_digits) coef = acc;
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        // variable part
        std::uint32_t deg = 0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            deg = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw ParseError("expected exponent after '^'");
                std::uint64_t d = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    d = d * 10 + static_cast<std::uint64_t>(text[i] - '0');
                    if (d > 10'000'000) throw ParseError("exponent too large");
                    ++i;
                }
                deg = static_cast<std::uint32_t>(d);
            }
        } else if (!have_digits) {
            throw ParseError("expected coefficient or 'x'");
        }
        Fq c = t.from_int(coef);
        if (negative) c = t.neg(c);
        if (c.v != 0) {
            auto it = r.terms.find(deg);
            if (it == r.terms.end()) {
                r.terms.emplace(deg, c);
            } else {
                it->second = t.add(it->second, c);
                if (it->second.v == 0) r.terms.erase(it);
            }
        }
        skip_ws();
    }
    return r;
}

int poly_compare(const Poly& f, const Poly& g) {
    if (f.degree() != g.degree()) return f.degree() < g.degree() ? -1 : 1;
    auto it = f.terms.rbegin();
    auto jt = g.terms.rbegin();
    // Walk both sparse maps from the top; a missing degree counts as 0.
    while (it != f.terms.rend() || jt != g.terms.rend()) {
        std::int64_t di = it != f.terms.rend() ? it->first : -1;
        std::int64_t dj = jt != g.terms.rend() ? jt->first : -1;
        if (di == dj) {
            if (it->second.v != jt->second.v)
                return it->second.v < jt->second.v ? -1 : 1;
            ++it;
            ++jt;
        } else if (di > dj) {
            // f has a nonzero coefficient where g has zero.
            return 1;
        } else {
            return -1;
        }
    }
    return 0;
}

}  // namespace cycloweight
