#ifndef TREEHEIGHT_FAMILY_HPP
#define TREEHEIGHT_FAMILY_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "treeheight/errors.hpp"
#include "treeheight/ratfunc.hpp"

namespace treeheight {

/// A family of ordered rooted trees: internal vertices have a child count
/// drawn from the degree set S, leaves have none.  Degrees are stored
/// sorted ascending so equal sets compare equal and cache keys are stable.
struct FamilySpec {
    std::vector<long> degrees;
    long max_degree = 0;

    bool operator==(const FamilySpec& o) const { return degrees == o.degrees; }
    bool operator!=(const FamilySpec& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(degrees[i]);
        }
        return s + "}";
    }
};

inline FamilySpec validate_family(const std::vector<long>& degrees) {
    if (degrees.empty()) throw EmptyDegreeSet();
    for (long d : degrees)
        if (d <= 0) throw NonPositiveDegree(d);
    FamilySpec spec;
    spec.degrees = degrees;
    std::sort(spec.degrees.begin(), spec.degrees.end());
    spec.degrees.erase(std::unique(spec.degrees.begin(), spec.degrees.end()),
                       spec.degrees.end());
    spec.max_degree = spec.degrees.back();
    return spec;
}

/// P(X) = 1 + Σ_{i∈S} X^i, the branching generator of the grammar.
inline UniPoly char_poly(const FamilySpec& spec) {
    std::vector<Rat> c(static_cast<std::size_t>(spec.max_degree) + 1, Rat(0));
    c[0] = 1;
    for (long i : spec.degrees) c[static_cast<std::size_t>(i)] = 1;
    return UniPoly(std::move(c));
}

/// Polynomial in the symbol F with rational-function coefficients in x.
/// F stands for the counting series f(x); degree-d with d = max(S) holds
/// the defining polynomial Q, degree < d holds reduced field elements.
struct BiPoly {
    std::vector<RatFunc> c;  // c[j] multiplies F^j; trailing entries nonzero

    BiPoly() = default;
    explicit BiPoly(std::vector<RatFunc> coeffs) : c(std::move(coeffs)) { trim(); }

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    RatFunc coeff(std::size_t j) const { return j < c.size() ? c[j] : RatFunc(); }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    bool operator==(const BiPoly& o) const { return c == o.c; }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        std::vector<RatFunc> r(std::max(a.c.size(), b.c.size()));
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = a.coeff(j) + b.coeff(j);
        return BiPoly(std::move(r));
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        std::vector<RatFunc> r(std::max(a.c.size(), b.c.size()));
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = a.coeff(j) - b.coeff(j);
        return BiPoly(std::move(r));
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        if (a.is_zero() || b.is_zero()) return BiPoly();
        std::vector<RatFunc> r(a.c.size() + b.c.size() - 1);
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r[i + j] = r[i + j] + a.c[i] * b.c[j];
        }
        return BiPoly(std::move(r));
    }
    friend BiPoly operator*(const BiPoly& a, const RatFunc& s) {
        std::vector<RatFunc> r(a.c.size());
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = a.c[j] * s;
        return BiPoly(std::move(r));
    }

    /// Division in ℚ(x)[F]; divisor must be nonzero.
    static std::pair<BiPoly, BiPoly> divrem(const BiPoly& a, const BiPoly& b) {
        BiPoly rem = a;
        BiPoly quot;
        long db = b.degree();
        if (rem.degree() >= db)
            quot.c.assign(static_cast<std::size_t>(rem.degree() - db) + 1, RatFunc());
        RatFunc lead_inv = b.c.back().inverse();
        while (rem.degree() >= db) {
            long shift = rem.degree() - db;
            RatFunc q = rem.c.back() * lead_inv;
            quot.c[static_cast<std::size_t>(shift)] = q;
            for (long j = 0; j <= db; ++j)
                rem.c[static_cast<std::size_t>(j + shift)] =
                    rem.c[static_cast<std::size_t>(j + shift)] - q * b.coeff(static_cast<std::size_t>(j));
            rem.trim();
        }
        quot.trim();
        return {quot, rem};
    }
};

/// Lift a polynomial in one symbol with rational coefficients into a
/// BiPoly in F (used for P(F)).
inline BiPoly lift_to_F(const UniPoly& p) {
    std::vector<RatFunc> c(static_cast<std::size_t>(p.degree() + 1));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = RatFunc(p.coeff(j));
    return BiPoly(std::move(c));
}

/// The defining polynomial Q(x,F) = x·P(F) − F and its partials.
/// f(x) is the unique power-series root of Q with f(0) = 0.
struct DefiningPoly {
    BiPoly q;    // x·P(F) − F
    BiPoly q_x;  // ∂Q/∂x = P(F)
    BiPoly q_f;  // ∂Q/∂F = x·P′(F) − 1
};

inline DefiningPoly defining_poly(const FamilySpec& spec) {
    UniPoly p = char_poly(spec);
    RatFunc rx = RatFunc::x();
    DefiningPoly out;
    out.q_x = lift_to_F(p);
    out.q = out.q_x * rx;
    out.q.c.resize(std::max<std::size_t>(out.q.c.size(), 2));
    out.q.c[1] = out.q.c[1] - RatFunc::one();
    out.q.trim();
    out.q_f = lift_to_F(p.derivative()) * rx;
    out.q_f.c.resize(std::max<std::size_t>(out.q_f.c.size(), 1));
    out.q_f.c[0] = out.q_f.c[0] - RatFunc::one();
    out.q_f.trim();
    return out;
}

}  // namespace treeheight

#endif
