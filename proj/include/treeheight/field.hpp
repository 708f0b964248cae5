#ifndef TREEHEIGHT_FIELD_HPP
#define TREEHEIGHT_FIELD_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treeheight/family.hpp"

namespace treeheight {

/// Element of K = ℚ(x)[F]/(Q), stored as the unique remainder mod Q:
/// exactly d = max(S) rational-function coefficients, index j = power of F.
/// F is the class of g₀(x) = f(x); an element represents a function of x
/// "in terms of x and g₀".
struct FieldElement {
    std::vector<RatFunc> coeffs;
    FamilySpec family;

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }

    bool operator==(const FieldElement& o) const {
        return family == o.family && coeffs == o.coeffs;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// "( num / den ) * F^j + ..." with terms in decreasing j, zero terms
    /// omitted; the whole element "0" when zero.
    std::string to_string() const {
        std::string out;
        for (std::size_t j = coeffs.size(); j-- > 0;) {
            if (coeffs[j].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += coeffs[j].to_string();
            if (j > 0) {
                out += " * F";
                if (j > 1) out += "^" + std::to_string(j);
            }
        }
        return out.empty() ? "0" : out;
    }
};

/// Arithmetic context for one family's quotient ring.  Ties elements to a
/// family by value equality of S, and caches f′ = −Q_x/Q_F for repeated
/// differentiation.
class QuotientField {
public:
    explicit QuotientField(FamilySpec spec)
        : spec_(std::move(spec)), def_(defining_poly(spec_)) {}

    const FamilySpec& family() const { return spec_; }
    const DefiningPoly& defining() const { return def_; }
    long dim() const { return spec_.max_degree; }

    FieldElement zero() const { return make({}); }
    FieldElement one() const { return from_scalar(RatFunc::one()); }
    FieldElement from_scalar(const RatFunc& r) const {
        std::vector<RatFunc> c(static_cast<std::size_t>(dim()));
        c[0] = r;
        return make(std::move(c));
    }
    /// The generator F (class of the counting series f itself).
    FieldElement gen() const {
        BiPoly p;
        p.c = {RatFunc::zero(), RatFunc::one()};
        return reduce(p);
    }

    /// Remainder of an arbitrary F-polynomial modulo Q.
    FieldElement reduce(const BiPoly& p) const {
        BiPoly rem = BiPoly::divrem(p, def_.q).second;
        std::vector<RatFunc> c(static_cast<std::size_t>(dim()));
        for (std::size_t j = 0; j < c.size(); ++j) c[j] = rem.coeff(j);
        return make(std::move(c));
    }

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        check(a), check(b);
        FieldElement r = a;
        for (std::size_t j = 0; j < r.coeffs.size(); ++j)
            r.coeffs[j] = r.coeffs[j] + b.coeffs[j];
        return r;
    }
    FieldElement sub(const FieldElement& a, const FieldElement& b) const {
        check(a), check(b);
        FieldElement r = a;
        for (std::size_t j = 0; j < r.coeffs.size(); ++j)
            r.coeffs[j] = r.coeffs[j] - b.coeffs[j];
        return r;
    }
    FieldElement scale(const FieldElement& a, const RatFunc& s) const {
        check(a);
        FieldElement r = a;
        for (auto& c : r.coeffs) c = c * s;
        return r;
    }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        check(a), check(b);
        return reduce(as_poly(a) * as_poly(b));
    }

    /// Inverse via extended Euclid against Q in ℚ(x)[F].  If a nontrivial
    /// common factor with Q turns up, Q is reducible over ℚ(x) and the
    /// quotient is not a field: reported as ReducibleModulus.
    FieldElement inv(const FieldElement& a) const {
        check(a);
        if (a.is_zero()) throw ZeroInversion();
        // Invariant: r0 = s0·a mod Q, r1 = s1·a mod Q.
        BiPoly r0 = def_.q, r1 = as_poly(a);
        BiPoly s0, s1;
        s1.c = {RatFunc::one()};
        while (!r1.is_zero()) {
            auto [q, r2] = BiPoly::divrem(r0, r1);
            BiPoly s2 = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0.degree() != 0)
            throw ReducibleModulus("gcd(a, Q) has F-degree " +
                                   std::to_string(r0.degree()) + " for S=" +
                                   spec_.to_string());
        return reduce(s0 * r0.c[0].inverse());
    }

    FieldElement div(const FieldElement& a, const FieldElement& b) const {
        return mul(a, inv(b));
    }

    /// d/dx of the function represented by a = Σ R_j(x) F^j:
    /// Σ R_j′ F^j + (Σ j·R_j F^{j−1})·f′, with f′ = −Q_x/Q_F by implicit
    /// differentiation of Q(x, f(x)) = 0.
    FieldElement dx(const FieldElement& a) const {
        check(a);
        std::vector<RatFunc> part_x(a.coeffs.size());
        std::vector<RatFunc> part_f(a.coeffs.size());
        for (std::size_t j = 0; j < a.coeffs.size(); ++j) {
            part_x[j] = a.coeffs[j].derivative();
            if (j + 1 < a.coeffs.size())
                part_f[j] = a.coeffs[j + 1] * RatFunc(Rat(static_cast<long>(j + 1)));
        }
        FieldElement r = make(std::move(part_x));
        FieldElement rf = make(std::move(part_f));
        if (!rf.is_zero()) r = add(r, mul(rf, fprime()));
        return r;
    }

    /// f′ as a field element; cached after the first request.
    const FieldElement& fprime() const {
        if (!fprime_) {
            FieldElement qx = reduce(def_.q_x);
            FieldElement qf = reduce(def_.q_f);
            fprime_ = mul(scale(qx, -RatFunc::one()), inv(qf));
        }
        return *fprime_;
    }

    /// Evaluate a scalar polynomial (e.g. P or P′) at a field element.
    FieldElement eval_poly(const UniPoly& p, const FieldElement& at) const {
        FieldElement acc = zero();
        for (long i = p.degree(); i >= 0; --i) {
            acc = mul(acc, at);
            acc.coeffs[0] = acc.coeffs[0] + RatFunc(p.coeff(static_cast<std::size_t>(i)));
        }
        return acc;
    }

    BiPoly as_poly(const FieldElement& a) const { return BiPoly(a.coeffs); }

private:
    FieldElement make(std::vector<RatFunc> c) const {
        c.resize(static_cast<std::size_t>(dim()));
        return FieldElement{std::move(c), spec_};
    }
    void check(const FieldElement& a) const {
        if (a.family != spec_) throw FamilyMismatch();
    }

    FamilySpec spec_;
    DefiningPoly def_;
    mutable std::optional<FieldElement> fprime_;
};

}  // namespace treeheight

#endif
