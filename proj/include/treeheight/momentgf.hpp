#ifndef TREEHEIGHT_MOMENTGF_HPP
#define TREEHEIGHT_MOMENTGF_HPP

#include <map>
#include <utility>
#include <vector>

#include "treeheight/series.hpp"

namespace treeheight {

/// Closed forms g_0..g_k for the factorial-moment generating functions,
/// derived by comparing z^r coefficients in the functional equation
/// G(x,z) = x·P(G(x+xz, z)) under the expansion G = Σ g_r(x) z^r/r!.
/// Each g_r is a field element: a rational expression in x and g₀ = f.
///
/// Writing T_r = [z^r] G(x+xz,z) = g_r/r! + U_r, the z^r coefficient of
/// the right side is x·(P′(g₀)·T_r + C_r), which is linear in the unknown
/// g_r and solves to
///     g_r = r!·x·(P′(g₀)·U_r + C_r) / (1 − x·P′(g₀)).
class MomentGFBundle {
public:
    MomentGFBundle(FamilySpec spec, long k)
        : field_(std::move(spec)), k_(k), P_(char_poly(field_.family())) {
        g_.push_back(field_.gen());  // g_0 is the class of F itself
        T_.push_back(g_[0]);
        pprime_g0_ = field_.eval_poly(P_.derivative(), g_[0]);
        // 1 − x·P′(g₀), the pivot of every linear solve (= −Q_F at g₀).
        pivot_ = field_.sub(field_.one(), field_.scale(pprime_g0_, RatFunc::x()));
    }

    const QuotientField& field() const { return field_; }
    const FamilySpec& family() const { return field_.family(); }
    long k() const { return k_; }
    long derived_up_to() const { return static_cast<long>(g_.size()) - 1; }

    const FieldElement& g(long r) const { return g_.at(static_cast<std::size_t>(r)); }
    const FieldElement& pprime_g0() const { return pprime_g0_; }

    /// g_r^{(j)}, lazily differentiated and cached for the bundle's lifetime.
    const FieldElement& deriv(long r, long j) {
        if (j == 0) return g(r);
        auto key = std::make_pair(r, j);
        auto it = dcache_.find(key);
        if (it == dcache_.end())
            it = dcache_.emplace(key, field_.dx(deriv(r, j - 1))).first;
        return it->second;
    }

    /// U_r = Σ_{s=0}^{r−1} g_s^{(r−s)}(x)·x^{r−s}/(s!·(r−s)!), the known
    /// lower-order part of T_r coming from the Taylor shift g_s(x+xz).
    FieldElement taylor_shift_term(long r) {
        FieldElement u = field_.zero();
        for (long s = 0; s < r; ++s) {
            long j = r - s;
            Rat w = Rat(1) / Rat(factorial(static_cast<unsigned long>(s)) *
                                 factorial(static_cast<unsigned long>(j)));
            RatFunc m(UniPoly::monomial(w, static_cast<std::size_t>(j)));
            u = field_.add(u, field_.scale(deriv(s, j), m));
        }
        return u;
    }

    /// C_r = [z^r] P(T_0 + T_1 z + … + T_{r−1} z^{r−1}): the part of the
    /// composition that does not involve the unknown T_r.  Computed by
    /// truncated z-polynomial Horner evaluation of P.
    FieldElement compose_char_poly(long r) const {
        std::vector<FieldElement> a(static_cast<std::size_t>(r) + 1, field_.zero());
        for (long m = 0; m < r && m < static_cast<long>(T_.size()); ++m)
            a[static_cast<std::size_t>(m)] = T_[static_cast<std::size_t>(m)];
        std::vector<FieldElement> acc(1, field_.zero());
        for (long i = P_.degree(); i >= 0; --i) {
            acc = zmul(acc, a, r);
            acc[0].coeffs[0] = acc[0].coeffs[0] + RatFunc(P_.coeff(static_cast<std::size_t>(i)));
        }
        return static_cast<long>(acc.size()) > r ? acc[static_cast<std::size_t>(r)]
                                                 : field_.zero();
    }

    /// Solve the z^r coefficient equation for g_r and store it.
    void derive_next() {
        long r = derived_up_to() + 1;
        FieldElement u = taylor_shift_term(r);
        FieldElement c = compose_char_poly(r);
        FieldElement rhs = field_.scale(
            field_.add(field_.mul(pprime_g0_, u), c), RatFunc::x());
        FieldElement gr = field_.scale(field_.mul(rhs, field_.inv(pivot_)),
                                       RatFunc(Rat(factorial(static_cast<unsigned long>(r)))));
        g_.push_back(gr);
        Rat inv_rfac = Rat(1) / Rat(factorial(static_cast<unsigned long>(r)));
        T_.push_back(field_.add(field_.scale(gr, RatFunc(inv_rfac)), u));
    }

private:
    std::vector<FieldElement> zmul(const std::vector<FieldElement>& a,
                                   const std::vector<FieldElement>& b, long zcap) const {
        std::size_t len = std::min<std::size_t>(a.size() + b.size() - 1,
                                                static_cast<std::size_t>(zcap) + 1);
        std::vector<FieldElement> r(len, field_.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
                if (b[j].is_zero()) continue;
                r[i + j] = field_.add(r[i + j], field_.mul(a[i], b[j]));
            }
        }
        return r;
    }

    QuotientField field_;
    long k_;
    UniPoly P_;
    FieldElement pprime_g0_;
    FieldElement pivot_;
    std::vector<FieldElement> g_;
    std::vector<FieldElement> T_;  // T_r = g_r/r! + U_r
    std::map<std::pair<long, long>, FieldElement> dcache_;
};

/// Derive g_1..g_k in order.  Throws ReducibleModulus if any linear solve
/// fails; callers then switch to the numeric pipeline.
inline MomentGFBundle derive_all(const FamilySpec& spec, long k) {
    MomentGFBundle bundle(spec, k);
    for (long r = 1; r <= k; ++r) bundle.derive_next();
    return bundle;
}

/// Series expansions of g_0..g_k at order N (exact, via the closed forms).
inline std::vector<TruncatedSeries> eval_bundle_series(MomentGFBundle& bundle, long N) {
    long margin = 0;
    for (long r = 0; r <= bundle.derived_up_to(); ++r)
        for (const auto& c : bundle.g(r).coeffs)
            if (!c.is_zero())
                margin = std::max(margin, static_cast<long>(c.den().x_valuation()));
    TruncatedSeries f = solve_counting_series(bundle.family(), N + margin);
    std::vector<TruncatedSeries> out;
    for (long r = 0; r <= bundle.derived_up_to(); ++r)
        out.push_back(eval_field_element(bundle.g(r), f).truncated(N));
    return out;
}

}  // namespace treeheight

#endif
