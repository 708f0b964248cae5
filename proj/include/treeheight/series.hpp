#ifndef TREEHEIGHT_SERIES_HPP
#define TREEHEIGHT_SERIES_HPP

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "treeheight/field.hpp"

namespace treeheight {

/// Exact power series in x modulo x^{N+1}.  The truncation order N is
/// explicit data: arithmetic results carry the smaller operand order.
class TruncatedSeries {
public:
    TruncatedSeries() : c_(1, Rat(0)) {}
    explicit TruncatedSeries(long order) : c_(static_cast<std::size_t>(order) + 1, Rat(0)) {
        assert(order >= 0);
    }
    explicit TruncatedSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        assert(!c_.empty());
    }

    static TruncatedSeries from_poly(const UniPoly& p, long order) {
        TruncatedSeries s(order);
        long top = std::min(order, p.degree());
        for (long i = 0; i <= top; ++i)
            s.c_[static_cast<std::size_t>(i)] = p.coeff(static_cast<std::size_t>(i));
        return s;
    }
    static TruncatedSeries constant(const Rat& v, long order) {
        TruncatedSeries s(order);
        s.c_[0] = v;
        return s;
    }

    long order() const { return static_cast<long>(c_.size()) - 1; }
    const Rat& coeff(long n) const {
        assert(n >= 0 && n <= order());
        return c_[static_cast<std::size_t>(n)];
    }
    void set_coeff(long n, const Rat& v) {
        assert(n >= 0 && n <= order());
        c_[static_cast<std::size_t>(n)] = v;
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (c != 0) return false;
        return true;
    }

    /// Index of the first nonzero coefficient; order()+1 when zero.
    long valuation() const {
        for (long n = 0; n <= order(); ++n)
            if (coeff(n) != 0) return n;
        return order() + 1;
    }

    TruncatedSeries truncated(long order) const {
        assert(order <= this->order());
        TruncatedSeries s(order);
        std::copy(c_.begin(), c_.begin() + order + 1, s.c_.begin());
        return s;
    }

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (long n = 0; n <= r.order(); ++n) r.c_[static_cast<std::size_t>(n)] = a.coeff(n) + b.coeff(n);
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (long n = 0; n <= r.order(); ++n) r.c_[static_cast<std::size_t>(n)] = a.coeff(n) - b.coeff(n);
        return r;
    }
    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const Rat& s) {
        TruncatedSeries r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }

    /// Cauchy product mod x^{min(Na,Nb)+1}; schoolbook, with an
    /// integer-only path when both operands have unit denominators.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        long N = std::min(a.order(), b.order());
        long alen = std::min<long>(N, a.top_nonzero());
        long blen = std::min<long>(N, b.top_nonzero());
        if (a.all_integer() && b.all_integer()) {
            std::vector<Int> acc(static_cast<std::size_t>(N) + 1);
            for (long i = 0; i <= alen; ++i) {
                const Int& ai = a.coeff(i).get_num();
                if (ai == 0) continue;
                long top = std::min(blen, N - i);
                for (long j = 0; j <= top; ++j)
                    acc[static_cast<std::size_t>(i + j)] += ai * b.coeff(j).get_num();
            }
            TruncatedSeries r(N);
            for (long n = 0; n <= N; ++n) r.c_[static_cast<std::size_t>(n)] = Rat(acc[static_cast<std::size_t>(n)]);
            return r;
        }
        TruncatedSeries r(N);
        for (long i = 0; i <= alen; ++i) {
            if (a.coeff(i) == 0) continue;
            long top = std::min(blen, N - i);
            for (long j = 0; j <= top; ++j)
                r.c_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
        return r;
    }

    /// Multiplicative inverse mod x^{N+1}; requires a unit constant term.
    TruncatedSeries inverse() const {
        if (c_[0] == 0) throw NonUnitSeries();
        long N = order();
        long len = top_nonzero();
        TruncatedSeries r(N);
        Rat c0inv = Rat(1) / c_[0];
        r.c_[0] = c0inv;
        for (long n = 1; n <= N; ++n) {
            Rat acc = 0;
            long top = std::min(n, len);
            for (long j = 1; j <= top; ++j) acc += coeff(j) * r.coeff(n - j);
            r.c_[static_cast<std::size_t>(n)] = -acc * c0inv;
        }
        return r;
    }

    /// Termwise derivative; order drops by one.
    TruncatedSeries derivative() const {
        TruncatedSeries r(std::max<long>(0, order() - 1));
        for (long n = 1; n <= order(); ++n)
            r.set_coeff(n - 1, coeff(n) * Rat(n));
        return r;
    }

    /// Multiply by x^j, truncating at the same order.
    TruncatedSeries shift_up(long j) const {
        TruncatedSeries r(order());
        for (long n = j; n <= order(); ++n) r.c_[static_cast<std::size_t>(n)] = coeff(n - j);
        return r;
    }
    /// Divide by x^v; the first v coefficients must vanish.  Order drops by v.
    TruncatedSeries shift_down(long v) const {
        assert(order() >= v);
        TruncatedSeries r(order() - v);
        for (long n = 0; n <= r.order(); ++n) r.c_[static_cast<std::size_t>(n)] = coeff(n + v);
        return r;
    }

private:
    bool all_integer() const {
        for (const auto& c : c_)
            if (c.get_den() != 1) return false;
        return true;
    }
    long top_nonzero() const {
        for (long n = order(); n >= 0; --n)
            if (coeff(n) != 0) return n;
        return 0;
    }

    std::vector<Rat> c_;
};

/// The counting series f(x) = Σ f_n x^n, the unique power-series root of
/// f = x·(1 + Σ_{i∈S} f^i) with f(0) = 0, solved coefficient by
/// coefficient: the leading x makes [x^n] of the right side depend only
/// on earlier coefficients.  Powers f^i are maintained incrementally.
inline TruncatedSeries solve_counting_series(const FamilySpec& spec, long N) {
    assert(N >= 0);
    const std::size_t d = static_cast<std::size_t>(spec.max_degree);
    std::vector<std::vector<Rat>> pw(d + 1, std::vector<Rat>(static_cast<std::size_t>(N) + 1, Rat(0)));
    pw[0][0] = 1;
    TruncatedSeries f(N);
    for (long n = 1; n <= N; ++n) {
        Rat rhs = (n == 1) ? 1 : 0;
        for (long i : spec.degrees) rhs += pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - 1)];
        f.set_coeff(n, rhs);
        if (rhs == 0) continue;
        // pw[i] ← (old f-part + rhs·x^n)^i, exact binomial update.
        for (std::size_t i = d; i >= 1; --i) {
            Rat fp = 1;
            for (std::size_t j = 1; j <= i && static_cast<long>(j) * n <= N; ++j) {
                fp *= rhs;
                Rat factor = Rat(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(j))) * fp;
                long off = static_cast<long>(j) * n;
                const auto& lower = pw[i - j];
                auto& target = pw[i];
                for (long m = 0; m + off <= N; ++m) {
                    if (lower[static_cast<std::size_t>(m)] == 0) continue;
                    target[static_cast<std::size_t>(m + off)] += factor * lower[static_cast<std::size_t>(m)];
                }
            }
        }
    }
    return f;
}

/// Evaluate Q (or any F-polynomial with polynomial coefficients) at a
/// series; used for the identity Q(x, f) ≡ 0.
inline TruncatedSeries eval_bipoly_series(const BiPoly& p, const TruncatedSeries& f) {
    TruncatedSeries acc(f.order());
    for (long j = p.degree(); j >= 0; --j) {
        acc = acc * f;
        RatFunc c = p.coeff(static_cast<std::size_t>(j));
        acc = acc + TruncatedSeries::from_poly(c.num(), f.order()) *
                        TruncatedSeries::from_poly(c.den(), f.order()).inverse();
    }
    return acc;
}

/// Expand a field element Σ R_j(x)·F^j into its power series, given the
/// counting series f.  Denominator factors x^v are cancelled against the
/// assembled numerator before inversion; the returned order is
/// f.order() − V where V is the largest such valuation, so callers wanting
/// order N must supply f at order N + V.
inline TruncatedSeries eval_field_element(const FieldElement& a, const TruncatedSeries& f) {
    const long Nf = f.order();
    long V = 0;
    for (const auto& c : a.coeffs)
        if (!c.is_zero())
            V = std::max(V, static_cast<long>(c.den().x_valuation()));
    assert(Nf >= V);

    TruncatedSeries fpow = TruncatedSeries::constant(Rat(1), Nf);
    TruncatedSeries total(Nf);
    for (std::size_t j = 0; j < a.coeffs.size(); ++j) {
        if (j > 0) fpow = fpow * f;
        const RatFunc& c = a.coeffs[j];
        if (c.is_zero()) continue;
        long v = static_cast<long>(c.den().x_valuation());
        UniPoly den0 = c.den().shift_down(static_cast<std::size_t>(v));
        TruncatedSeries term = TruncatedSeries::from_poly(c.num(), Nf) * fpow *
                               TruncatedSeries::from_poly(den0, Nf).inverse();
        total = total + term.shift_up(V - v);
    }
    for (long n = 0; n < V; ++n)
        if (total.coeff(n) != 0)
            throw NotAPowerSeries("nonzero coefficient at x^" + std::to_string(n - V));
    return total.shift_down(V);
}

/// Direct numeric solver for the functional equation
/// G(x,z) = x·P(G(x + xz, z)) modulo (x^{N+1}, z^{k+1}).  Returns
/// c_r = [z^r] G(x,z); the factorial-moment series are g_r = r!·c_r.
///
/// The substitution x → x(1+z) preserves x-degree, and the outer factor x
/// makes [x^n] of the right side depend only on smaller x-degrees, so the
/// loop runs n = 1..N.  Powers of B(x,z) = G(x+xz, z) are maintained
/// incrementally with exact binomial updates as each x-slice of G lands.
inline std::vector<TruncatedSeries> solve_numeric_FE(const FamilySpec& spec, long N, long k) {
    assert(N >= 0 && k >= 0);
    const std::size_t d = static_cast<std::size_t>(spec.max_degree);
    const std::size_t K = static_cast<std::size_t>(k);
    // pw[i][s][m] = [z^s x^m] B^i for the B assembled so far.
    auto zero_block = [&] {
        return std::vector<std::vector<Rat>>(K + 1, std::vector<Rat>(static_cast<std::size_t>(N) + 1, Rat(0)));
    };
    std::vector<std::vector<std::vector<Rat>>> pw(d + 1, zero_block());
    pw[0][0][0] = 1;
    std::vector<TruncatedSeries> c(K + 1, TruncatedSeries(N));

    std::vector<Rat> beta(K + 1);
    for (long n = 1; n <= N; ++n) {
        // c_{r,n} = [z^r x^{n-1}] (1 + Σ_{i∈S} B^i).
        bool any = false;
        for (std::size_t r = 0; r <= K; ++r) {
            Rat rhs = (n == 1 && r == 0) ? 1 : 0;
            for (long i : spec.degrees)
                rhs += pw[static_cast<std::size_t>(i)][r][static_cast<std::size_t>(n - 1)];
            c[r].set_coeff(n, rhs);
            if (rhs != 0) any = true;
        }
        if (!any) continue;
        // New x^n slice of B: δ = x^n·β(z), β_s = Σ_t C(n, s−t)·c_{t,n}.
        for (std::size_t s = 0; s <= K; ++s) {
            beta[s] = 0;
            for (std::size_t t = 0; t <= s; ++t) {
                unsigned long pick = static_cast<unsigned long>(s - t);
                if (pick > static_cast<unsigned long>(n)) continue;
                beta[s] += Rat(binomial(static_cast<unsigned long>(n), pick)) * c[t].coeff(n);
            }
        }
        // β^j truncated at z^k, for every j with j·n ≤ N.
        std::vector<std::vector<Rat>> betapow;
        betapow.push_back(std::vector<Rat>(K + 1, Rat(0)));
        betapow[0][0] = 1;
        for (std::size_t j = 1; j <= d && static_cast<long>(j) * n <= N; ++j) {
            std::vector<Rat> next(K + 1, Rat(0));
            for (std::size_t s1 = 0; s1 <= K; ++s1) {
                if (betapow[j - 1][s1] == 0) continue;
                for (std::size_t s2 = 0; s1 + s2 <= K; ++s2)
                    next[s1 + s2] += betapow[j - 1][s1] * beta[s2];
            }
            betapow.push_back(std::move(next));
        }
        // pw[i] ← Σ_j C(i,j)·pw_old[i−j]·(x^n β)^j, descending i so the
        // lower powers read are still the old values.
        for (std::size_t i = d; i >= 1; --i) {
            for (std::size_t j = 1; j <= i && static_cast<long>(j) * n <= N; ++j) {
                Rat cij(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(j)));
                long off = static_cast<long>(j) * n;
                for (std::size_t s2 = 0; s2 <= K; ++s2) {
                    if (betapow[j][s2] == 0) continue;
                    Rat w = cij * betapow[j][s2];
                    for (std::size_t s1 = 0; s1 + s2 <= K; ++s1) {
                        const auto& src = pw[i - j][s1];
                        auto& dst = pw[i][s1 + s2];
                        for (long m = 0; m + off <= N; ++m) {
                            if (src[static_cast<std::size_t>(m)] == 0) continue;
                            dst[static_cast<std::size_t>(m + off)] += w * src[static_cast<std::size_t>(m)];
                        }
                    }
                }
            }
        }
    }
    return c;
}

}  // namespace treeheight

#endif
