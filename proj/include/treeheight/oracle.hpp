#ifndef TREEHEIGHT_ORACLE_HPP
#define TREEHEIGHT_ORACLE_HPP

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "treeheight/momentgf.hpp"
#include "treeheight/stats.hpp"

namespace treeheight {

/// Exact distribution of the total height H over the n-vertex trees of
/// one family: counts[h] = number of trees with H = h.  Empty when the
/// family has no tree on n vertices.
struct HeightPolynomial {
    long n = 0;
    std::map<long, Int> counts;

    Int total() const {
        Int t = 0;
        for (const auto& [h, c] : counts) t += c;
        return t;
    }
};

namespace detail {

using HeightDist = std::map<long, Int>;

inline HeightDist convolve(const HeightDist& a, const HeightDist& b) {
    HeightDist r;
    for (const auto& [ha, ca] : a)
        for (const auto& [hb, cb] : b) r[ha + hb] += ca * cb;
    return r;
}

/// Height distributions D_1..D_n for one family, built bottom-up.  A tree
/// of size m is a root with i ∈ S subtrees of total size m−1; attaching
/// them raises every height by one, adding m−1 to the total.
inline std::vector<HeightDist> height_dists(const FamilySpec& spec, long n) {
    std::vector<HeightDist> D(static_cast<std::size_t>(n) + 1);
    if (n >= 1) D[1] = {{0, Int(1)}};
    for (long m = 2; m <= n; ++m) {
        // comp[s] = distribution over forests of j subtrees with total size s.
        HeightDist out;
        std::vector<HeightDist> comp(static_cast<std::size_t>(m), HeightDist{});
        comp[0] = {{0, Int(1)}};
        long jmax = 0;
        for (long i : spec.degrees) jmax = std::max(jmax, i);
        for (long j = 1; j <= jmax && j <= m - 1; ++j) {
            std::vector<HeightDist> next(static_cast<std::size_t>(m), HeightDist{});
            for (long s = j; s <= m - 1; ++s)
                for (long t = 1; t <= s - (j - 1); ++t)
                    if (!comp[static_cast<std::size_t>(s - t)].empty() &&
                        !D[static_cast<std::size_t>(t)].empty())
                        for (const auto& [hf, cf] : comp[static_cast<std::size_t>(s - t)])
                            for (const auto& [ht, ct] : D[static_cast<std::size_t>(t)])
                                next[static_cast<std::size_t>(s)][hf + ht] += cf * ct;
            comp = std::move(next);
            for (long i : spec.degrees)
                if (i == j)
                    for (const auto& [h, c] : comp[static_cast<std::size_t>(m - 1)])
                        out[h + (m - 1)] += c;
        }
        D[static_cast<std::size_t>(m)] = std::move(out);
    }
    return D;
}

/// Non-memoized reference enumeration: recursively walks every shape.
/// Exponential; only used to validate the DP at small n.
inline HeightDist enumerate_direct(const FamilySpec& spec, long n) {
    if (n == 1) return {{0, Int(1)}};
    HeightDist out;
    for (long i : spec.degrees) {
        // All compositions of n−1 into i positive parts.
        std::vector<long> parts(static_cast<std::size_t>(i));
        std::function<void(long, long, const HeightDist&)> rec =
            [&](long idx, long remaining, const HeightDist& acc) {
                if (idx == i) {
                    if (remaining == 0)
                        for (const auto& [h, c] : acc) out[h + (n - 1)] += c;
                    return;
                }
                for (long sz = 1; sz <= remaining - (i - idx - 1); ++sz) {
                    HeightDist sub = enumerate_direct(spec, sz);
                    if (sub.empty()) continue;
                    rec(idx + 1, remaining - sz, convolve(acc, sub));
                }
            };
        rec(0, n - 1, HeightDist{{0, Int(1)}});
    }
    return out;
}

}  // namespace detail

inline constexpr long kDefaultEnumerationCap = 25;

/// Brute-force P_n(y) as an explicit height → count map.
inline HeightPolynomial enumerate_height_poly(const FamilySpec& spec, long n,
                                              long cap = kDefaultEnumerationCap) {
    if (n < 1 || n > cap) throw CapExceeded(n, cap);
    HeightPolynomial hp;
    hp.n = n;
    hp.counts = detail::height_dists(spec, n)[static_cast<std::size_t>(n)];
    return hp;
}

/// F_r(n) = Σ_t H(t)·(H(t)−1)⋯(H(t)−r+1), directly from the counts map.
inline std::vector<Int> oracle_factorial_moments(const HeightPolynomial& hp, long k) {
    std::vector<Int> F(static_cast<std::size_t>(k) + 1, 0);
    for (const auto& [h, c] : hp.counts)
        for (long r = 0; r <= k; ++r)
            F[static_cast<std::size_t>(r)] += c * falling_factorial(Int(h), static_cast<unsigned long>(r));
    return F;
}

/// Outcome of cross-checking the three pipelines.
struct CheckReport {
    bool ok = true;
    bool symbolic_available = true;
    FamilySpec family;
    long n = -1;         // first mismatching n (when !ok)
    long r = -1;         // first mismatching r
    std::string detail;  // human-readable mismatch description

    std::string to_string() const {
        if (ok) {
            std::string s = "oracle check passed for S=" + family.to_string();
            if (!symbolic_available) s += " (numeric pipeline only: " + detail + ")";
            return s;
        }
        return "MISMATCH for S=" + family.to_string() + " at n=" + std::to_string(n) +
               ", r=" + std::to_string(r) + ": " + detail;
    }
};

/// Compare moment series (factorial normalization, [x^n] g_r = F_r(n))
/// against the brute-force oracle for every supported n ≤ n_max, r ≤ k.
/// Reports the first mismatch.
inline CheckReport check_series_against_oracle(const FamilySpec& spec,
                                               const std::vector<TruncatedSeries>& g,
                                               long n_max, long k, const std::string& label) {
    CheckReport rep;
    rep.family = spec;
    auto dists = detail::height_dists(spec, n_max);
    for (long n = 1; n <= n_max; ++n) {
        const auto& dist = dists[static_cast<std::size_t>(n)];
        if (dist.empty()) continue;
        HeightPolynomial hp{n, dist};
        std::vector<Int> F = oracle_factorial_moments(hp, k);
        for (long r = 0; r <= k; ++r) {
            Rat got = g[static_cast<std::size_t>(r)].coeff(n);
            if (got != Rat(F[static_cast<std::size_t>(r)])) {
                rep.ok = false;
                rep.n = n;
                rep.r = r;
                rep.detail = label + " pipeline gives " + rat_to_string(got) +
                             ", oracle gives " + F[static_cast<std::size_t>(r)].get_str();
                return rep;
            }
        }
    }
    return rep;
}

/// For every n ≤ n_max with f_n > 0 and every r ≤ k, assert that the
/// brute-force F_r(n) equals [x^n] g_r from the symbolic pipeline and
/// r!·c_r from the numeric solver.  Reports the first mismatch.
inline CheckReport check_pipeline(const FamilySpec& spec, long n_max, long k,
                                  long cap = kDefaultEnumerationCap) {
    if (n_max > cap) throw CapExceeded(n_max, cap);

    auto numeric = solve_numeric_FE(spec, n_max, k);
    Int rfac = 1;
    for (long r = 1; r <= k; ++r) {
        rfac *= r;
        numeric[static_cast<std::size_t>(r)] = numeric[static_cast<std::size_t>(r)] * Rat(rfac);
    }
    CheckReport rep = check_series_against_oracle(spec, numeric, n_max, k, "numeric");
    if (!rep.ok) return rep;

    try {
        MomentGFBundle bundle = derive_all(spec, k);
        auto symbolic = eval_bundle_series(bundle, n_max);
        CheckReport sym = check_series_against_oracle(spec, symbolic, n_max, k, "symbolic");
        if (!sym.ok) return sym;
    } catch (const ReducibleModulus& e) {
        rep.symbolic_available = false;
        rep.detail = e.what();
    }
    return rep;
}

}  // namespace treeheight

#endif
