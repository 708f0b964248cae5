#ifndef TREEHEIGHT_STATS_HPP
#define TREEHEIGHT_STATS_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treeheight/family.hpp"
#include "treeheight/rational.hpp"

namespace treeheight {

/// Limiting scaled moments α₃..α₉ of the Brownian-excursion-area
/// distribution, the reference targets for every tree family.  The
/// closed forms are algebraic expressions in π, e.g.
///   α₃ = (6π − 75/4)·√3·√(π/(10−3π)) / (10−3π),
///   α₄ = (−189π² + 315π + 884) / (7·(10−3π)²);
/// the decimal values below are the normative targets.
inline Dec alpha_target(int i, mp_bitcnt_t prec = 256) {
    static const std::array<const char*, 7> kTargets = {
        "0.7005665293596503",    // α₃ (skewness)
        "3.560394897132889",     // α₄ (kurtosis)
        "7.2563753582799571",    // α₅
        "27.685525695770609",    // α₆
        "90.0171829093603301",   // α₇
        "358.80904151261251",    // α₈
        "1460.7011342971821",    // α₉
    };
    if (i < 3 || i > 9) throw IndexOutOfRange("alpha target index " + std::to_string(i));
    return Dec(kTargets[static_cast<std::size_t>(i - 3)], prec);
}

/// Stirling number of the second kind, S2(i,r) = r·S2(i−1,r) + S2(i−1,r−1).
inline Int stirling2(long i, long r) {
    if (r < 0 || i < 0 || r > i) throw IndexOutOfRange(
        "stirling2(" + std::to_string(i) + "," + std::to_string(r) + ")");
    std::vector<Int> row(static_cast<std::size_t>(r) + 1, 0);
    row[0] = 1;  // S2(0,0)
    for (long n = 1; n <= i; ++n) {
        for (long m = std::min(n, r); m >= 1; --m)
            row[static_cast<std::size_t>(m)] =
                Int(m) * row[static_cast<std::size_t>(m)] + row[static_cast<std::size_t>(m - 1)];
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(r)];
}

/// Raw-moment numerators from factorial-moment numerators:
/// N_i = Σ_{r=0}^{i} S2(i,r)·F_r.
inline std::vector<Int> factorial_to_raw(const std::vector<Int>& F) {
    std::vector<Int> N(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) {
        Int acc = 0;
        for (std::size_t r = 0; r <= i; ++r)
            acc += stirling2(static_cast<long>(i), static_cast<long>(r)) * F[r];
        N[i] = acc;
    }
    return N;
}

/// Exact mean and central moments from raw-moment numerators:
/// μ = N₁/N₀,  m_i = Σ_r (−1)^r C(i,r)·μ^r·N_{i−r}/N₀.
inline std::pair<Rat, std::vector<Rat>> central_moments(const std::vector<Int>& N, long k) {
    if (N.empty() || N[0] == 0) throw EmptySampleSpace();
    Rat n0 = Rat(N[0]);
    Rat mu = Rat(N[1]) / n0;
    std::vector<Rat> m(static_cast<std::size_t>(k) + 1, Rat(0));
    for (long i = 2; i <= k; ++i) {
        Rat acc = 0;
        Rat mupow = 1;
        for (long r = 0; r <= i; ++r) {
            Rat term = Rat(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(r))) *
                       mupow * Rat(N[static_cast<std::size_t>(i - r)]) / n0;
            acc += (r % 2 == 0) ? term : -term;
            mupow *= mu;
        }
        m[static_cast<std::size_t>(i)] = acc;
    }
    return {mu, m};
}

/// √v as an exact rational when v is the square of one.
inline std::optional<Rat> sqrt_rat_exact(const Rat& v) {
    const Int& p = v.get_num();
    const Int& q = v.get_den();
    if (!mpz_perfect_square_p(p.get_mpz_t()) || !mpz_perfect_square_p(q.get_mpz_t()))
        return std::nullopt;
    Int sp, sq;
    mpz_sqrt(sp.get_mpz_t(), p.get_mpz_t());
    mpz_sqrt(sq.get_mpz_t(), q.get_mpz_t());
    Rat s(sp, sq);
    s.canonicalize();
    return s;
}

/// √(m₂) exactly when m₂ is the square of a rational, else as a
/// high-precision decimal.
inline Dec sqrt_rat(const Rat& v, mp_bitcnt_t prec) {
    if (auto s = sqrt_rat_exact(v)) return Dec(*s, prec);
    Dec d(v, prec);
    return sqrt(d);
}

/// Scaled moments α_i = m_i / m₂^{i/2} for i = 3..k.  m must hold the
/// central moments with m[i] = m_i.  When √m₂ is rational every α_i is
/// formed as an exact rational before the single decimal conversion.
inline std::vector<Dec> alpha_coefficients(const std::vector<Rat>& m, int sig_digits = 30) {
    if (m.size() < 3 || m[2] <= 0) throw DegenerateDistribution();
    mp_bitcnt_t prec = bits_for_digits(sig_digits);
    std::vector<Dec> alpha;
    if (auto s = sqrt_rat_exact(m[2])) {
        Rat spow = *s * *s * *s;
        for (std::size_t i = 3; i < m.size(); ++i) {
            alpha.push_back(Dec(m[i] / spow, prec));
            spow *= *s;
        }
        return alpha;
    }
    Dec s = sqrt(Dec(m[2], prec));
    Dec spow = s * s * s;
    for (std::size_t i = 3; i < m.size(); ++i) {
        alpha.push_back(Dec(m[i], prec) / spow);
        spow *= s;
    }
    return alpha;
}

/// Per-n exact moment data for one family.
struct MomentTable {
    FamilySpec family;
    long n = 0;
    Int f_n;                  // = N_0 = F_0
    std::vector<Int> F;       // factorial-moment numerators, r = 0..k
    std::vector<Int> N;       // raw-moment numerators, i = 0..k
    Rat mu;
    std::vector<Rat> m;       // central moments, m[i] valid for i = 2..k
    std::vector<Dec> alpha;   // α_3..α_k; empty when degenerate
    bool degenerate = false;  // m_2 = 0, scaled moments undefined
};

/// Assemble a MomentTable from the factorial-moment numerators F_0..F_k.
inline MomentTable build_moment_table(const FamilySpec& family, long n,
                                      std::vector<Int> F, int sig_digits = 30) {
    MomentTable t;
    t.family = family;
    t.n = n;
    t.F = std::move(F);
    t.f_n = t.F[0];
    t.N = factorial_to_raw(t.F);
    auto [mu, m] = central_moments(t.N, static_cast<long>(t.N.size()) - 1);
    t.mu = mu;
    t.m = std::move(m);
    if (t.m.size() > 2 && t.m[2] > 0) {
        t.alpha = alpha_coefficients(t.m, sig_digits);
    } else {
        t.degenerate = true;
    }
    return t;
}

struct LimitEstimate {
    int i = 0;
    std::vector<std::pair<long, Dec>> values;  // (n, α_i(n)), increasing n
    Dec extrapolated;
    Dec target;
    Dec abs_error;
    Dec residual;  // RMS of fit residuals over the window
    std::string method;
};

struct FitOptions {
    double window_fraction = 0.5;  // largest-n fraction of samples used
    int correction_terms = 2;      // n^{−1/2} and n^{−1}
    int sig_digits = 30;
};

/// Least-squares fit α_i(n) ≈ α_i(∞) + a·n^{−1/2} + b·n^{−1} over the
/// largest-n window, via normal equations at extended precision.
inline LimitEstimate limit_estimate(int i, const std::vector<std::pair<long, Dec>>& samples,
                                    const Dec& target, const FitOptions& opt = {}) {
    if (samples.size() < 4) throw InsufficientSamples(samples.size());
    mp_bitcnt_t prec = bits_for_digits(opt.sig_digits);

    std::size_t window = std::max<std::size_t>(
        static_cast<std::size_t>(opt.correction_terms) + 1,
        static_cast<std::size_t>(static_cast<double>(samples.size()) * opt.window_fraction + 0.5));
    window = std::min(window, samples.size());
    std::size_t start = samples.size() - window;

    const int p = opt.correction_terms + 1;  // number of fit parameters
    std::vector<std::vector<Dec>> ata(static_cast<std::size_t>(p),
                                      std::vector<Dec>(static_cast<std::size_t>(p), Dec(0, prec)));
    std::vector<Dec> atb(static_cast<std::size_t>(p), Dec(0, prec));
    for (std::size_t s = start; s < samples.size(); ++s) {
        Dec nn(samples[s].first, prec);
        std::vector<Dec> row{Dec(1, prec), Dec(1, prec) / sqrt(nn), Dec(1, prec) / nn};
        row.resize(static_cast<std::size_t>(p), Dec(0, prec));
        for (int a = 0; a < p; ++a) {
            for (int b = 0; b < p; ++b)
                ata[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +=
                    row[static_cast<std::size_t>(a)] * row[static_cast<std::size_t>(b)];
            atb[static_cast<std::size_t>(a)] += row[static_cast<std::size_t>(a)] * samples[s].second;
        }
    }
    // Gaussian elimination with partial pivoting.
    std::vector<Dec> sol = atb;
    for (int col = 0; col < p; ++col) {
        int piv = col;
        for (int r = col + 1; r < p; ++r)
            if (abs(ata[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
                abs(ata[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]))
                piv = r;
        std::swap(ata[static_cast<std::size_t>(col)], ata[static_cast<std::size_t>(piv)]);
        std::swap(sol[static_cast<std::size_t>(col)], sol[static_cast<std::size_t>(piv)]);
        for (int r = col + 1; r < p; ++r) {
            Dec factor = ata[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                         ata[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (int cc = col; cc < p; ++cc)
                ata[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
                    factor * ata[static_cast<std::size_t>(col)][static_cast<std::size_t>(cc)];
            sol[static_cast<std::size_t>(r)] -= factor * sol[static_cast<std::size_t>(col)];
        }
    }
    std::vector<Dec> coef(static_cast<std::size_t>(p), Dec(0, prec));
    for (int r = p - 1; r >= 0; --r) {
        Dec acc = sol[static_cast<std::size_t>(r)];
        for (int cc = r + 1; cc < p; ++cc)
            acc -= ata[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] *
                   coef[static_cast<std::size_t>(cc)];
        coef[static_cast<std::size_t>(r)] = acc / ata[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
    }

    LimitEstimate est;
    est.i = i;
    est.values = samples;
    est.extrapolated = coef[0];
    est.target = target;
    est.abs_error = abs(coef[0] - target);
    Dec res2(0, prec);
    for (std::size_t s = start; s < samples.size(); ++s) {
        Dec nn(samples[s].first, prec);
        Dec fit = coef[0];
        if (p > 1) fit += coef[1] / sqrt(nn);
        if (p > 2) fit += coef[2] / nn;
        Dec r = samples[s].second - fit;
        res2 += r * r;
    }
    est.residual = sqrt(res2 / Dec(static_cast<long>(window), prec));
    est.method = "least-squares, " + std::to_string(opt.correction_terms) +
                 " correction terms, window " + std::to_string(window) + "/" +
                 std::to_string(samples.size());
    return est;
}

}  // namespace treeheight

#endif
