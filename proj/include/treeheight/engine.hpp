#ifndef TREEHEIGHT_ENGINE_HPP
#define TREEHEIGHT_ENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "treeheight/oracle.hpp"

namespace treeheight {

enum class Backend { kSymbolic, kNumeric, kAuto };

inline std::string backend_name(Backend b) {
    switch (b) {
        case Backend::kSymbolic: return "symbolic";
        case Backend::kNumeric: return "numeric";
        default: return "auto";
    }
}

/// Series g_0..g_k at order N in the factorial normalization (g_r = r!·c_r,
/// so [x^n] g_r = F_r(n)).  The auto backend tries the symbolic closed
/// forms first and falls back to the numeric solver on ReducibleModulus,
/// recording the reason in `note`.
inline std::vector<TruncatedSeries> moment_series(const FamilySpec& spec, long k, long N,
                                                  Backend backend = Backend::kAuto,
                                                  std::string* note = nullptr) {
    if (backend != Backend::kNumeric) {
        try {
            MomentGFBundle bundle = derive_all(spec, k);
            return eval_bundle_series(bundle, N);
        } catch (const ReducibleModulus& e) {
            if (backend == Backend::kSymbolic) throw;
            if (note) *note = std::string("symbolic pipeline unavailable (") + e.what() +
                              "), using numeric FE solver";
        }
    }
    auto c = solve_numeric_FE(spec, N, k);
    Int rfac = 1;
    for (long r = 1; r <= k; ++r) {
        rfac *= r;
        c[static_cast<std::size_t>(r)] = c[static_cast<std::size_t>(r)] * Rat(rfac);
    }
    return c;
}

/// Moment table for one n, read off the moment series.  Returns nothing
/// when f_n = 0 (no trees of that size).
inline std::optional<MomentTable> moment_table_at(const FamilySpec& spec,
                                                  const std::vector<TruncatedSeries>& g,
                                                  long n, int sig_digits = 30) {
    if (n < 1 || n > g[0].order() || g[0].coeff(n) == 0) return std::nullopt;
    std::vector<Int> F(g.size());
    for (std::size_t r = 0; r < g.size(); ++r) {
        const Rat& v = g[r].coeff(n);
        assert(is_integer(v));
        F[r] = v.get_num();
    }
    return build_moment_table(spec, n, std::move(F), sig_digits);
}

struct GridOptions {
    long min_n = 15;
    double ratio = 1.5;  // geometric spacing between consecutive samples
};

/// Geometric grid of supported sizes (f_n > 0) descending from N, snapped
/// to the nearest supported n; lacunary families sample only sizes that
/// actually occur.
inline std::vector<long> sample_grid(const TruncatedSeries& f, long N, const GridOptions& opt = {}) {
    auto snap = [&](long target) -> long {
        for (long delta = 0; delta <= N; ++delta) {
            if (target - delta >= 1 && f.coeff(target - delta) != 0) return target - delta;
            if (target + delta <= N && f.coeff(target + delta) != 0) return target + delta;
        }
        return -1;
    };
    std::vector<long> grid;
    double t = static_cast<double>(std::min(N, f.order()));
    while (t >= static_cast<double>(opt.min_n)) {
        long n = snap(static_cast<long>(t + 0.5));
        if (n > 0 && (grid.empty() || n < grid.back()) && n >= opt.min_n) grid.push_back(n);
        t /= opt.ratio;
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

struct LimitsResult {
    std::vector<MomentTable> tables;       // one per grid point
    std::vector<LimitEstimate> estimates;  // for i = 3..k
};

/// The universality experiment: sample α_i(n) on a geometric grid up to
/// N and extrapolate each against the Brownian-excursion-area targets.
inline LimitsResult run_limits(const FamilySpec& spec, long k, long N,
                               Backend backend = Backend::kAuto,
                               const GridOptions& grid_opt = {}, const FitOptions& fit_opt = {},
                               std::string* note = nullptr) {
    auto g = moment_series(spec, k, N, backend, note);
    auto grid = sample_grid(g[0], N, grid_opt);
    LimitsResult result;
    for (long n : grid) {
        auto t = moment_table_at(spec, g, n, fit_opt.sig_digits);
        if (t && !t->degenerate) result.tables.push_back(std::move(*t));
    }
    mp_bitcnt_t prec = bits_for_digits(fit_opt.sig_digits);
    for (int i = 3; i <= static_cast<int>(k); ++i) {
        std::vector<std::pair<long, Dec>> samples;
        for (const auto& t : result.tables)
            samples.push_back({t.n, t.alpha[static_cast<std::size_t>(i - 3)]});
        result.estimates.push_back(
            limit_estimate(i, samples, alpha_target(i, prec), fit_opt));
    }
    return result;
}

}  // namespace treeheight

#endif
