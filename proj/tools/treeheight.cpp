// Command-line front end: derives generating functions for total-height
// moments on degree-restricted ordered rooted trees, computes per-n
// statistics, and runs the limiting-moment experiment.
//
// Data goes to stdout (or --out); diagnostics go to stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "treeheight/emit.hpp"

namespace th = treeheight;

namespace {

struct RunConfig {
    std::vector<long> degrees;
    long order = 9;
    long terms = 2000;
    std::string backend = "auto";
    std::string format = "json";
    int precision = 30;
    std::string out_path;
    bool do_assert = false;
    double tol = 0.02;
    long cap = th::kDefaultEnumerationCap;
    th::GridOptions grid;
    th::FitOptions fit;
};

th::Backend parse_backend(const std::string& s) {
    if (s == "symbolic") return th::Backend::kSymbolic;
    if (s == "numeric") return th::Backend::kNumeric;
    return th::Backend::kAuto;
}

void write_output(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(cfg.out_path);
        if (!f) throw th::Error("cannot open output file " + cfg.out_path);
        f << payload;
        if (!payload.empty() && payload.back() != '\n') f << "\n";
    }
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--degrees", cfg.degrees, "Degree set S, comma-separated positive integers")
        ->required()
        ->delimiter(',');
    cmd->add_option("--order", cfg.order, "Highest moment order k")->check(CLI::NonNegativeNumber);
    cmd->add_option("--terms", cfg.terms, "Series truncation order N")->check(CLI::NonNegativeNumber);
    cmd->add_option("--backend", cfg.backend, "Pipeline: symbolic|numeric|auto")
        ->check(CLI::IsMember({"symbolic", "numeric", "auto"}));
    cmd->add_option("--format", cfg.format, "Output format: json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--precision", cfg.precision, "Significant decimal digits for alpha values")
        ->check(CLI::Range(10, 1000));
    cmd->add_option("--out", cfg.out_path, "Write data to this file instead of stdout");
}

int cmd_solve(const RunConfig& cfg) {
    auto spec = th::validate_family(cfg.degrees);
    std::string note;
    auto g = th::moment_series(spec, cfg.order, cfg.terms, parse_backend(cfg.backend), &note);
    if (!note.empty()) std::cerr << "solve: " << note << "\n";
    if (cfg.format == "csv") {
        write_output(cfg, th::series_csv(spec, g));
    } else if (cfg.format == "text") {
        std::ostringstream out;
        out << "family S=" << spec.to_string() << ", N=" << cfg.terms << "\n";
        for (std::size_t r = 0; r < g.size(); ++r) {
            out << (r == 0 ? "f " : "g" + std::to_string(r)) << ":";
            for (long n = 0; n <= g[r].order(); ++n) out << " " << th::rat_to_string(g[r].coeff(n));
            out << "\n";
        }
        write_output(cfg, out.str());
    } else {
        write_output(cfg, th::solve_json(spec, g).dump(2));
    }
    return 0;
}

int cmd_stats(const RunConfig& cfg, const std::vector<long>& ns) {
    auto spec = th::validate_family(cfg.degrees);
    long nmax = 0;
    for (long n : ns) nmax = std::max(nmax, n);
    std::string note;
    auto g = th::moment_series(spec, cfg.order, nmax, parse_backend(cfg.backend), &note);
    if (!note.empty()) std::cerr << "stats: " << note << "\n";
    std::vector<th::MomentTable> tables;
    for (long n : ns) {
        auto t = th::moment_table_at(spec, g, n, cfg.precision);
        if (!t) {
            std::cerr << "stats: unsupported n=" << n << " (f_n = 0 for S=" << spec.to_string()
                      << ")\n";
            continue;
        }
        if (t->degenerate)
            std::cerr << "stats: DegenerateDistribution at n=" << n
                      << " (m_2 = 0, alpha undefined)\n";
        tables.push_back(std::move(*t));
    }
    if (cfg.format == "csv") {
        write_output(cfg, th::moment_tables_csv(tables, cfg.precision));
    } else if (cfg.format == "text") {
        std::ostringstream out;
        for (const auto& t : tables) {
            out << "n=" << t.n << " f_n=" << t.f_n.get_str() << " mu=" << th::rat_to_string(t.mu);
            for (std::size_t i = 2; i < t.m.size(); ++i)
                out << " m" << i << "=" << th::rat_to_string(t.m[i]);
            for (std::size_t i = 0; i < t.alpha.size(); ++i)
                out << " alpha" << (i + 3) << "=" << th::dec_to_string(t.alpha[i], cfg.precision);
            if (t.degenerate) out << " (degenerate)";
            out << "\n";
        }
        write_output(cfg, out.str());
    } else {
        th::Json j = th::Json::array();
        for (const auto& t : tables) j.push_back(th::moment_table_json(t, cfg.precision));
        write_output(cfg, j.dump(2));
    }
    return 0;
}

int cmd_limits(const RunConfig& cfg) {
    auto spec = th::validate_family(cfg.degrees);
    std::string note;
    th::FitOptions fit = cfg.fit;
    fit.sig_digits = cfg.precision;
    auto res = th::run_limits(spec, cfg.order, cfg.terms, parse_backend(cfg.backend), cfg.grid, fit,
                              &note);
    if (!note.empty()) std::cerr << "limits: " << note << "\n";
    if (cfg.format == "csv") {
        write_output(cfg, th::limit_estimates_csv(res.estimates, cfg.precision));
    } else if (cfg.format == "text") {
        std::ostringstream out;
        for (const auto& est : res.estimates)
            out << "alpha_" << est.i << ": extrapolated=" << th::dec_to_string(est.extrapolated, 20)
                << " target=" << th::dec_to_string(est.target, 17)
                << " abs_error=" << th::dec_to_string(est.abs_error, 6) << " [" << est.method
                << "]\n";
        write_output(cfg, out.str());
    } else {
        th::Json j = th::Json::array();
        for (const auto& est : res.estimates)
            j.push_back(th::limit_estimate_json(est, cfg.precision));
        write_output(cfg, j.dump(2));
    }
    if (cfg.do_assert) {
        for (const auto& est : res.estimates) {
            if (est.abs_error > th::Dec(cfg.tol)) {
                std::cerr << "limits: assertion failed for alpha_" << est.i
                          << ": |extrapolated - target| = " << th::dec_to_string(est.abs_error, 6)
                          << " > " << cfg.tol << "\n";
                return 1;
            }
        }
    }
    return 0;
}

int cmd_oracle(const RunConfig& cfg, long max_n, bool check) {
    auto spec = th::validate_family(cfg.degrees);
    if (check) {
        auto rep = th::check_pipeline(spec, max_n, cfg.order, cfg.cap);
        std::cerr << rep.to_string() << "\n";
        return rep.ok ? 0 : 1;
    }
    std::ostringstream out;
    for (long n = 1; n <= max_n; ++n) {
        auto hp = th::enumerate_height_poly(spec, n, cfg.cap);
        if (hp.counts.empty()) continue;
        out << "n=" << n << " P_n:";
        for (const auto& [h, c] : hp.counts) out << " " << h << ":" << c.get_str();
        auto F = th::oracle_factorial_moments(hp, cfg.order);
        out << " F:";
        for (const auto& v : F) out << " " << v.get_str();
        out << "\n";
    }
    write_output(cfg, out.str());
    return 0;
}

int cmd_gf(const RunConfig& cfg) {
    auto spec = th::validate_family(cfg.degrees);
    auto bundle = th::derive_all(spec, cfg.order);
    long preview = std::min<long>(19, cfg.terms);
    auto g = th::eval_bundle_series(bundle, preview);
    std::ostringstream out;
    for (long r = 0; r <= cfg.order; ++r) {
        out << "g_" << r << " = " << bundle.g(r).to_string() << "\n  series:";
        for (long n = 0; n <= preview; ++n)
            out << " " << th::rat_to_string(g[static_cast<std::size_t>(r)].coeff(n));
        out << "\n";
    }
    write_output(cfg, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact total-height moment engine for degree-restricted ordered rooted trees"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* solve = app.add_subcommand("solve", "Emit coefficient tables of f and g_1..g_k");
    add_common_flags(solve, cfg);

    std::vector<long> ns;
    auto* stats = app.add_subcommand("stats", "Per-n moment tables");
    add_common_flags(stats, cfg);
    stats->add_option("--n", ns, "Vertex counts to tabulate")->required()->delimiter(',');

    auto* limits = app.add_subcommand("limits", "Extrapolate scaled moments to n -> infinity");
    add_common_flags(limits, cfg);
    limits->add_flag("--assert", cfg.do_assert, "Exit nonzero if any |extrapolated-target| > tol");
    limits->add_option("--tol", cfg.tol, "Acceptance threshold for --assert");
    limits->add_option("--grid-ratio", cfg.grid.ratio, "Geometric spacing of sample sizes");
    limits->add_option("--min-n", cfg.grid.min_n, "Smallest sampled size");
    limits->add_option("--fit-window", cfg.fit.window_fraction,
                       "Largest-n fraction of samples used in the fit");
    limits->add_option("--fit-terms", cfg.fit.correction_terms,
                       "Correction terms in the fit model (1: n^-1/2; 2: +n^-1)")
        ->check(CLI::Range(1, 2));

    long max_n = 17;
    bool check = false;
    auto* oracle = app.add_subcommand("oracle", "Brute-force height distributions and checks");
    add_common_flags(oracle, cfg);
    oracle->add_option("--max-n", max_n, "Enumerate sizes up to this n");
    oracle->add_flag("--check", check, "Cross-check oracle vs both analytic pipelines");
    oracle->add_option("--cap", cfg.cap, "Enumeration size cap");

    auto* gf = app.add_subcommand("gf", "Print closed forms of g_r in x and F = g_0");
    add_common_flags(gf, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(cfg);
        if (stats->parsed()) return cmd_stats(cfg, ns);
        if (limits->parsed()) return cmd_limits(cfg);
        if (oracle->parsed()) return cmd_oracle(cfg, max_n, check);
        if (gf->parsed()) return cmd_gf(cfg);
    } catch (const th::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
