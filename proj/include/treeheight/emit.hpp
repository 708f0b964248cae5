#ifndef TREEHEIGHT_EMIT_HPP
#define TREEHEIGHT_EMIT_HPP

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "treeheight/engine.hpp"

namespace treeheight {

// All numerals in JSON/CSV are strings: exact integers, exact "p/q"
// rationals, or fixed-precision decimals.  Output never contains binary
// floating point, so files reproduce bit-for-bit across platforms.

using Json = nlohmann::ordered_json;

inline Json family_json(const FamilySpec& spec) {
    Json a = Json::array();
    for (long d : spec.degrees) a.push_back(d);
    return a;
}

inline Json series_json(const TruncatedSeries& s) {
    Json a = Json::array();
    for (long n = 0; n <= s.order(); ++n) a.push_back(rat_to_string(s.coeff(n)));
    return a;
}

inline Json moment_table_json(const MomentTable& t, int sig_digits) {
    Json j;
    j["family"] = family_json(t.family);
    j["n"] = t.n;
    j["f_n"] = t.f_n.get_str();
    j["mu"] = rat_to_string(t.mu);
    Json m = Json::array();
    for (std::size_t i = 2; i < t.m.size(); ++i) m.push_back(rat_to_string(t.m[i]));
    j["m"] = m;
    Json a = Json::array();
    for (const auto& v : t.alpha) a.push_back(dec_to_string(v, sig_digits));
    j["alpha"] = a;
    if (t.degenerate) j["degenerate"] = true;
    return j;
}

inline Json limit_estimate_json(const LimitEstimate& est, int sig_digits) {
    Json j;
    j["i"] = est.i;
    Json samples = Json::array();
    for (const auto& [n, v] : est.values)
        samples.push_back(Json::array({n, dec_to_string(v, sig_digits)}));
    j["samples"] = samples;
    j["extrapolated"] = dec_to_string(est.extrapolated, sig_digits);
    j["target"] = dec_to_string(est.target, sig_digits);
    j["abs_error"] = dec_to_string(est.abs_error, sig_digits);
    j["method"] = est.method;
    return j;
}

inline Json solve_json(const FamilySpec& spec, const std::vector<TruncatedSeries>& g) {
    Json j;
    j["family"] = family_json(spec);
    j["terms"] = g[0].order();
    j["f"] = series_json(g[0]);
    Json gr;
    for (std::size_t r = 1; r < g.size(); ++r)
        gr["g" + std::to_string(r)] = series_json(g[r]);
    j["g"] = std::move(gr);
    return j;
}

// --- CSV mirrors of the same columns ---

inline std::string moment_tables_csv(const std::vector<MomentTable>& tables, int sig_digits) {
    std::ostringstream out;
    std::size_t kmax = 0, amax = 0;
    for (const auto& t : tables) {
        kmax = std::max(kmax, t.m.size());
        amax = std::max(amax, t.alpha.size());
    }
    out << "family,n,f_n,mu";
    for (std::size_t i = 2; i < kmax; ++i) out << ",m" << i;
    for (std::size_t i = 0; i < amax; ++i) out << ",alpha" << (i + 3);
    out << "\n";
    for (const auto& t : tables) {
        out << "\"" << t.family.to_string() << "\"," << t.n << "," << t.f_n.get_str() << ","
            << rat_to_string(t.mu);
        for (std::size_t i = 2; i < kmax; ++i)
            out << "," << (i < t.m.size() ? rat_to_string(t.m[i]) : "");
        for (std::size_t i = 0; i < amax; ++i)
            out << "," << (i < t.alpha.size() ? dec_to_string(t.alpha[i], sig_digits) : "");
        out << "\n";
    }
    return out.str();
}

inline std::string limit_estimates_csv(const std::vector<LimitEstimate>& ests, int sig_digits) {
    std::ostringstream out;
    out << "i,extrapolated,target,abs_error,method\n";
    for (const auto& est : ests)
        out << est.i << "," << dec_to_string(est.extrapolated, sig_digits) << ","
            << dec_to_string(est.target, sig_digits) << ","
            << dec_to_string(est.abs_error, sig_digits) << ",\"" << est.method << "\"\n";
    return out.str();
}

inline std::string series_csv(const FamilySpec& spec, const std::vector<TruncatedSeries>& g) {
    std::ostringstream out;
    out << "n,f";
    for (std::size_t r = 1; r < g.size(); ++r) out << ",g" << r;
    out << "\n";
    (void)spec;
    for (long n = 0; n <= g[0].order(); ++n) {
        out << n;
        for (const auto& s : g) out << "," << rat_to_string(s.coeff(n));
        out << "\n";
    }
    return out.str();
}

}  // namespace treeheight

#endif
