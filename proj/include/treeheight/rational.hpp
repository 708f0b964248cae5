#ifndef TREEHEIGHT_RATIONAL_HPP
#define TREEHEIGHT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace treeheight {

using Int = mpz_class;
using Rat = mpq_class;
using Dec = mpf_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Exact n! as a big integer.
inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Exact binomial coefficient C(n, k).
inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Falling factorial h·(h−1)⋯(h−r+1); the empty product is 1.
inline Int falling_factorial(const Int& h, unsigned long r) {
    Int acc = 1;
    for (unsigned long j = 0; j < r; ++j) acc *= h - static_cast<long>(j);
    return acc;
}

/// "p/q" (or just "p" when the denominator is 1); the exact textual form
/// used in all JSON/CSV output.
inline std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

/// Decimal rendering of a high-precision float with the given number of
/// significant digits, plain positional notation (no exponent).
inline std::string dec_to_string(const Dec& v, int sig_digits) {
    if (v == 0) return "0";
    mp_exp_t exp10 = 0;
    std::string digits = v.get_str(exp10, 10, sig_digits);
    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits.erase(0, 1);
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::string out;
    if (exp10 <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-exp10), '0') + digits;
    } else if (static_cast<std::size_t>(exp10) >= digits.size()) {
        out = digits + std::string(static_cast<std::size_t>(exp10) - digits.size(), '0');
    } else {
        out = digits.substr(0, static_cast<std::size_t>(exp10)) + "." +
              digits.substr(static_cast<std::size_t>(exp10));
    }
    return neg ? "-" + out : out;
}

/// Working precision in bits for a decimal significant-digit request,
/// with guard bits so rounding never shows in the printed digits.
inline mp_bitcnt_t bits_for_digits(int sig_digits) {
    return static_cast<mp_bitcnt_t>(sig_digits * 3.33) + 64;
}

}  // namespace treeheight

#endif
