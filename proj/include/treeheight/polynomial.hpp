#ifndef TREEHEIGHT_POLYNOMIAL_HPP
#define TREEHEIGHT_POLYNOMIAL_HPP

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "treeheight/errors.hpp"
#include "treeheight/rational.hpp"

namespace treeheight {

/// Dense univariate polynomial with exact rational coefficients.
/// Invariant: the stored leading coefficient is nonzero (zero polynomial
/// stores an empty coefficient vector and reports degree −1).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Rat& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(Rat(1)); }
    static UniPoly x() { return monomial(Rat(1), 1); }
    static UniPoly monomial(const Rat& c, std::size_t deg) {
        UniPoly p;
        if (c != 0) {
            p.c_.assign(deg + 1, Rat(0));
            p.c_[deg] = c;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree, with deg(0) = −1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        UniPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const Rat& s) {
        if (s == 0) return UniPoly();
        UniPoly r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }

    /// Quotient and remainder; the divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
        assert(!b.is_zero());
        UniPoly rem = a;
        UniPoly quot;
        long db = b.degree();
        if (rem.degree() >= db)
            quot.c_.assign(static_cast<std::size_t>(rem.degree() - db) + 1, Rat(0));
        Rat blead_inv = Rat(1) / b.lead();
        while (rem.degree() >= db) {
            long shift = rem.degree() - db;
            Rat q = rem.lead() * blead_inv;
            quot.c_[static_cast<std::size_t>(shift)] = q;
            for (long i = 0; i <= db; ++i)
                rem.c_[static_cast<std::size_t>(i + shift)] -= q * b.coeff(static_cast<std::size_t>(i));
            rem.trim();
        }
        quot.trim();
        return {quot, rem};
    }

    /// Exact division; asserts zero remainder.
    static UniPoly divexact(const UniPoly& a, const UniPoly& b) {
        auto [q, r] = divrem(a, b);
        assert(r.is_zero());
        return q;
    }

    UniPoly derivative() const {
        UniPoly r;
        if (c_.size() <= 1) return r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.c_[i - 1] = c_[i] * Rat(static_cast<long>(i));
        r.trim();
        return r;
    }

    Rat eval(const Rat& v) const {
        Rat acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
        return acc;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * (Rat(1) / lead());
    }

    /// Largest v with x^v dividing the polynomial (0 for the zero poly).
    std::size_t x_valuation() const {
        std::size_t v = 0;
        while (v < c_.size() && c_[v] == 0) ++v;
        return c_.empty() ? 0 : v;
    }

    /// Divide by x^v; requires x^v to divide exactly.
    UniPoly shift_down(std::size_t v) const {
        assert(x_valuation() >= v || is_zero());
        UniPoly r;
        if (c_.size() > v) r.c_.assign(c_.begin() + static_cast<long>(v), c_.end());
        return r;
    }

    /// Monic gcd, computed by a primitive polynomial remainder sequence
    /// over the integers to keep intermediate coefficients small.
    static UniPoly gcd(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero()) return b.monic();
        if (b.is_zero()) return a.monic();
        std::vector<Int> u = primitive_int(a);
        std::vector<Int> v = primitive_int(b);
        if (u.size() < v.size()) std::swap(u, v);
        while (!v.empty()) {
            std::vector<Int> r = pseudo_rem(u, v);
            make_primitive(r);
            u = std::move(v);
            v = std::move(r);
        }
        std::vector<Rat> g(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) g[i] = Rat(u[i]);
        return UniPoly(std::move(g)).monic();
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            Rat c = c_[i];
            if (!out.empty()) {
                out += (c < 0) ? " - " : " + ";
                if (c < 0) c = -c;
            } else if (c < 0) {
                out += "-";
                c = -c;
            }
            if (i == 0 || c != 1) out += rat_to_string(c);
            if (i > 0) {
                if (c != 1) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    // Integer coefficient vector of the primitive associate.
    static std::vector<Int> primitive_int(const UniPoly& p) {
        Int den_lcm = 1;
        for (const auto& c : p.c_)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        std::vector<Int> out(p.c_.size());
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            Rat scaled = p.c_[i] * Rat(den_lcm);
            assert(scaled.get_den() == 1);
            out[i] = scaled.get_num();
        }
        make_primitive(out);
        return out;
    }

    static void make_primitive(std::vector<Int>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        if (v.empty()) return;
        Int g = 0;
        for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (v.back() < 0) g = -g;
        for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }

    // Pseudo-remainder of integer polynomials: lead(v)^(du-dv+1) * u mod v.
    static std::vector<Int> pseudo_rem(std::vector<Int> u, const std::vector<Int>& v) {
        assert(!v.empty());
        const Int& lv = v.back();
        long dv = static_cast<long>(v.size()) - 1;
        while (static_cast<long>(u.size()) - 1 >= dv && !u.empty()) {
            Int lu = u.back();
            long shift = static_cast<long>(u.size()) - 1 - dv;
            for (auto& c : u) c *= lv;
            for (long i = 0; i <= dv; ++i)
                u[static_cast<std::size_t>(i + shift)] -= lu * v[static_cast<std::size_t>(i)];
            while (!u.empty() && u.back() == 0) u.pop_back();
        }
        return u;
    }

    std::vector<Rat> c_;
};

}  // namespace treeheight

#endif
