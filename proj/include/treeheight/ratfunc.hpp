#ifndef TREEHEIGHT_RATFUNC_HPP
#define TREEHEIGHT_RATFUNC_HPP

#include <string>
#include <utility>

#include "treeheight/errors.hpp"
#include "treeheight/polynomial.hpp"

namespace treeheight {

/// Rational function in x, kept in canonical reduced form:
/// gcd(num, den) = 1 and the denominator is monic.  Zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(UniPoly::one()) {}
    explicit RatFunc(const Rat& c) : num_(UniPoly(c)), den_(UniPoly::one()) {}
    explicit RatFunc(UniPoly num) : num_(std::move(num)), den_(UniPoly::one()) {}
    RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZeroRatFunc();
        reduce();
    }

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Rat(1)); }
    static RatFunc x() { return RatFunc(UniPoly::x()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == UniPoly::one() && den_ == UniPoly::one(); }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZeroRatFunc();
        if (a.is_zero()) return RatFunc();
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc inverse() const {
        if (is_zero()) throw DivisionByZeroRatFunc();
        return RatFunc(den_, num_);
    }

    /// Derivative with respect to x (quotient rule, then re-reduced).
    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    std::string to_string() const {
        return "( " + num_.to_string() + " / " + den_.to_string() + " )";
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = UniPoly::one();
            return;
        }
        UniPoly g = UniPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = UniPoly::divexact(num_, g);
            den_ = UniPoly::divexact(den_, g);
        }
        Rat lead = den_.lead();
        if (lead != 1) {
            Rat inv = Rat(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    UniPoly num_;
    UniPoly den_;
};

}  // namespace treeheight

#endif
