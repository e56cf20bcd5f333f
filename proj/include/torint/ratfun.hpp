#pragma once

#include <map>
#include <string>

#include "torint/poly.hpp"

namespace torint {

/**
 * Rational function num/den in named parameters, exact.
 *
 * Normal form: constant denominators are folded into the numerator, the
 * denominator is monic under the canonical term order, and a full exact
 * division is attempted.  Zero test is exact (num == 0); equality is
 * decided by cross multiplication so unreduced but equal fractions
 * compare equal.
 */
class RatFun {
  public:
    RatFun() : num_(), den_(1) {}
    RatFun(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT
    RatFun(QuadExt c) : num_(std::move(c)), den_(1) {}  // NOLINT
    RatFun(Rat c) : num_(std::move(c)), den_(1) {}      // NOLINT
    RatFun(long c) : num_(c), den_(1) {}                // NOLINT
    RatFun(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw invalid_input("rational function with zero denominator");
        normalize();
    }

    static RatFun parameter(const std::string& name) { return RatFun(Poly::variable(name)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    QuadExt constant_value() const {
        return num_.constant_value() / den_.constant_value();
    }

    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFun operator+(const RatFun& x, const RatFun& y) {
        return RatFun(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend RatFun operator-(const RatFun& x, const RatFun& y) { return x + (-y); }
    friend RatFun operator*(const RatFun& x, const RatFun& y) {
        return RatFun(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend RatFun operator/(const RatFun& x, const RatFun& y) {
        if (y.is_zero()) throw invalid_input("division by zero rational function");
        return RatFun(x.num_ * y.den_, x.den_ * y.num_);
    }
    RatFun& operator+=(const RatFun& y) { return *this = *this + y; }
    RatFun& operator-=(const RatFun& y) { return *this = *this - y; }
    RatFun& operator*=(const RatFun& y) { return *this = *this * y; }
    RatFun& operator/=(const RatFun& y) { return *this = *this / y; }

    friend bool operator==(const RatFun& x, const RatFun& y) {
        return (x.num_ * y.den_ - y.num_ * x.den_).is_zero();
    }
    friend bool operator!=(const RatFun& x, const RatFun& y) { return !(x == y); }

    RatFun scaled(const QuadExt& c) const { return RatFun(num_.scaled(c), den_); }

    QuadExt eval(const std::map<std::string, QuadExt>& vals) const {
        QuadExt d = den_.eval(vals);
        if (d.is_zero()) throw invalid_input("denominator vanishes at assignment");
        return num_.eval(vals) / d;
    }

    RatFun subs(const std::map<std::string, QuadExt>& vals) const {
        Poly d = den_.eval_partial(vals);
        if (d.is_zero()) throw invalid_input("denominator vanishes under substitution");
        return RatFun(num_.eval_partial(vals), d);
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        std::string n = num_.str(), d = den_.str();
        if (num_.terms().size() > 1) n = "(" + n + ")";
        if (den_.terms().size() > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

  private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        if (!den_.is_constant()) {
            if (auto q = num_.divexact(den_)) {
                num_ = std::move(*q);
                den_ = Poly(1);
                return;
            }
        }
        QuadExt lead = den_.leading().second;
        if (!(lead == QuadExt(1))) {
            QuadExt inv = QuadExt(1) / lead;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Poly num_, den_;
};

}  // namespace torint
