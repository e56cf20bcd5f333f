#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "torint/rational.hpp"

namespace torint {

/**
 * Element a + b*sqrt(d) of a real quadratic field, exact.
 *
 * d is a square-free integer > 1 shared by all values combined in one
 * computation; purely rational values are normalized to b = 0, d = 0 so
 * they mix freely with any field.
 */
class QuadExt {
  public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(Rat a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT: implicit by design
    QuadExt(long a) : a_(a), b_(0), d_(0) {}            // NOLINT
    QuadExt(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        normalize();
    }

    static QuadExt sqrt_of(long d) { return QuadExt(Rat(0), Rat(1), d); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long d() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    QuadExt& operator+=(const QuadExt& o) {
        long d = merged_d(o);
        a_ += o.a_;
        b_ += o.b_;
        d_ = d;
        normalize();
        return *this;
    }
    QuadExt& operator-=(const QuadExt& o) { return *this += -o; }

    QuadExt& operator*=(const QuadExt& o) {
        long d = merged_d(o);
        Rat na = a_ * o.a_ + b_ * o.b_ * d;
        Rat nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        d_ = d;
        normalize();
        return *this;
    }

    QuadExt inverse() const {
        if (is_zero()) throw invalid_input("division by zero QuadExt");
        Rat n = a_ * a_ - b_ * b_ * d_;
        // n == 0 would mean sqrt(d) rational, impossible for square-free d > 1
        return QuadExt(a_ / n, -b_ / n, d_);
    }
    QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    /// Structural order: (a, b) lexicographic.  Total, used for map keys.
    friend bool operator<(const QuadExt& x, const QuadExt& y) {
        int c = cmp(x.a_, y.a_);
        if (c != 0) return c < 0;
        return cmp(x.b_, y.b_) < 0;
    }

    QuadExt conj() const { return QuadExt(a_, -b_, d_); }

    double to_double() const {
        return rat_double(a_) + rat_double(b_) * std::sqrt(double(d_));
    }

    std::string str() const {
        if (b_ == 0) return rat_str(a_);
        std::string s;
        if (a_ != 0) s = rat_str(a_) + (rat_sign(b_) > 0 ? "+" : "");
        if (b_ == 1)
            s += "√" + std::to_string(d_);
        else if (b_ == -1)
            s += "-√" + std::to_string(d_);
        else
            s += rat_str(b_) + "√" + std::to_string(d_);
        return s;
    }

  private:
    void normalize() {
        if (d_ == 1) {
            a_ += b_;
            b_ = 0;
        }
        if (b_ == 0) d_ = 0;
        if (b_ != 0 && d_ <= 1) throw invalid_input("radicand must be > 1");
    }
    long merged_d(const QuadExt& o) const {
        if (b_ == 0) return o.d_;
        if (o.b_ == 0) return d_;
        if (d_ != o.d_)
            throw field_mismatch("mixing radicands " + std::to_string(d_) + " and " +
                                 std::to_string(o.d_));
        return d_;
    }

    Rat a_, b_;
    long d_;
};

/// Sign of a + b*sqrt(d) under the real embedding sqrt(d) > 0.
/// Decided by rational comparisons of a^2 and b^2 d with case analysis.
inline int qext_sign(const QuadExt& x) {
    int sa = rat_sign(x.a());
    int sb = rat_sign(x.b());
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    int c = cmp(x.a() * x.a(), x.b() * x.b() * x.d());
    if (c == 0) return 0;  // unreachable for square-free d > 1
    return c > 0 ? sa : sb;
}

/// Order under the real embedding.
inline bool qext_less(const QuadExt& x, const QuadExt& y) {
    return qext_sign(x - y) < 0;
}

/// Exact square root inside the same field (or in Q(sqrt d') for rational
/// inputs with square-free part d').  Returns the nonnegative root.
inline std::optional<QuadExt> qext_sqrt(const QuadExt& s) {
    if (qext_sign(s) < 0) return std::nullopt;
    if (s.is_zero()) return QuadExt(0);
    if (s.is_rational()) {
        // sqrt(p/q) = sqrt(p*q)/q = (r/q)*sqrt(d') with p*q = r^2 d'
        auto [r, d] = squarefree_split(s.a().get_num() * s.a().get_den());
        Rat coef(r, s.a().get_den());
        coef.canonicalize();
        if (d == 1) return QuadExt(coef);
        return QuadExt(Rat(0), coef, d);
    }
    // solve (x + y*sqrt(d))^2 = a + b*sqrt(d): x^2 + y^2 d = a, 2xy = b
    // x^2 is a root of t^2 - a t + b^2 d / 4 = 0
    Rat a = s.a(), b = s.b();
    Rat disc = a * a - b * b * Rat(s.d());
    auto rd = rat_sqrt(disc);
    if (!rd) return std::nullopt;
    for (int pm = 0; pm < 2; ++pm) {
        Rat x2 = (a + (pm ? -*rd : *rd)) / 2;
        if (x2 < 0) continue;
        auto x = rat_sqrt(x2);
        if (!x || *x == 0) continue;
        Rat y = b / (2 * *x);
        QuadExt root(*x, y, s.d());
        if (root * root == s) return qext_sign(root) >= 0 ? root : -root;
    }
    return std::nullopt;
}

}  // namespace torint
