#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torint/quadext.hpp"

namespace torint {

/**
 * Frequency vector of a Fourier mode, coordinates in one quadratic field.
 */
class Frequency {
  public:
    Frequency() = default;
    explicit Frequency(std::vector<QuadExt> coords) : c_(std::move(coords)) {
        long d = 0;
        for (auto& x : c_) {
            if (x.d() == 0) continue;
            if (d == 0) d = x.d();
            else if (d != x.d()) throw field_mismatch("frequency coordinates mix radicands");
        }
    }

    static Frequency zero(size_t n) { return Frequency(std::vector<QuadExt>(n, QuadExt(0))); }

    size_t dim() const { return c_.size(); }
    const QuadExt& operator[](size_t i) const { return c_[i]; }
    const std::vector<QuadExt>& coords() const { return c_; }

    bool is_zero() const {
        for (auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    long radicand() const {
        for (auto& x : c_)
            if (x.d() != 0) return x.d();
        return 0;
    }

    QuadExt dot(const Frequency& o) const {
        check_dim(o);
        QuadExt s(0);
        for (size_t i = 0; i < c_.size(); ++i) s += c_[i] * o.c_[i];
        return s;
    }

    QuadExt norm2() const { return dot(*this); }

    Frequency operator+(const Frequency& o) const {
        check_dim(o);
        std::vector<QuadExt> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
        return Frequency(std::move(r));
    }
    Frequency operator-() const {
        std::vector<QuadExt> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Frequency(std::move(r));
    }
    Frequency operator-(const Frequency& o) const { return *this + (-o); }

    Frequency scaled(const QuadExt& t) const {
        std::vector<QuadExt> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * t;
        return Frequency(std::move(r));
    }

    friend bool operator==(const Frequency& x, const Frequency& y) {
        return x.c_ == y.c_;
    }
    friend bool operator!=(const Frequency& x, const Frequency& y) { return !(x == y); }
    friend bool operator<(const Frequency& x, const Frequency& y) {
        if (x.c_.size() != y.c_.size()) return x.c_.size() < y.c_.size();
        for (size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i] < y.c_[i]) return true;
            if (y.c_[i] < x.c_[i]) return false;
        }
        return false;
    }

    /// t with *this == t * dir, if the two are proportional; else nullopt.
    std::optional<QuadExt> ratio_to(const Frequency& dir) const {
        check_dim(dir);
        std::optional<QuadExt> t;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (dir.c_[i].is_zero()) {
                if (!c_[i].is_zero()) return std::nullopt;
            } else if (!t) {
                t = c_[i] / dir.c_[i];
            }
        }
        if (!t) return is_zero() ? std::optional<QuadExt>(QuadExt(0)) : std::nullopt;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == dir.c_[i] * *t)) return std::nullopt;
        return t;
    }

    /// On the open ray R+ * dir?
    bool on_positive_ray_of(const Frequency& dir) const {
        auto t = ratio_to(dir);
        return t && qext_sign(*t) > 0;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += c_[i].str();
        }
        return s + ")";
    }

  private:
    void check_dim(const Frequency& o) const {
        if (c_.size() != o.c_.size()) throw field_mismatch("frequency dimension mismatch");
    }

    std::vector<QuadExt> c_;
};

}  // namespace torint
