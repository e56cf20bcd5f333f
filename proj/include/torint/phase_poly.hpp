#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "torint/frequency.hpp"
#include "torint/ratfun.hpp"

namespace torint {

/**
 * Element of the phase-space ring: finite sum of
 *     coeff * p^pexp * exp(freq . q)
 * with exact coefficients.  This is the ring where Poisson brackets and
 * first-integral searches live; derivatives in q multiply a term by the
 * matching frequency coordinate, so everything stays closed.
 */
class PhasePolynomial {
  public:
    struct Key {
        std::vector<unsigned> pexp;
        Frequency freq;
        friend bool operator<(const Key& x, const Key& y) {
            if (x.pexp != y.pexp) return x.pexp < y.pexp;
            return x.freq < y.freq;
        }
        friend bool operator==(const Key& x, const Key& y) {
            return x.pexp == y.pexp && x.freq == y.freq;
        }
    };

    explicit PhasePolynomial(size_t dim) : n_(dim) {}

    static PhasePolynomial zero(size_t dim) { return PhasePolynomial(dim); }
    static PhasePolynomial constant(size_t dim, RatFun c) {
        PhasePolynomial r(dim);
        r.add_term(std::vector<unsigned>(dim, 0), Frequency::zero(dim), std::move(c));
        return r;
    }
    static PhasePolynomial momentum(size_t dim, size_t i) {
        PhasePolynomial r(dim);
        std::vector<unsigned> e(dim, 0);
        e[i] = 1;
        r.add_term(e, Frequency::zero(dim), RatFun(1));
        return r;
    }
    static PhasePolynomial exponential(size_t dim, Frequency k, RatFun c = RatFun(1)) {
        PhasePolynomial r(dim);
        r.add_term(std::vector<unsigned>(dim, 0), std::move(k), std::move(c));
        return r;
    }
    static PhasePolynomial monomial(size_t dim, std::vector<unsigned> pexp, Frequency k,
                                    RatFun c = RatFun(1)) {
        PhasePolynomial r(dim);
        r.add_term(std::move(pexp), std::move(k), std::move(c));
        return r;
    }

    size_t dim() const { return n_; }
    const std::map<Key, RatFun>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    long momentum_degree() const {
        long d = -1;
        for (auto& [k, c] : t_) {
            long s = 0;
            for (unsigned e : k.pexp) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    void add_term(std::vector<unsigned> pexp, Frequency freq, RatFun c) {
        if (pexp.size() != n_ || freq.dim() != n_)
            throw field_mismatch("phase polynomial term dimension mismatch");
        if (c.is_zero()) return;
        Key k{std::move(pexp), std::move(freq)};
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_.emplace(std::move(k), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    PhasePolynomial operator-() const {
        PhasePolynomial r(n_);
        for (auto& [k, c] : t_) r.t_[k] = -c;
        return r;
    }

    friend PhasePolynomial operator+(const PhasePolynomial& x, const PhasePolynomial& y) {
        x.check(y);
        PhasePolynomial r = x;
        for (auto& [k, c] : y.t_) r.add_term(k.pexp, k.freq, c);
        return r;
    }
    friend PhasePolynomial operator-(const PhasePolynomial& x, const PhasePolynomial& y) {
        return x + (-y);
    }
    friend PhasePolynomial operator*(const PhasePolynomial& x, const PhasePolynomial& y) {
        x.check(y);
        PhasePolynomial r(x.n_);
        for (auto& [k1, c1] : x.t_)
            for (auto& [k2, c2] : y.t_) {
                std::vector<unsigned> e(x.n_);
                for (size_t i = 0; i < x.n_; ++i) e[i] = k1.pexp[i] + k2.pexp[i];
                r.add_term(std::move(e), k1.freq + k2.freq, c1 * c2);
            }
        return r;
    }
    PhasePolynomial& operator+=(const PhasePolynomial& y) { return *this = *this + y; }
    PhasePolynomial& operator-=(const PhasePolynomial& y) { return *this = *this - y; }
    PhasePolynomial& operator*=(const PhasePolynomial& y) { return *this = *this * y; }

    friend bool operator==(const PhasePolynomial& x, const PhasePolynomial& y) {
        return (x - y).is_zero();
    }
    friend bool operator!=(const PhasePolynomial& x, const PhasePolynomial& y) {
        return !(x == y);
    }

    PhasePolynomial scaled(const RatFun& c) const {
        PhasePolynomial r(n_);
        if (c.is_zero()) return r;
        for (auto& [k, v] : t_) r.t_[k] = v * c;
        return r;
    }

    /// d/dp_i
    PhasePolynomial dp(size_t i) const {
        PhasePolynomial r(n_);
        for (auto& [k, c] : t_) {
            if (k.pexp[i] == 0) continue;
            auto e = k.pexp;
            unsigned m = e[i]--;
            r.add_term(e, k.freq, c.scaled(QuadExt(long(m))));
        }
        return r;
    }

    /// d/dq_i: multiplies each term by its frequency coordinate.
    PhasePolynomial dq(size_t i) const {
        PhasePolynomial r(n_);
        for (auto& [k, c] : t_) {
            const QuadExt& ki = k.freq[i];
            if (ki.is_zero()) continue;
            r.add_term(k.pexp, k.freq, c.scaled(ki));
        }
        return r;
    }

    /// Substitute parameter values (coefficients only).
    PhasePolynomial subs(const std::map<std::string, QuadExt>& vals) const {
        PhasePolynomial r(n_);
        for (auto& [k, c] : t_) r.add_term(k.pexp, k.freq, c.subs(vals));
        return r;
    }

    /// Floating evaluation at a real phase point; exp(k.q) as a real
    /// exponential, sqrt(d) as the positive real root.
    double evaluate_numeric(const std::vector<double>& p, const std::vector<double>& q,
                            const std::map<std::string, QuadExt>& params = {}) const {
        if (p.size() != n_ || q.size() != n_)
            throw invalid_input("phase point dimension mismatch");
        double s = 0;
        for (auto& [k, c] : t_) {
            double v = c.eval(params).to_double();
            for (size_t i = 0; i < n_; ++i)
                for (unsigned e = 0; e < k.pexp[i]; ++e) v *= p[i];
            double kq = 0;
            for (size_t i = 0; i < n_; ++i) kq += k.freq[i].to_double() * q[i];
            s += v * std::exp(kq);
        }
        return s;
    }

    /// Exact evaluation: momenta and parameters at rationals, each
    /// exponential at a caller-supplied consistent value.
    QuadExt evaluate_exact(const std::vector<Rat>& p, const std::map<Frequency, Rat>& evals,
                           const std::map<std::string, QuadExt>& params = {}) const {
        QuadExt s(0);
        for (auto& [k, c] : t_) {
            QuadExt v = c.eval(params);
            for (size_t i = 0; i < n_; ++i)
                for (unsigned e = 0; e < k.pexp[i]; ++e) v = v * QuadExt(p[i]);
            auto it = evals.find(k.freq);
            if (it == evals.end()) throw invalid_input("missing exponential value");
            s += v * QuadExt(it->second);
        }
        return s;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [k, c] : t_) {
            if (!first) s += " + ";
            first = false;
            s += "[" + c.str() + "]";
            for (size_t i = 0; i < n_; ++i)
                if (k.pexp[i]) {
                    s += "*p" + std::to_string(i + 1);
                    if (k.pexp[i] > 1) s += "^" + std::to_string(k.pexp[i]);
                }
            if (!k.freq.is_zero()) s += "*E" + k.freq.str();
        }
        return s;
    }

  private:
    void check(const PhasePolynomial& y) const {
        if (n_ != y.n_) throw field_mismatch("phase polynomial dimension mismatch");
    }

    size_t n_;
    std::map<Key, RatFun> t_;
};

/// Canonical Poisson bracket sum_i (dF/dq_i dG/dp_i - dF/dp_i dG/dq_i).
inline PhasePolynomial poisson_bracket(const PhasePolynomial& F, const PhasePolynomial& G) {
    if (F.dim() != G.dim()) throw field_mismatch("poisson bracket dimension mismatch");
    PhasePolynomial r(F.dim());
    for (size_t i = 0; i < F.dim(); ++i)
        r += F.dq(i) * G.dp(i) - F.dp(i) * G.dq(i);
    return r;
}

}  // namespace torint
