#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torint/quadext.hpp"

namespace torint {

/**
 * Sparse multivariate polynomial over Q(sqrt d) in named parameters.
 *
 * Variables are kept sorted; binary operations merge the variable
 * universes of both operands.  Terms are held in lexicographic exponent
 * order, which doubles as the canonical term order everywhere.
 */
class Poly {
  public:
    using Expo = std::vector<unsigned>;

    Poly() = default;
    Poly(QuadExt c) {  // NOLINT: implicit constant
        if (!c.is_zero()) terms_[{}] = std::move(c);
    }
    Poly(long c) : Poly(QuadExt(c)) {}  // NOLINT
    Poly(Rat c) : Poly(QuadExt(std::move(c))) {}  // NOLINT

    static Poly variable(const std::string& name) {
        Poly p;
        p.vars_ = {name};
        p.terms_[{1u}] = QuadExt(1);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Expo, QuadExt>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo(vars_.size(), 0));
    }
    QuadExt constant_value() const {
        if (terms_.empty()) return QuadExt(0);
        return terms_.begin()->second;
    }

    long total_degree() const {
        long d = -1;
        for (auto& [e, c] : terms_) {
            long s = 0;
            for (unsigned x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    long degree_in(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) return is_zero() ? -1 : 0;
        size_t idx = it - vars_.begin();
        long d = is_zero() ? -1 : 0;
        for (auto& [e, c] : terms_) d = std::max(d, long(e[idx]));
        return d;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& x, const Poly& y) {
        auto [a, b, vars] = aligned(x, y);
        Poly r;
        r.vars_ = std::move(vars);
        r.terms_ = std::move(a);
        for (auto& [e, c] : b) r.add_term(e, c);
        return r;
    }
    friend Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }

    friend Poly operator*(const Poly& x, const Poly& y) {
        auto [a, b, vars] = aligned(x, y);
        Poly r;
        r.vars_ = std::move(vars);
        for (auto& [e1, c1] : a)
            for (auto& [e2, c2] : b) {
                Expo e(e1.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }

    Poly& operator+=(const Poly& y) { return *this = *this + y; }
    Poly& operator-=(const Poly& y) { return *this = *this - y; }
    Poly& operator*=(const Poly& y) { return *this = *this * y; }

    friend bool operator==(const Poly& x, const Poly& y) { return (x - y).is_zero(); }
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

    Poly scaled(const QuadExt& c) const {
        if (c.is_zero()) return Poly();
        Poly r = *this;
        for (auto& [e, v] : r.terms_) v = v * c;
        return r;
    }

    /// Leading (exponent, coefficient) under lex order; poly must be nonzero.
    std::pair<Expo, QuadExt> leading() const {
        auto it = terms_.rbegin();
        return {it->first, it->second};
    }

    /// Exact division; nullopt when the divisor does not divide exactly.
    std::optional<Poly> divexact(const Poly& div) const {
        if (div.is_zero()) throw invalid_input("polynomial division by zero");
        if (is_zero()) return Poly();
        auto [a, b, vars] = aligned(*this, div);
        Poly rem;
        rem.vars_ = vars;
        rem.terms_ = a;
        Poly quot;
        quot.vars_ = vars;
        auto [lde, ldc] = [&] {
            auto it = b.rbegin();
            return std::pair{it->first, it->second};
        }();
        while (!rem.is_zero()) {
            auto [re, rc] = rem.leading();
            Expo qe(re.size());
            for (size_t i = 0; i < re.size(); ++i) {
                if (re[i] < lde[i]) return std::nullopt;
                qe[i] = re[i] - lde[i];
            }
            QuadExt qc = rc / ldc;
            quot.add_term(qe, qc);
            Poly m;
            m.vars_ = vars;
            m.terms_[qe] = qc;
            Poly sub;
            sub.vars_ = vars;
            sub.terms_ = b;
            rem = rem - m * sub;
        }
        return quot;
    }

    /// Substitute a subset of variables by field values.
    Poly eval_partial(const std::map<std::string, QuadExt>& vals) const {
        Poly r;
        std::vector<std::string> keep;
        std::vector<int> pos(vars_.size(), -1);
        for (size_t i = 0; i < vars_.size(); ++i)
            if (!vals.count(vars_[i])) {
                pos[i] = int(keep.size());
                keep.push_back(vars_[i]);
            }
        r.vars_ = keep;
        for (auto& [e, c] : terms_) {
            QuadExt v = c;
            Expo ne(keep.size(), 0);
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (pos[i] >= 0) {
                    ne[pos[i]] = e[i];
                } else {
                    const QuadExt& x = vals.at(vars_[i]);
                    for (unsigned k = 0; k < e[i]; ++k) v = v * x;
                }
            }
            r.add_term(ne, v);
        }
        return r;
    }

    QuadExt eval(const std::map<std::string, QuadExt>& vals) const {
        Poly r = eval_partial(vals);
        if (!r.is_constant()) throw invalid_input("unassigned parameter in evaluation");
        return r.constant_value();
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        // print highest term first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            auto& [e, c] = *it;
            std::string mono;
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (!first) s += neg ? " - " : " + ";
            else if (neg) s += "-";
            if (neg) cs = cs.substr(1);
            bool unit = (cs == "1");
            if (mono.empty())
                s += cs;
            else if (unit)
                s += mono;
            else if (!c.is_rational() && c.a() != 0)
                s += "(" + cs + ")*" + mono;
            else
                s += cs + "*" + mono;
            first = false;
        }
        return s;
    }

  private:
    void add_term(const Expo& e, const QuadExt& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Remap both operands to the merged variable list.
    static std::tuple<std::map<Expo, QuadExt>, std::map<Expo, QuadExt>,
                      std::vector<std::string>>
    aligned(const Poly& x, const Poly& y) {
        if (x.vars_ == y.vars_) return {x.terms_, y.terms_, x.vars_};
        std::vector<std::string> vars;
        std::merge(x.vars_.begin(), x.vars_.end(), y.vars_.begin(), y.vars_.end(),
                   std::back_inserter(vars));
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        return {remap(x, vars), remap(y, vars), vars};
    }

    static std::map<Expo, QuadExt> remap(const Poly& p, const std::vector<std::string>& vars) {
        std::vector<size_t> pos(p.vars_.size());
        for (size_t i = 0; i < p.vars_.size(); ++i)
            pos[i] = std::lower_bound(vars.begin(), vars.end(), p.vars_[i]) - vars.begin();
        std::map<Expo, QuadExt> out;
        for (auto& [e, c] : p.terms_) {
            Expo ne(vars.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
            out[ne] = c;
        }
        return out;
    }

    std::vector<std::string> vars_;
    std::map<Expo, QuadExt> terms_;
};

}  // namespace torint
