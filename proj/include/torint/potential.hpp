#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "torint/phase_poly.hpp"

namespace torint {

/**
 * Trigonometric polynomial potential in the real normal form
 *     V(q) = sum_k a_k exp(k . q),
 * a finite map frequency -> coefficient.  The zero frequency is excluded
 * (a potential is defined up to an additive constant) and all frequencies
 * share the dimension and the radicand.
 */
class Potential {
  public:
    Potential(size_t dim, long radicand = 0) : n_(dim), d_(radicand) {
        if (d_ != 0 && (d_ <= 1 || !is_squarefree(d_)))
            throw invalid_input("radicand must be 0 or a square-free integer > 1");
    }

    size_t dim() const { return n_; }
    long radicand() const { return d_; }
    const std::map<Frequency, RatFun>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(Frequency k, RatFun c) {
        if (k.dim() != n_) throw field_mismatch("frequency dimension mismatch");
        if (k.is_zero()) throw invalid_input("zero frequency not allowed in a potential");
        long kd = k.radicand();
        if (kd != 0 && d_ == 0) d_ = kd;
        if (kd != 0 && kd != d_) throw field_mismatch("frequency radicand mismatch");
        if (c.is_zero()) return;
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_.emplace(std::move(k), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    std::set<Frequency> support() const {
        std::set<Frequency> s;
        for (auto& [k, c] : t_) s.insert(k);
        return s;
    }

    /// The corresponding Hamiltonian  (1/2) sum p_i^2 + V.
    PhasePolynomial hamiltonian() const {
        PhasePolynomial H(n_);
        for (size_t i = 0; i < n_; ++i) {
            std::vector<unsigned> e(n_, 0);
            e[i] = 2;
            H.add_term(e, Frequency::zero(n_), RatFun(Rat(1, 2)));
        }
        for (auto& [k, c] : t_) H.add_term(std::vector<unsigned>(n_, 0), k, c);
        return H;
    }

    PhasePolynomial as_phase_polynomial() const {
        PhasePolynomial V(n_);
        for (auto& [k, c] : t_) V.add_term(std::vector<unsigned>(n_, 0), k, c);
        return V;
    }

    friend bool operator==(const Potential& x, const Potential& y) {
        return x.n_ == y.n_ && x.t_ == y.t_;
    }

  private:
    size_t n_;
    long d_;
    std::map<Frequency, RatFun> t_;
};

/// Sub-potential of the terms maximizing k.v  (the translation limit).
inline Potential limit_potential(const Potential& V, const Frequency& v) {
    if (v.is_zero()) throw invalid_input("limit direction must be non-zero");
    if (v.dim() != V.dim()) throw field_mismatch("limit direction dimension mismatch");
    Potential out(V.dim(), V.radicand());
    std::optional<QuadExt> best;
    for (auto& [k, c] : V.terms()) {
        QuadExt s = k.dot(v);
        if (!best || qext_less(*best, s)) best = s;
    }
    if (!best) return out;
    for (auto& [k, c] : V.terms())
        if (k.dot(v) == *best) out.add_term(k, c);
    return out;
}

/// Exactness check M^T M = I.
inline bool is_orthogonal(const std::vector<std::vector<QuadExt>>& M) {
    size_t n = M.size();
    for (auto& row : M)
        if (row.size() != n) return false;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            QuadExt s(0);
            for (size_t k = 0; k < n; ++k) s += M[k][i] * M[k][j];
            if (!(s == QuadExt(i == j ? 1 : 0))) return false;
        }
    return true;
}

/// Frequencies k -> scale * (M k); coefficients unchanged.
inline Potential apply_isometry(const Potential& V, const std::vector<std::vector<QuadExt>>& M,
                                const QuadExt& scale) {
    if (M.size() != V.dim()) throw invalid_input("isometry dimension mismatch");
    if (!is_orthogonal(M)) throw invalid_input("matrix is not orthogonal");
    if (qext_sign(scale) <= 0) throw invalid_input("scale must be positive");
    long d = 0;
    auto upd = [&](const QuadExt& x) {
        if (x.d() != 0) {
            if (d == 0) d = x.d();
            else if (d != x.d()) throw field_mismatch("isometry mixes radicands");
        }
    };
    for (auto& row : M)
        for (auto& x : row) upd(x);
    upd(scale);
    if (d != 0 && V.radicand() != 0 && d != V.radicand())
        throw field_mismatch("isometry radicand does not match potential");
    Potential out(V.dim(), V.radicand() ? V.radicand() : d);
    for (auto& [k, c] : V.terms()) {
        std::vector<QuadExt> nk(V.dim(), QuadExt(0));
        for (size_t i = 0; i < V.dim(); ++i) {
            for (size_t j = 0; j < V.dim(); ++j) nk[i] += M[i][j] * k[j];
            nk[i] = nk[i] * scale;
        }
        out.add_term(Frequency(std::move(nk)), c);
    }
    return out;
}

/// Real potential test: every k has -k in the support with equal (real,
/// hence self-conjugate) coefficient.  Requires numeric coefficients.
inline bool is_real_potential(const Potential& V) {
    for (auto& [k, c] : V.terms())
        if (!c.is_constant()) throw invalid_input("is_real_potential needs numeric coefficients");
    for (auto& [k, c] : V.terms()) {
        auto it = V.terms().find(-k);
        if (it == V.terms().end()) return false;
        if (!(it->second == c)) return false;
    }
    return true;
}

/// Result of the separability test.
struct SeparabilityWitness {
    bool separable = false;
    /// Rotation mapping the support lines onto coordinate axes, when its
    /// entries fit in a single quadratic field.
    std::optional<std::vector<std::vector<QuadExt>>> rotation;
    long rotation_radicand = 0;
};

namespace detail {

/// Group support rays into lines through the origin; returns one
/// representative direction per line, or nullopt if some pair of lines
/// is not orthogonal or there are more lines than dimensions.
inline std::optional<std::vector<Frequency>> orthogonal_line_basis(const Potential& V) {
    std::vector<Frequency> lines;
    for (auto& [k, c] : V.terms()) {
        bool found = false;
        for (auto& L : lines)
            if (k.ratio_to(L)) {
                found = true;
                break;
            }
        if (!found) lines.push_back(k);
    }
    if (lines.size() > V.dim()) return std::nullopt;
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j)
            if (!lines[i].dot(lines[j]).is_zero()) return std::nullopt;
    return lines;
}

}  // namespace detail

/**
 * Corollary-style separability: does the support lie on at most n
 * pairwise orthogonal lines through the origin?  If so, attempts to build
 * the rotation sending those lines to the coordinate axes.
 */
inline SeparabilityWitness separability_witness(const Potential& V) {
    if (V.dim() > 3) throw invalid_input("separability_witness supports dimension <= 3");
    SeparabilityWitness w;
    auto lines = detail::orthogonal_line_basis(V);
    if (!lines) return w;
    w.separable = true;

    size_t n = V.dim();
    // complete to n mutually orthogonal directions by solving for the
    // orthogonal complement over the field
    std::vector<Frequency> dirs = *lines;
    while (dirs.size() < n) {
        // find a field vector orthogonal to all current dirs: try
        // coordinate axes first, then simple combinations
        bool added = false;
        for (size_t axis = 0; axis < n && !added; ++axis) {
            std::vector<QuadExt> cand(n, QuadExt(0));
            cand[axis] = QuadExt(1);
            Frequency f{cand};
            // project out current dirs
            for (auto& dvec : dirs) {
                QuadExt num = f.dot(dvec), den = dvec.norm2();
                f = f - dvec.scaled(num / den);
            }
            if (!f.is_zero()) {
                dirs.push_back(f);
                added = true;
            }
        }
        if (!added) return w;  // cannot happen for consistent input
    }

    // normalize each direction; collect the radicand needed
    long need_d = 0;
    std::vector<std::vector<QuadExt>> rows;
    for (auto& dvec : dirs) {
        auto len = qext_sqrt(dvec.norm2());
        if (!len) return w;  // length not representable at all
        std::vector<QuadExt> row(n);
        try {
            for (size_t i = 0; i < n; ++i) row[i] = dvec[i] / *len;
        } catch (const field_mismatch&) {
            return w;  // mixed radicands: separable but not representable
        }
        for (auto& x : row)
            if (x.d() != 0) {
                if (need_d == 0) need_d = x.d();
                else if (need_d != x.d()) return w;
            }
        rows.push_back(std::move(row));
    }
    // rows currently map axes -> lines; the rotation we return maps the
    // support lines onto the axes, i.e. the matrix with these rows.
    // fix determinant sign to +1 for n>=2 by flipping the last row.
    auto det = [&](const std::vector<std::vector<QuadExt>>& m) {
        if (n == 1) return m[0][0];
        if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
        QuadExt s(0);
        for (size_t j = 0; j < 3; ++j) {
            QuadExt minor = m[1][(j + 1) % 3] * m[2][(j + 2) % 3] -
                            m[1][(j + 2) % 3] * m[2][(j + 1) % 3];
            s += m[0][j] * minor;
        }
        return s;
    };
    if (qext_sign(det(rows)) < 0)
        for (auto& x : rows.back()) x = -x;
    w.rotation = rows;
    w.rotation_radicand = need_d;
    return w;
}

}  // namespace torint
