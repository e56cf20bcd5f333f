#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "torint/potential.hpp"

namespace torint {

/**
 * Convex hull of a Fourier support, exact.
 *
 * summits: the extreme points (dim-2: counterclockwise order).
 * edges:   index pairs into summits sharing a 1-face.
 * faces:   dim-3 facets as summit index cycles, outward counterclockwise.
 */
struct HullReport {
    std::vector<Frequency> summits;
    std::vector<std::pair<size_t, size_t>> edges;
    std::vector<std::vector<size_t>> faces;
    bool contains_origin = false;

    std::optional<size_t> summit_index(const Frequency& f) const {
        for (size_t i = 0; i < summits.size(); ++i)
            if (summits[i] == f) return i;
        return std::nullopt;
    }
};

namespace hull_detail {

inline QuadExt cross2(const Frequency& o, const Frequency& a, const Frequency& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

inline std::vector<QuadExt> cross3(const std::vector<QuadExt>& u, const std::vector<QuadExt>& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline std::vector<QuadExt> diff(const Frequency& a, const Frequency& b) {
    std::vector<QuadExt> r(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QuadExt dot(const std::vector<QuadExt>& u, const std::vector<QuadExt>& v) {
    QuadExt s(0);
    for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

inline bool lex_less(const Frequency& a, const Frequency& b) {
    for (size_t i = 0; i < a.dim(); ++i) {
        int s = qext_sign(a[i] - b[i]);
        if (s) return s < 0;
    }
    return false;
}

/// Monotone chain on 2-D points given by exact coordinate pairs.
/// Returns indices of hull vertices in counterclockwise order; collinear
/// boundary points are excluded (strict turns only).
inline std::vector<size_t> chain2(const std::vector<Frequency>& pts) {
    std::vector<size_t> idx(pts.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t i, size_t j) { return lex_less(pts[i], pts[j]); });
    auto build = [&](bool lower) {
        std::vector<size_t> h;
        for (size_t ii = 0; ii < idx.size(); ++ii) {
            size_t i = lower ? idx[ii] : idx[idx.size() - 1 - ii];
            while (h.size() >= 2 &&
                   qext_sign(cross2(pts[h[h.size() - 2]], pts[h.back()], pts[i])) <= 0)
                h.pop_back();
            h.push_back(i);
        }
        return h;
    };
    auto lo = build(true), hi = build(false);
    lo.pop_back();
    hi.pop_back();
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;
}

}  // namespace hull_detail

inline HullReport convex_hull(const Potential& V);

namespace hull_detail {

inline HullReport hull_of_points(std::vector<Frequency> pts, size_t n);

/// Collinear point set: the two extreme points along the common line.
inline HullReport hull_segment(const std::vector<Frequency>& pts) {
    HullReport r;
    Frequency dir = pts[1] - pts[0];
    size_t lo = 0, hi = 0;
    auto t_of = [&](const Frequency& p) { return *(p - pts[0]).ratio_to(dir); };
    for (size_t i = 1; i < pts.size(); ++i) {
        if (qext_less(t_of(pts[i]), t_of(pts[lo]))) lo = i;
        if (qext_less(t_of(pts[hi]), t_of(pts[i]))) hi = i;
    }
    r.summits = {pts[lo], pts[hi]};
    r.edges = {{0, 1}};
    // origin on the segment?
    Frequency z = Frequency::zero(pts[0].dim());
    auto t = (z - pts[0]).ratio_to(dir);
    if (t) {
        QuadExt tl = t_of(pts[lo]), th = t_of(pts[hi]);
        r.contains_origin = qext_sign(*t - tl) >= 0 && qext_sign(th - *t) >= 0;
    }
    return r;
}

inline HullReport hull2(const std::vector<Frequency>& pts) {
    HullReport r;
    auto cyc = chain2(pts);
    if (cyc.size() < 3) return hull_segment(pts);
    for (size_t i : cyc) r.summits.push_back(pts[i]);
    for (size_t i = 0; i < r.summits.size(); ++i)
        r.edges.emplace_back(i, (i + 1) % r.summits.size());
    r.contains_origin = true;
    Frequency z = Frequency::zero(2);
    for (size_t i = 0; i < r.summits.size(); ++i) {
        if (qext_sign(cross2(r.summits[i], r.summits[(i + 1) % r.summits.size()], z)) < 0) {
            r.contains_origin = false;
            break;
        }
    }
    return r;
}

inline HullReport hull3(const std::vector<Frequency>& pts) {
    size_t m = pts.size();
    // all supporting planes through point triples
    std::vector<std::set<size_t>> facet_sets;
    std::vector<std::vector<QuadExt>> facet_normals;  // outward
    // interior reference point: average of all points (exact rationals ok)
    std::vector<QuadExt> centroid(3, QuadExt(0));
    for (auto& p : pts)
        for (size_t i = 0; i < 3; ++i) centroid[i] += p[i];
    QuadExt inv_m = QuadExt(1) / QuadExt(long(m));
    for (auto& c : centroid) c = c * inv_m;

    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            for (size_t k = j + 1; k < m; ++k) {
                auto N = cross3(diff(pts[j], pts[i]), diff(pts[k], pts[i]));
                if (N[0].is_zero() && N[1].is_zero() && N[2].is_zero()) continue;
                int lo = 0, hi = 0;
                std::set<size_t> on;
                for (size_t l = 0; l < m; ++l) {
                    int s = qext_sign(dot(N, diff(pts[l], pts[i])));
                    if (s < 0) lo = 1;
                    if (s > 0) hi = 1;
                    if (s == 0) on.insert(l);
                    if (lo && hi) break;
                }
                if (lo && hi) continue;
                if (std::find(facet_sets.begin(), facet_sets.end(), on) != facet_sets.end())
                    continue;
                // orient outward: centroid strictly inside (full rank)
                std::vector<QuadExt> cd(3);
                for (size_t t = 0; t < 3; ++t) cd[t] = centroid[t] - pts[i][t];
                if (qext_sign(dot(N, cd)) > 0)
                    for (auto& x : N) x = -x;
                facet_sets.push_back(on);
                facet_normals.push_back(N);
            }

    HullReport r;
    std::vector<size_t> global_of_pt(m, size_t(-1));
    std::set<std::pair<size_t, size_t>> edge_set;
    for (size_t f = 0; f < facet_sets.size(); ++f) {
        // exact in-plane coordinates: u along one edge, w = N x u
        std::vector<size_t> members(facet_sets[f].begin(), facet_sets[f].end());
        auto& N = facet_normals[f];
        std::vector<QuadExt> u = diff(pts[members[1]], pts[members[0]]);
        auto w = cross3(N, u);
        std::vector<Frequency> flat;
        for (size_t l : members) {
            auto dv = diff(pts[l], pts[members[0]]);
            flat.push_back(Frequency({dot(u, dv), dot(w, dv)}));
        }
        auto cyc = chain2(flat);
        std::vector<size_t> face;
        for (size_t ci : cyc) {
            size_t pt = members[ci];
            if (global_of_pt[pt] == size_t(-1)) {
                global_of_pt[pt] = r.summits.size();
                r.summits.push_back(pts[pt]);
            }
            face.push_back(global_of_pt[pt]);
        }
        for (size_t i = 0; i < face.size(); ++i) {
            size_t a = face[i], b = face[(i + 1) % face.size()];
            edge_set.insert({std::min(a, b), std::max(a, b)});
        }
        r.faces.push_back(std::move(face));
    }
    r.edges.assign(edge_set.begin(), edge_set.end());

    r.contains_origin = true;
    for (size_t f = 0; f < facet_sets.size(); ++f) {
        size_t i0 = *facet_sets[f].begin();
        std::vector<QuadExt> oz(3);
        for (size_t t = 0; t < 3; ++t) oz[t] = QuadExt(0) - pts[i0][t];
        if (qext_sign(dot(facet_normals[f], oz)) > 0) {
            r.contains_origin = false;
            break;
        }
    }
    return r;
}

inline HullReport hull_of_points(std::vector<Frequency> pts, size_t n) {
    HullReport r;
    if (pts.empty()) return r;
    if (pts.size() == 1) {
        r.summits = {pts[0]};
        r.contains_origin = pts[0].is_zero();
        return r;
    }
    // affine rank of the point set
    bool collinear = true;
    Frequency dir = pts[1] - pts[0];
    size_t base = 1;
    for (size_t i = 1; i < pts.size() && dir.is_zero(); ++i) {
        dir = pts[i] - pts[0];
        base = i;
    }
    for (size_t i = base + 1; i < pts.size(); ++i)
        if (!(pts[i] - pts[0]).ratio_to(dir)) {
            collinear = false;
            break;
        }
    if (collinear) return hull_segment(pts);
    if (n == 2) return hull2(pts);

    // n == 3: check for a coplanar set
    const std::vector<QuadExt>& u = dir.coords();
    std::vector<QuadExt> N;
    for (size_t i = 1; i < pts.size() && N.empty(); ++i) {
        auto c = cross3(diff(pts[i], pts[0]), u);
        if (!(c[0].is_zero() && c[1].is_zero() && c[2].is_zero())) N = c;
    }
    bool coplanar = true;
    for (auto& p : pts)
        if (!dot(N, diff(p, pts[0])).is_zero()) {
            coplanar = false;
            break;
        }
    if (!coplanar) return hull3(pts);

    // coplanar in 3-space: exact in-plane reduction, lift results back
    auto w = cross3(N, u);
    std::vector<Frequency> flat;
    for (auto& p : pts) {
        auto dv = diff(p, pts[0]);
        flat.push_back(Frequency({dot(u, dv), dot(w, dv)}));
    }
    HullReport flat_rep = flat.size() >= 3 ? hull2(flat) : hull_segment(flat);
    HullReport r3;
    for (auto& fs : flat_rep.summits) {
        for (size_t i = 0; i < pts.size(); ++i)
            if (flat[i] == fs) {
                r3.summits.push_back(pts[i]);
                break;
            }
    }
    r3.edges = flat_rep.edges;
    if (flat_rep.summits.size() >= 3) r3.faces.push_back([&] {
        std::vector<size_t> all(flat_rep.summits.size());
        for (size_t i = 0; i < all.size(); ++i) all[i] = i;
        return all;
    }());
    // origin must lie in the plane and inside the flat hull
    if (dot(N, diff(Frequency::zero(3), pts[0])).is_zero()) {
        auto dv = diff(Frequency::zero(3), pts[0]);
        Frequency oz({dot(u, dv), dot(w, dv)});
        if (flat_rep.summits.size() >= 3) {
            bool inside = true;
            for (size_t i = 0; i < flat_rep.summits.size(); ++i) {
                auto& a = flat_rep.summits[i];
                auto& b = flat_rep.summits[(i + 1) % flat_rep.summits.size()];
                if (qext_sign(cross2(a, b, oz)) < 0) {
                    inside = false;
                    break;
                }
            }
            r3.contains_origin = inside;
        } else {
            r3.contains_origin = flat_rep.contains_origin;
        }
    }
    return r3;
}

}  // namespace hull_detail

/// Exact convex hull of the support.  Dimensions 1 to 3.
inline HullReport convex_hull(const Potential& V) {
    size_t n = V.dim();
    if (n < 1 || n > 3) throw invalid_input("convex_hull supports dimensions 1..3");
    auto supp = V.support();
    std::vector<Frequency> pts(supp.begin(), supp.end());
    if (n == 1) {
        HullReport r;
        if (pts.empty()) return r;
        size_t lo = 0, hi = 0;
        for (size_t i = 1; i < pts.size(); ++i) {
            if (qext_less(pts[i][0], pts[lo][0])) lo = i;
            if (qext_less(pts[hi][0], pts[i][0])) hi = i;
        }
        if (lo == hi) {
            r.summits = {pts[lo]};
            r.contains_origin = pts[lo].is_zero();
        } else {
            r.summits = {pts[lo], pts[hi]};
            r.edges = {{0, 1}};
            r.contains_origin =
                qext_sign(pts[lo][0]) <= 0 && qext_sign(pts[hi][0]) >= 0;
        }
        return r;
    }
    return hull_detail::hull_of_points(std::move(pts), n);
}

}  // namespace torint
