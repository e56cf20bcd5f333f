#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "torint/hull.hpp"
#include "torint/potential.hpp"

using namespace torint;

namespace {

Frequency fq(std::vector<QuadExt> v) { return Frequency(std::move(v)); }
QuadExt r3(long a, long b) { return QuadExt(Rat(a), Rat(b), 3); }

Potential from_support(size_t dim, const std::vector<Frequency>& ks) {
    Potential V(dim);
    for (auto& k : ks) V.add_term(k, RatFun(1));
    return V;
}

// ---- brute-force extremality oracle (Caratheodory over small subsets) ----

QuadExt cross2o(const Frequency& o, const Frequency& a, const Frequency& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool in_segment(const Frequency& p, const Frequency& a, const Frequency& b) {
    Frequency d = b - a;
    if (d.is_zero()) return p == a;
    auto t = (p - a).ratio_to(d);
    return t && qext_sign(*t) >= 0 && qext_sign(QuadExt(1) - *t) >= 0;
}

bool in_triangle(const Frequency& p, const Frequency& a, const Frequency& b, const Frequency& c) {
    QuadExt D = cross2o(c, a, b);
    if (D.is_zero()) return false;
    QuadExt al = cross2o(c, p, b) / D;
    QuadExt be = cross2o(c, a, p) / D;
    QuadExt ga = QuadExt(1) - al - be;
    return qext_sign(al) >= 0 && qext_sign(be) >= 0 && qext_sign(ga) >= 0;
}

QuadExt det3(const std::vector<QuadExt>& u, const std::vector<QuadExt>& v,
             const std::vector<QuadExt>& w) {
    return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
           u[2] * (v[0] * w[1] - v[1] * w[0]);
}

std::vector<QuadExt> d3(const Frequency& a, const Frequency& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

bool in_tetra(const Frequency& p, const Frequency& a, const Frequency& b, const Frequency& c,
              const Frequency& d) {
    QuadExt D = det3(d3(a, d), d3(b, d), d3(c, d));
    if (D.is_zero()) return false;
    QuadExt al = det3(d3(p, d), d3(b, d), d3(c, d)) / D;
    QuadExt be = det3(d3(a, d), d3(p, d), d3(c, d)) / D;
    QuadExt ga = det3(d3(a, d), d3(b, d), d3(p, d)) / D;
    QuadExt de = QuadExt(1) - al - be - ga;
    return qext_sign(al) >= 0 && qext_sign(be) >= 0 && qext_sign(ga) >= 0 && qext_sign(de) >= 0;
}

bool in_hull_oracle(const Frequency& p, const std::vector<Frequency>& pts) {
    size_t m = pts.size(), n = p.dim();
    for (size_t i = 0; i < m; ++i) {
        if (p == pts[i]) return true;
        for (size_t j = i + 1; j < m; ++j) {
            if (in_segment(p, pts[i], pts[j])) return true;
            if (n < 2) continue;
            for (size_t k = j + 1; k < m; ++k) {
                if (n == 2 && in_triangle(p, pts[i], pts[j], pts[k])) return true;
                if (n < 3) continue;
                for (size_t l = k + 1; l < m; ++l)
                    if (in_tetra(p, pts[i], pts[j], pts[k], pts[l])) return true;
            }
        }
    }
    return false;
}

std::set<Frequency> extreme_points_oracle(const std::vector<Frequency>& pts) {
    std::set<Frequency> out;
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<Frequency> rest;
        for (size_t j = 0; j < pts.size(); ++j)
            if (j != i) rest.push_back(pts[j]);
        if (!in_hull_oracle(pts[i], rest)) out.insert(pts[i]);
    }
    return out;
}

std::set<Frequency> summit_set(const HullReport& h) {
    return {h.summits.begin(), h.summits.end()};
}

const std::vector<Frequency> kH1Support = {fq({r3(2, 0), r3(0, 0)}), fq({r3(-1, 0), r3(0, 1)}),
                                           fq({r3(-1, 0), r3(0, -1)})};
const std::vector<Frequency> kEq1Support = {
    fq({r3(6, 0), r3(0, 0)}), fq({r3(4, 0), r3(0, 0)}), fq({r3(2, 0), r3(0, 0)}),
    fq({r3(0, 2), r3(0, 0)}), fq({r3(-3, 0), r3(0, -1)})};

}  // namespace

TEST_CASE("support") {
    Potential V(2);
    V.add_term(fq({QuadExt(2), QuadExt(0)}), RatFun(1));
    CHECK(V.support() == std::set<Frequency>{fq({QuadExt(2), QuadExt(0)})});
    CHECK(from_support(2, kH1Support).support() ==
          std::set<Frequency>(kH1Support.begin(), kH1Support.end()));
    CHECK(Potential(2).support().empty());
    CHECK_THROWS_AS(V.add_term(Frequency::zero(2), RatFun(1)), invalid_input);
}

TEST_CASE("hull of the five-term x-axis-heavy support") {
    auto V = from_support(2, kEq1Support);
    auto h = convex_hull(V);
    auto oracle = extreme_points_oracle(kEq1Support);
    CHECK(summit_set(h) == oracle);
    CHECK(oracle == std::set<Frequency>{fq({r3(6, 0), r3(0, 0)}), fq({r3(2, 0), r3(0, 0)}),
                                        fq({r3(-3, 0), r3(0, -1)})});
    CHECK_FALSE(h.contains_origin);
}

TEST_CASE("hull of the hexagonal three-term support") {
    auto V = from_support(2, kH1Support);
    auto h = convex_hull(V);
    CHECK(summit_set(h) == extreme_points_oracle(kH1Support));
    CHECK(h.summits.size() == 3);
    CHECK(h.contains_origin);
    CHECK(h.edges.size() == 3);
}

TEST_CASE("hull corner cases") {
    auto single = from_support(2, {fq({QuadExt(1), QuadExt(2)})});
    auto h1 = convex_hull(single);
    CHECK(h1.summits.size() == 1);
    CHECK_FALSE(h1.contains_origin);

    // collinear through the origin
    auto seg = from_support(2, {fq({QuadExt(2), QuadExt(2)}), fq({QuadExt(-1), QuadExt(-1)}),
                                fq({QuadExt(1), QuadExt(1)})});
    auto h2 = convex_hull(seg);
    CHECK(h2.summits.size() == 2);
    CHECK(summit_set(h2) == std::set<Frequency>{fq({QuadExt(2), QuadExt(2)}),
                                                fq({QuadExt(-1), QuadExt(-1)})});
    CHECK(h2.contains_origin);
    CHECK(h2.edges.size() == 1);

    auto seg_off = from_support(2, {fq({QuadExt(2), QuadExt(2)}), fq({QuadExt(1), QuadExt(1)})});
    CHECK_FALSE(convex_hull(seg_off).contains_origin);

    CHECK_THROWS_AS(convex_hull(Potential(4)), invalid_input);
}

TEST_CASE("hull in dimension 1") {
    Potential V(1);
    V.add_term(fq({QuadExt(3)}), RatFun(1));
    V.add_term(fq({QuadExt(-2)}), RatFun(1));
    V.add_term(fq({QuadExt(1)}), RatFun(1));
    auto h = convex_hull(V);
    CHECK(summit_set(h) == std::set<Frequency>{fq({QuadExt(-2)}), fq({QuadExt(3)})});
    CHECK(h.contains_origin);
}

TEST_CASE("hull in dimension 3: tetrahedron with interior ray points") {
    std::vector<Frequency> pts = {
        fq({QuadExt(2), QuadExt(0), QuadExt(0)}), fq({QuadExt(-1), QuadExt(1), QuadExt(0)}),
        fq({QuadExt(0), QuadExt(-1), QuadExt(-1)}), fq({QuadExt(0), QuadExt(-1), QuadExt(1)}),
        fq({QuadExt(1), QuadExt(0), QuadExt(0)})};
    auto V = from_support(3, pts);
    auto h = convex_hull(V);
    CHECK(summit_set(h) == extreme_points_oracle(pts));
    CHECK(h.summits.size() == 4);
    CHECK(h.edges.size() == 6);
    CHECK(h.faces.size() == 4);
    CHECK(h.contains_origin);

    // every support point passes the inside-or-on oracle
    for (auto& p : pts) CHECK(in_hull_oracle(p, pts));
}

TEST_CASE("hull in dimension 3: degenerate sets") {
    // coplanar square in a tilted plane
    std::vector<Frequency> sq = {
        fq({QuadExt(1), QuadExt(0), QuadExt(1)}), fq({QuadExt(0), QuadExt(1), QuadExt(1)}),
        fq({QuadExt(-1), QuadExt(0), QuadExt(-1)}), fq({QuadExt(0), QuadExt(-1), QuadExt(-1)}),
        fq({QuadExt(0), QuadExt(0), QuadExt(0)})};
    // drop the origin itself (not a valid potential term); test via points
    sq.pop_back();
    auto V = from_support(3, sq);
    auto h = convex_hull(V);
    CHECK(summit_set(h) == extreme_points_oracle(sq));
    CHECK(h.summits.size() == 4);
    CHECK(h.contains_origin);  // origin is the centre of the square

    std::vector<Frequency> line3 = {fq({QuadExt(1), QuadExt(1), QuadExt(1)}),
                                    fq({QuadExt(3), QuadExt(3), QuadExt(3)})};
    auto h2 = convex_hull(from_support(3, line3));
    CHECK(h2.summits.size() == 2);
    CHECK_FALSE(h2.contains_origin);
}

TEST_CASE("limit potential") {
    // square-ish support: {(2,0),(0,2),(-2,-2),(-1,-1)}
    std::vector<Frequency> ks = {fq({QuadExt(2), QuadExt(0)}), fq({QuadExt(0), QuadExt(2)}),
                                 fq({QuadExt(-2), QuadExt(-2)}), fq({QuadExt(-1), QuadExt(-1)})};
    auto V = from_support(2, ks);
    auto vx = limit_potential(V, fq({QuadExt(1), QuadExt(0)}));
    CHECK(vx.support() == std::set<Frequency>{ks[0]});
    auto vdiag = limit_potential(V, fq({QuadExt(1), QuadExt(1)}));
    CHECK(vdiag.support() == std::set<Frequency>{ks[0], ks[1]});

    Potential single(2);
    single.add_term(ks[2], RatFun(5));
    auto vs = limit_potential(single, fq({QuadExt(7), QuadExt(-1)}));
    CHECK(vs == single);

    CHECK_THROWS_AS(limit_potential(V, Frequency::zero(2)), invalid_input);

    // idempotence and support containment on a batch of directions
    for (auto& v : ks) {
        auto lim = limit_potential(V, v);
        CHECK(limit_potential(lim, v) == lim);
        for (auto& k : lim.support()) CHECK(V.support().count(k) == 1);
    }
}

TEST_CASE("apply_isometry") {
    auto V = from_support(2, kH1Support);
    std::vector<std::vector<QuadExt>> id = {{QuadExt(1), QuadExt(0)}, {QuadExt(0), QuadExt(1)}};
    CHECK(apply_isometry(V, id, QuadExt(1)) == V);

    // reflection q2 -> -q2 swaps the two lower summits
    std::vector<std::vector<QuadExt>> refl = {{QuadExt(1), QuadExt(0)}, {QuadExt(0), QuadExt(-1)}};
    auto Vr = apply_isometry(V, refl, QuadExt(1));
    CHECK(Vr.support() == V.support());

    // 90-degree rotation takes (a,0) to (0,a)
    std::vector<std::vector<QuadExt>> rot90 = {{QuadExt(0), QuadExt(-1)}, {QuadExt(1), QuadExt(0)}};
    Potential W(2);
    W.add_term(fq({QuadExt(3), QuadExt(0)}), RatFun(1));
    auto Wr = apply_isometry(W, rot90, QuadExt(1));
    CHECK(Wr.support() == std::set<Frequency>{fq({QuadExt(0), QuadExt(3)})});

    // non-orthogonal matrix rejected
    std::vector<std::vector<QuadExt>> bad = {{QuadExt(1), QuadExt(1)}, {QuadExt(0), QuadExt(1)}};
    CHECK_THROWS_AS(apply_isometry(V, bad, QuadExt(1)), invalid_input);
    CHECK_THROWS_AS(apply_isometry(V, id, QuadExt(-2)), invalid_input);

    // 30-degree rotation in Q(sqrt 3), scale 2: angles and norm ratios survive
    QuadExt half_r3(Rat(0), Rat(1, 2), 3);
    std::vector<std::vector<QuadExt>> rot30 = {{half_r3, QuadExt(Rat(-1, 2))},
                                               {QuadExt(Rat(1, 2)), half_r3}};
    CHECK(is_orthogonal(rot30));
    auto V30 = apply_isometry(V, rot30, QuadExt(2));
    REQUIRE(V30.support().size() == 3);
    auto supp_o = V.support();
    std::vector<Frequency> orig(supp_o.begin(), supp_o.end());
    auto supp_r = V30.support();
    std::vector<Frequency> rot(supp_r.begin(), supp_r.end());
    // pairwise cos^2 values are preserved
    auto cos2 = [](const Frequency& a, const Frequency& b) {
        return (a.dot(b) * a.dot(b)) / (a.norm2() * b.norm2());
    };
    std::multiset<std::pair<Rat, Rat>> co, cr;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) {
            co.insert({cos2(orig[i], orig[j]).a(), cos2(orig[i], orig[j]).b()});
            cr.insert({cos2(rot[i], rot[j]).a(), cos2(rot[i], rot[j]).b()});
        }
    CHECK(co == cr);
}

TEST_CASE("is_real_potential") {
    Potential V1(1);
    V1.add_term(fq({QuadExt(1)}), RatFun(1));
    V1.add_term(fq({QuadExt(-1)}), RatFun(1));
    CHECK(is_real_potential(V1));

    Potential V2(1);
    V2.add_term(fq({QuadExt(2)}), RatFun(1));
    CHECK_FALSE(is_real_potential(V2));

    Potential V3(1);
    V3.add_term(fq({QuadExt(1)}), RatFun(2));
    V3.add_term(fq({QuadExt(-1)}), RatFun(3));
    CHECK_FALSE(is_real_potential(V3));

    Potential V4(1);
    V4.add_term(fq({QuadExt(1)}), RatFun::parameter("a"));
    CHECK_THROWS_AS(is_real_potential(V4), invalid_input);
}

TEST_CASE("separability witness") {
    // already separable: identity rotation
    Potential V(2);
    V.add_term(fq({QuadExt(1), QuadExt(0)}), RatFun(1));
    V.add_term(fq({QuadExt(0), QuadExt(2)}), RatFun(1));
    auto w = separability_witness(V);
    REQUIRE(w.separable);
    REQUIRE(w.rotation.has_value());

    // hexagonal support: three rays at 120 degrees, not separable
    auto wh = separability_witness(from_support(2, kH1Support));
    CHECK_FALSE(wh.separable);

    // diagonal lines: 45-degree rotation with entries in Q(sqrt 2)
    auto wd = separability_witness(from_support(
        2, {fq({QuadExt(1), QuadExt(1)}), fq({QuadExt(-2), QuadExt(-2)}),
            fq({QuadExt(1), QuadExt(-1)})}));
    REQUIRE(wd.separable);
    REQUIRE(wd.rotation.has_value());
    CHECK(wd.rotation_radicand == 2);
    // the rotation maps both lines onto axes
    auto& M = *wd.rotation;
    auto apply = [&](const Frequency& f) {
        return fq({M[0][0] * f[0] + M[0][1] * f[1], M[1][0] * f[0] + M[1][1] * f[1]});
    };
    auto img1 = apply(fq({QuadExt(1), QuadExt(1)}));
    auto img2 = apply(fq({QuadExt(1), QuadExt(-1)}));
    CHECK((img1[0].is_zero() || img1[1].is_zero()));
    CHECK((img2[0].is_zero() || img2[1].is_zero()));

    // dimension 3, two lines only: still separable, basis completed
    Potential V3(3);
    V3.add_term(fq({QuadExt(1), QuadExt(0), QuadExt(0)}), RatFun(1));
    V3.add_term(fq({QuadExt(0), QuadExt(0), QuadExt(-2)}), RatFun(1));
    auto w3 = separability_witness(V3);
    CHECK(w3.separable);
    REQUIRE(w3.rotation.has_value());
}

TEST_CASE("real + rotation keeps is_real") {
    Potential V(2);
    V.add_term(fq({QuadExt(1), QuadExt(0)}), RatFun(2));
    V.add_term(fq({QuadExt(-1), QuadExt(0)}), RatFun(2));
    std::vector<std::vector<QuadExt>> rot90 = {{QuadExt(0), QuadExt(-1)}, {QuadExt(1), QuadExt(0)}};
    CHECK(is_real_potential(apply_isometry(V, rot90, QuadExt(1))));
}
