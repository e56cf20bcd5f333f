#include <catch2/catch_amalgamated.hpp>

#include "torint/ratfun.hpp"

using namespace torint;

TEST_CASE("polynomial arithmetic and variable merging") {
    Poly x = Poly::variable("x"), y = Poly::variable("y");
    Poly p = x * x + y.scaled(QuadExt(2)) + Poly(1);
    Poly q = x * y - Poly(1);
    CHECK((p + q) - q == p);
    CHECK(p * q == q * p);
    CHECK((p - p).is_zero());
    CHECK(p.total_degree() == 2);
    CHECK((p * q).total_degree() == 4);
    CHECK(p.degree_in("x") == 2);
    CHECK(p.degree_in("y") == 1);
    CHECK(p.degree_in("z") == 0);
}

TEST_CASE("exact division") {
    Poly x = Poly::variable("x"), y = Poly::variable("y");
    Poly a = x + y, b = x - y;
    Poly prod = a * b;
    auto q = prod.divexact(a);
    REQUIRE(q.has_value());
    CHECK(*q == b);
    CHECK_FALSE((prod + Poly(1)).divexact(a).has_value());
    // division by a constant always works
    auto h = prod.divexact(Poly(QuadExt(Rat(1, 2))));
    REQUIRE(h.has_value());
    CHECK(*h == prod.scaled(QuadExt(2)));
}

TEST_CASE("evaluation and substitution") {
    Poly x = Poly::variable("x"), y = Poly::variable("y");
    Poly p = x * x * y - y + Poly(3);
    QuadExt v = p.eval({{"x", QuadExt(2)}, {"y", QuadExt(Rat(1, 2))}});
    CHECK(v == QuadExt(Rat(9, 2)));  // 4*(1/2) - 1/2 + 3
    Poly partial = p.eval_partial({{"x", QuadExt(2)}});
    CHECK(partial.vars() == std::vector<std::string>{"y"});
    CHECK(partial == Poly::variable("y").scaled(QuadExt(3)) + Poly(3));
    CHECK_THROWS_AS(p.eval({{"x", QuadExt(2)}}), invalid_input);
}

TEST_CASE("ratfun normal form and equality") {
    Poly x = Poly::variable("x"), y = Poly::variable("y");
    RatFun f((x + y) * (x - y), x + y);  // reduces by exact division
    CHECK(f.is_polynomial());
    CHECK(f == RatFun(x - y));
    RatFun g(Poly(1), x.scaled(QuadExt(2)));  // denominator made monic
    CHECK(g.den() == x);
    CHECK(g.num() == Poly(QuadExt(Rat(1, 2))));
    // unreduced fractions still compare equal
    RatFun a(x * x + x, x * y + y);  // x(x+1) / y(x+1)
    RatFun b(x, y);
    CHECK(a == b);
    CHECK((a - b).is_zero());
    CHECK_THROWS_AS(RatFun(x, Poly(0)), invalid_input);
    CHECK_THROWS_AS(a / RatFun(0), invalid_input);
}

TEST_CASE("ratfun arithmetic") {
    RatFun x = RatFun::parameter("x");
    RatFun one(1);
    RatFun f = one / (x + one);
    RatFun g = x / (x + one);
    CHECK(f + g == one);
    CHECK(f * (x + one) == one);
    CHECK((f - f).is_zero());
    QuadExt v = f.eval({{"x", QuadExt(3)}});
    CHECK(v == QuadExt(Rat(1, 4)));
    CHECK_THROWS_AS(f.eval({{"x", QuadExt(-1)}}), invalid_input);
}

TEST_CASE("ratfun with quadratic-field coefficients") {
    QuadExt r3 = QuadExt::sqrt_of(3);
    RatFun a = RatFun(Poly::variable("t").scaled(r3));
    CHECK(a * a == RatFun(Poly::variable("t") * Poly::variable("t")).scaled(QuadExt(3)));
}
