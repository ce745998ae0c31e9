#include <random>

#include "doctest.h"

#include "hkit/errors.hpp"
#include "hkit/exact/scalar_expr.hpp"
#include "hkit/operators/operator_expr.hpp"

using namespace hkit::exact;

namespace {

ScalarExpr x(int i) { return ScalarExpr::coordinate(i); }
ScalarExpr r(int p = 1) { return ScalarExpr::radius_power(p); }
ScalarExpr w(int q = 1) { return ScalarExpr::axis_power(q); }
ScalarExpr c(std::int64_t n, std::int64_t d = 1) { return ScalarExpr::constant(GaussRat(Rational(n, d))); }

ScalarExpr random_expr(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-3, 3), var(0, 4), pw(-1, 1);
    ScalarExpr e = c(coef(rng));
    for (int t = 0; t < 3; ++t) e += c(coef(rng)) * x(var(rng)) * r(pw(rng)) * w(pw(rng));
    return e;
}

}  // namespace

TEST_CASE("rational arithmetic stays exact across the small/big boundary") {
    const Rational big = Rational(INT64_MAX, 3);
    const Rational sq = big * big;
    CHECK(sq / big == big);
    CHECK((sq - sq).is_zero());
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(-3, 2).sign() == -1);
}

TEST_CASE("rational parse") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("123456789012345678901234567890/2").to_string() == "61728394506172839450617283945");
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("gaussian rationals") {
    const GaussRat i = GaussRat::i();
    CHECK(i * i == GaussRat(-1));
    CHECK(GaussRat(Rational(1), Rational(1)) / GaussRat(Rational(1), Rational(-1)) == i);
}

TEST_CASE("ring relation and normalization") {
    ScalarExpr sum = c(0);
    for (int i = 0; i < 5; ++i) sum += x(i) * x(i);
    CHECK(r(2) == sum);
    CHECK((r() - x(0)) * (r() + x(0)) == x(1) * x(1) + x(2) * x(2) + x(3) * x(3) + x(4) * x(4));
    std::mt19937_64 rng(3);
    const ScalarExpr e = random_expr(rng);
    CHECK((e + e * GaussRat(-1)).is_zero());
    CHECK(normalize(e) == e);
}

TEST_CASE("derivative of r") {
    auto d = r().derivative(0);
    CHECK(d == x(0) * r(-1));
}

TEST_CASE("chain rule examples") {
    CHECK(differentiate(w(-1), 1) == c(-1) * x(1) * r(-1) * w(-2));
    CHECK(differentiate(x(2), 2) == c(1));
    CHECK(differentiate(x(2), 3).is_zero());
}

TEST_CASE("evaluation") {
    CHECK(std::abs((r(-1) * w(-1)).evaluate({0, 0, 0, 0, 1}) - 1.0) < 1e-15);
    CHECK(std::abs((x(4) * r(-3)).evaluate({0, 0, 0, 0, 1}) - 1.0) < 1e-15);
    const auto exact = (x(4) * r(-3) + c(1, 2)).evaluate_exact({Rational(0), Rational(0), Rational(3), Rational(0), Rational(4)});
    REQUIRE(exact.has_value());
    CHECK(*exact == GaussRat(Rational(4, 125) + Rational(1, 2)));
    const auto irrational = r().evaluate_exact({Rational(1), Rational(1), Rational(0), Rational(0), Rational(0)});
    CHECK_FALSE(irrational.has_value());
}

TEST_CASE("axis denominator") {
    auto e = r(-1) * w(-1);
    CHECK(std::abs(e.evaluate({0, 0, 0, 0, 1}) - std::complex<double>(1.0)) < 1e-15);
    CHECK_THROWS_AS(e.evaluate({-1, 0, 0, 0, 0}), hkit::SingularPoint);
}

TEST_CASE("equality is structural") {
    CHECK(equals((r() - x(0)) * r(-1) * w(-1) * r() * w(), r() - x(0)));
    CHECK_FALSE(equals(x(0), x(1)));
    const ScalarExpr minus = ScalarExpr::coordinate(0, Chart::Minus);
    CHECK_THROWS(require_same_chart(x(0), minus));
}

TEST_CASE("ring axioms on random expressions") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 20; ++k) {
        const auto a = random_expr(rng), b = random_expr(rng), e = random_expr(rng);
        CHECK((a * b) * e == a * (b * e));
        CHECK(a * (b + e) == a * b + a * e);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("derivatives agree with finite differences") {
    std::mt19937_64 rng(5);
    const Point5 p{0.3, -0.4, 0.7, 0.2, 0.5};
    for (int k = 0; k < 10; ++k) {
        const auto e = random_expr(rng);
        for (int axis = 0; axis < 5; ++axis) {
            Point5 lo = p, hi = p;
            const double h = 1e-6;
            lo[axis] -= h;
            hi[axis] += h;
            const auto fd = (e.evaluate(hi) - e.evaluate(lo)) / (2 * h);
            CHECK(std::abs(fd - e.derivative(axis).evaluate(p)) < 1e-6);
        }
    }
}
