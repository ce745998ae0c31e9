#include <complex>
#include <random>

#include "doctest.h"

#include "hkit/errors.hpp"
#include "hkit/exact/scalar_expr.hpp"
#include "hkit/operators/operator_expr.hpp"

using namespace hkit::operators;
using hkit::exact::Rational;
using Mat = std::array<std::array<std::complex<double>, 2>, 2>;

namespace {

Mat mul(const Mat& a, const Mat& b) {
    Mat m{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) m[i][j] += a[i][k] * b[k][j];
    return m;
}

// Spin-1/2 generators T_k = σ_k / 2.
Mat spin_half(int k) {
    const std::complex<double> I(0, 1);
    if (k == 1) return {{{0, 0.5}, {0.5, 0}}};
    if (k == 2) return {{{0, -0.5 * I}, {0.5 * I, 0}}};
    return {{{0.5, 0}, {0, -0.5}}};
}

Mat word_matrix(IsospinWord w) {
    Mat m{{{1, 0}, {0, 1}}};
    for (int n = 0; n < w.a; ++n) m = mul(m, spin_half(1));
    for (int n = 0; n < w.b; ++n) m = mul(m, spin_half(2));
    for (int n = 0; n < w.c; ++n) m = mul(m, spin_half(3));
    return m;
}

Mat poly_matrix(const IsoPoly& p) {
    Mat m{};
    for (const auto& [w, c] : p.entries()) {
        const Mat wm = word_matrix(w);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m[i][j] += c.to_complex() * wm[i][j];
    }
    return m;
}

double distance(const Mat& a, const Mat& b) {
    double d = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
    return d;
}

ScalarExpr coord(int i) { return ScalarExpr::coordinate(i); }

}  // namespace

TEST_CASE("pbw reduction examples") {
    const GaussRat I = GaussRat::i();
    // [T3, T1] = i T2, so T3 T1 = T1 T3 + i T2; the matrix check below confirms the sign.
    const IsoPoly t31 = pbw_reduce({3, 1});
    CHECK(t31 == IsoPoly(IsospinWord{1, 0, 1}, 1) + IsoPoly(IsospinWord::generator(2), I));
    CHECK(distance(poly_matrix(t31), mul(spin_half(3), spin_half(1))) < 1e-15);
    CHECK(pbw_reduce({2, 2}) == IsoPoly(IsospinWord{0, 2, 0}, 1));
    const IsoPoly p = pbw_reduce({3, 2, 1});
    CHECK(p.entries().size() <= 6);
    const Mat direct = mul(mul(spin_half(3), spin_half(2)), spin_half(1));
    CHECK(distance(poly_matrix(p), direct) < 1e-15);
}

TEST_CASE("pbw reduction matches the spin-1/2 representation on random words") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> gen(1, 3), len(1, 6);
    for (int k = 0; k < 50; ++k) {
        std::vector<int> word(static_cast<std::size_t>(len(rng)));
        Mat direct{{{1, 0}, {0, 1}}};
        for (auto& g : word) {
            g = gen(rng);
            direct = mul(direct, spin_half(g));
        }
        CHECK(distance(poly_matrix(pbw_reduce(word)), direct) < 1e-14);
    }
}

TEST_CASE("compose and commutator examples") {
    const auto d1 = OperatorExpr::partial(1);
    const auto x1 = OperatorExpr::multiply_by(coord(1));
    const auto id = OperatorExpr::identity();
    CHECK(compose(d1, x1) == coord(1) * d1 + id);
    CHECK(commutator(d1, x1) == id);
    CHECK(compose(id, x1 + d1) == x1 + d1);
    const auto T1 = OperatorExpr::generator(1), T2 = OperatorExpr::generator(2), T3 = OperatorExpr::generator(3);
    CHECK(T2 * T1 == T1 * T2 - GaussRat::i() * T3);
    const auto Tsq = OperatorExpr::isospin(casimir_t2());
    for (const auto& T : {T1, T2, T3}) CHECK(commutator(Tsq, T).is_zero());
}

TEST_CASE("apply examples") {
    const ScalarExpr r = ScalarExpr::radius_power(1);
    CHECK(apply(OperatorExpr::partial(0), Field(r)) == Field(coord(0) * ScalarExpr::radius_power(-1)));
    const auto x0d0 = coord(0) * OperatorExpr::partial(0);
    CHECK(apply(x0d0, Field(coord(0) * coord(0))) == Field(ScalarExpr::constant(2) * coord(0) * coord(0)));

    const Field t1(ScalarExpr::constant(1), IsospinWord::generator(1));
    const Field out = apply(OperatorExpr::isospin(casimir_t2()), t1);
    Mat m{};
    for (const auto& [w, f] : out.entries()) {
        REQUIRE(f.is_constant());
        const auto c = f.evaluate({1, 0, 0, 0, 0});
        const Mat wm = word_matrix(w);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m[i][j] += c * wm[i][j];
    }
    Mat expect = spin_half(1);
    for (auto& row : expect)
        for (auto& v : row) v *= 0.75;
    CHECK(distance(m, expect) < 1e-15);
}

TEST_CASE("Jacobi identity on random small operators") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> pick(0, 4), gen(1, 3), coef(-2, 2);
    auto random_op = [&] {
        OperatorExpr op = OperatorExpr::multiply_by(ScalarExpr::constant(coef(rng)) * coord(pick(rng)));
        op += coord(pick(rng)) * OperatorExpr::partial(pick(rng));
        op += OperatorExpr::generator(gen(rng)) * GaussRat(coef(rng));
        op += ScalarExpr::radius_power(-1) * OperatorExpr::partial(pick(rng));
        return op;
    };
    for (int k = 0; k < 10; ++k) {
        const auto a = random_op(), b = random_op(), c = random_op();
        const auto jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("term budget") {
    OperatorExpr big = OperatorExpr::identity();
    for (int i = 0; i < 5; ++i) big += ScalarExpr::radius_power(-1) * coord(i) * OperatorExpr::partial(i);
    CHECK_THROWS_AS(compose(big, big, 3), hkit::TermBudgetExceeded);
    CHECK_NOTHROW(compose(big, big, 0));
}
