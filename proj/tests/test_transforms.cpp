#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"

#include "hkit/errors.hpp"
#include "hkit/transforms/angles.hpp"
#include "hkit/transforms/checks.hpp"
#include "hkit/transforms/maps.hpp"

using namespace hkit::transforms;
using hkit::exact::Point5;

namespace {

constexpr double kPi = std::numbers::pi;

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("Hurwitz map examples") {
    ExactPoint8 u{q(1), q(0), q(0), q(0), q(0), q(0), q(0), q(0)};
    auto x = hurwitz_map(u);
    CHECK(x == std::array<Rational, 5>{q(1), q(0), q(0), q(0), q(0)});
    u[4] = q(1);
    x = hurwitz_map(u);
    CHECK(x == std::array<Rational, 5>{q(0), q(2), q(0), q(0), q(0)});
}

TEST_CASE("Euler identity holds exactly for random rational inputs") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 17);
    for (int k = 0; k < 200; ++k) {
        ExactPoint8 u;
        for (auto& v : u) v = q(num(rng), den(rng));
        const Rational u2 = squared_norm(u);
        CHECK(squared_norm(hurwitz_map(u)) == u2 * u2);
        const std::array<Rational, 4> u4{u[0], u[1], u[2], u[3]};
        const Rational n4 = squared_norm(u4);
        CHECK(squared_norm(kustaanheimo_stiefel_map(u4)) == n4 * n4);
        const std::array<Rational, 2> u2v{u[0], u[1]};
        const Rational n2 = squared_norm(u2v);
        CHECK(squared_norm(levi_civita_map(u2v)) == n2 * n2);
    }
}

TEST_CASE("Levi-Civita and KS examples") {
    CHECK(levi_civita_map(std::array<Rational, 2>{q(3), q(4)}) == std::array<Rational, 2>{q(-7), q(24)});
    CHECK(levi_civita_map(std::array<Rational, 2>{q(1), q(0)}) == std::array<Rational, 2>{q(1), q(0)});
    CHECK(kustaanheimo_stiefel_map(std::array<Rational, 4>{q(1), q(0), q(0), q(0)}) ==
          std::array<Rational, 3>{q(0), q(0), q(1)});
    const auto full = h_apply(h_matrix(4), std::vector<Rational>{q(1, 2), q(-3), q(5, 7), q(2)});
    CHECK(full[3].is_zero());
}

TEST_CASE("H matrices") {
    for (int D : {2, 4, 8}) CHECK(h_gram_is_scalar(h_matrix(D)));
    CHECK_THROWS_AS(h_matrix(3), hkit::BadDimension);
    CHECK_THROWS_AS(h_matrix(16), hkit::BadDimension);
    const auto mismatch = hurwitz_matrix_mismatch();
    CHECK(mismatch == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("body angles") {
    auto a = body_angles({1, 0, 1, 0, 0, 0, 0, 0});
    CHECK(a.alpha == doctest::Approx(0.0));
    CHECK(a.beta == doctest::Approx(kPi / 2));
    CHECK(a.gamma == doctest::Approx(0.0));

    // Complex-logarithm oracle: α_T = arg(z2/z1) with z1 = u0 + iu1, z2 = u2 + iu3.
    const Point8 u{0, 1, 1, 0, 0, 0, 0, 0};
    const std::complex<double> z1(u[0], u[1]), z2(u[2], u[3]);
    double oracle = std::arg(z2 / z1);
    if (oracle < 0) oracle += 2 * kPi;
    a = body_angles(u);
    CHECK(a.alpha == doctest::Approx(oracle));
    CHECK(a.alpha == doctest::Approx(3 * kPi / 2));
    CHECK(a.beta == doctest::Approx(kPi / 2));
    CHECK_THROWS_AS(body_angles({1, 1, 0, 0, 1, 1, 1, 1}), hkit::UndefinedAngle);
}

TEST_CASE("hyperspherical coordinates") {
    const auto h = hyperspherical({0, 0, 1, 0, 1});
    CHECK(h.r == doctest::Approx(std::sqrt(2.0)));
    CHECK(h.theta == doctest::Approx(kPi / 2));
    CHECK(h.beta == doctest::Approx(kPi / 2));
    CHECK(h.alpha == doctest::Approx(0.0));
    CHECK(h.gamma == doctest::Approx(0.0));
    CHECK_THROWS_AS(hyperspherical({2, 0, 0, 0, 0}), hkit::UndefinedAngle);
    CHECK_THROWS_AS(hyperspherical({0, 0, 0, 0, 0}), hkit::ZeroRadius);

    std::mt19937_64 rng(8);
    std::normal_distribution<double> g;
    double worst = 0;
    for (int k = 0; k < 1000; ++k) {
        Point5 x;
        for (auto& v : x) v = g(rng);
        const auto back = hyperspherical_inverse(hyperspherical(x));
        for (int i = 0; i < 5; ++i) worst = std::max(worst, std::abs(back[i] - x[i]));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("hyperspherical Jacobian matches finite differences") {
    const HyperSpherical h{1.3, 0.7, 1.1, 2.0, 5.0};
    const auto J = hyperspherical_jacobian(h);
    for (int k = 0; k < 5; ++k) {
        auto lo = h.as_array(), hi = h.as_array();
        lo[k] -= 1e-6;
        hi[k] += 1e-6;
        const auto a = hyperspherical_inverse(HyperSpherical::from_array(hi));
        const auto b = hyperspherical_inverse(HyperSpherical::from_array(lo));
        for (int m = 0; m < 5; ++m) CHECK(J[m][k] == doctest::Approx((a[m] - b[m]) / 2e-6).epsilon(1e-7));
    }
}

TEST_CASE("fiber rotations leave the image fixed") {
    const auto gens = hurwitz_fiber_generators();
    CHECK(gens.size() == 3);
    const Point8 u{0.3, -1.2, 0.5, 0.8, -0.1, 0.4, 1.1, -0.6};
    const auto x = hurwitz_map(u);
    for (const auto& K : gens) {
        const auto y = hurwitz_map(fiber_rotate(K, 0.9, u));
        for (int i = 0; i < 5; ++i) CHECK(y[i] == doctest::Approx(x[i]).epsilon(1e-12));
    }
}

TEST_CASE("euler suite") {
    for (const auto& row : euler_checks(100, 3)) {
        CAPTURE(row.relation);
        if (row.counts()) CHECK(row.pass);
    }
}
