#include <cmath>
#include <random>

#include "doctest.h"

#include "hkit/errors.hpp"
#include "hkit/gauge/hyperspherical.hpp"
#include "hkit/topology/charge.hpp"
#include "hkit/topology/dual_number.hpp"

using namespace hkit::topology;

TEST_CASE("charge density") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> th(0.2, 2.9), be(0.2, 2.9), al(0, 6.28), ga(0, 12.5), rad(0.5, 3);
    for (int k = 0; k < 10; ++k) {
        const HyperSpherical q{rad(rng), th(rng), be(rng), al(rng), ga(rng)};
        const double r4 = std::pow(q.r, 4);
        CHECK(charge_density(q) * r4 == doctest::Approx(12.0).epsilon(1e-10));
        for (int a = 0; a < 3; ++a) CHECK(charge_density(q, a) * r4 == doctest::Approx(4.0).epsilon(1e-10));
    }
    CHECK_THROWS_AS(charge_density(HyperSpherical{1, 0, 1, 1, 1}), hkit::SingularMetric);
}

TEST_CASE("topological charge at (16,16,8,8)") {
    const ChargeResult res = topological_charge(QuadratureSpec{}, true);
    CHECK(std::abs(res.q - 1.0) < 1e-10);
    for (double qa : res.q_per_component) CHECK(std::abs(qa - 1.0 / 3.0) < 1e-10);
    CHECK(res.estimated_error < 1e-12);
}

TEST_CASE("charge is independent of the radius") {
    QuadratureSpec a, b;
    b.radius = 7.0 / 3.0;
    CHECK(std::abs(topological_charge(a, false).q - topological_charge(b, false).q) < 1e-12);
}

TEST_CASE("dual-number Jacobian path agrees with the analytic tensor") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> th(0.2, 2.9), be(0.2, 2.9), al(0, 6.28), ga(0, 12.5);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        const HyperSpherical q{1.0, th(rng), be(rng), al(rng), ga(rng)};
        const auto x = hkit::transforms::hyperspherical_inverse(q);
        const auto viaDual = jacobian_tensor_transform(closed_form_field(x), q);
        const auto direct = hkit::gauge::hyperspherical_field_tensor(hkit::gauge::HyperSource::Transformed, q);
        for (int a = 0; a < 3; ++a)
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) worst = std::max(worst, std::abs(viaDual[a][i][j] - direct[a][i][j]));
        for (int a = 0; a < 3; ++a)
            for (int j = 0; j < 5; ++j) CHECK(std::abs(viaDual[a][0][j]) < 1e-12);
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("charge suite") {
    for (const auto& row : charge_checks()) {
        CAPTURE(row.relation);
        CHECK(row.pass);
    }
}
