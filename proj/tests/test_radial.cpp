#include <cmath>

#include "doctest.h"

#include "hkit/errors.hpp"
#include "hkit/radial/radial.hpp"

using namespace hkit::radial;

TEST_CASE("D=8 oscillator levels") {
    auto p = RadialProblem::oscillator(8, 0, 1);
    p.levels = 3;
    const auto res = solve(p);
    REQUIRE(res.eigenvalues.size() == 3);
    const double expect[] = {4, 6, 8};
    for (int n = 0; n < 3; ++n) CHECK(std::abs(res.eigenvalues[n] - expect[n]) / expect[n] < 1e-6);
}

TEST_CASE("d=5 Coulomb levels") {
    auto p = RadialProblem::coulomb(5, 0, 1);
    p.levels = 2;
    const auto res = solve(p);
    CHECK(std::abs(res.eigenvalues[0] + 0.125) / 0.125 < 1e-6);
    CHECK(std::abs(res.eigenvalues[1] + 1.0 / 18.0) * 18.0 < 1e-6);
}

TEST_CASE("duality maps") {
    const auto c = duality_forward(4, 1);
    CHECK(c.e2 == doctest::Approx(1.0));
    CHECK(c.epsilon == doctest::Approx(-0.125));
    const auto o = duality_backward(c.epsilon, c.e2);
    CHECK(o.E == doctest::Approx(4.0));
    CHECK(o.omega == doctest::Approx(1.0));

    // ω = 0: the dual energy vanishes.
    const auto z = duality_forward(4, 0);
    CHECK(z.epsilon == 0.0);
    CHECK(z.e2 == doctest::Approx(1.0));
}

TEST_CASE("oscillator spectrum maps onto the Coulomb spectrum") {
    auto osc = RadialProblem::oscillator(8, 0, 1);
    const auto res = solve(osc);
    const auto mapped = duality_map(res, osc);
    for (std::size_t n = 0; n < mapped.size(); ++n) {
        const auto dual = dual_coulomb_problem(osc, res.eigenvalues[n]);
        const double level = coulomb_level(dual, static_cast<int>(n));
        CHECK(std::abs(mapped[n].epsilon - level) / std::abs(level) < 1e-6);
    }
}

TEST_CASE("modified potential ansatz") {
    const auto a = modified_ansatz(1, 0, 5);
    CHECK(a.epsilon == 0.0);
    CHECK(a.e2 == doctest::Approx(1.0));
    CHECK_FALSE(a.degenerate);
    CHECK(modified_ansatz(3, 0.5, 3).degenerate);
}

TEST_CASE("substitution residual and its negative control") {
    auto osc = RadialProblem::oscillator(8, 0, 1);
    const auto res = solve(osc);
    CHECK(substitution_residual_check(res, osc, 0).pass);
    SubstitutionOptions wrong;
    wrong.epsilon_scale = 1.1;
    const auto control = substitution_residual_check(res, osc, 0, wrong);
    CHECK_FALSE(control.pass);
    CHECK(control.residual > 100 * wrong.tolerance);
}

TEST_CASE("second-order convergence") {
    CHECK(convergence_order(RadialProblem::oscillator(8, 0, 1)) == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("too coarse a grid is reported") {
    auto p = RadialProblem::oscillator(8, 0, 1);
    p.n_points = 64;
    p.tolerance = 1e-12;
    CHECK_THROWS_AS(solve(p), hkit::GridTooCoarse);
}

TEST_CASE("radial suite") {
    for (const auto& row : radial_checks()) {
        CAPTURE(row.relation);
        if (row.counts()) CHECK(row.pass);
    }
}
