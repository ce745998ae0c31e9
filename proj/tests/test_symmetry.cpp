#include "doctest.h"

#include "hkit/errors.hpp"
#include "hkit/operators/operator_expr.hpp"
#include "hkit/symmetry/operators.hpp"
#include "hkit/symmetry/relations.hpp"
#include "hkit/symmetry/spectrum.hpp"

using namespace hkit::symmetry;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

}  // namespace

TEST_CASE("flat operators without the gauge field") {
    const auto ops = build_operators(Units{}, false);
    const auto x0 = OperatorExpr::multiply_by(hkit::exact::ScalarExpr::coordinate(0));
    const auto d1 = OperatorExpr::partial(1);
    const auto x1 = OperatorExpr::multiply_by(hkit::exact::ScalarExpr::coordinate(1));
    const auto d0 = OperatorExpr::partial(0);
    // l_01 = -i (x0 ∂1 - x1 ∂0) with ħ = 1.
    const auto flat = (x0 * d1 - x1 * d0) * GaussRat(Rational(0), Rational(-1));
    CHECK(ops.L[0][1] == flat);
    CHECK(ops.Tsq.is_zero());
}

TEST_CASE("canonical commutators hold exactly") {
    const auto ops = build_operators(Units{});
    for (const std::string name : {"pi-x", "pi-pi", "L-x"}) {
        const auto row = verify_relation(ops, name);
        CAPTURE(name);
        CHECK(row.pass);
        CHECK(row.residual == 0.0);
    }
    CHECK_THROWS(verify_relation(ops, "no-such-relation"));
}

TEST_CASE("relations hold with non-unit constants") {
    const auto ops = build_operators(Units{q(2, 3), q(5), q(7, 2)});
    CHECK(verify_relation(ops, "pi-pi").pass);
    CHECK(verify_relation(ops, "H-L").pass);
}

TEST_CASE("cleared C2 and C3 forms") {
    const auto ops = build_operators(Units{});
    CHECK(casimir_cleared_check(ops, Casimir::C2).pass);
    CHECK(casimir_cleared_check(ops, Casimir::C3).pass);
    const auto audit = casimir3_convention_audit(ops);
    CHECK_FALSE(audit.counts());
}

TEST_CASE("Casimir eigenvalues") {
    const auto e = casimir_eigenvalues(q(1), q(1), q(1));
    CHECK(e.C2 == q(9));
    CHECK(e.C3 == q(288));
    CHECK(e.C4 == q(63));
    const auto z = casimir_eigenvalues(q(0), q(0), q(0));
    CHECK(z.C2 == q(0));
    CHECK(z.C4 == q(0));
    CHECK_THROWS_AS(casimir_eigenvalues(q(1), q(0), q(1)), hkit::OrderingViolation);
}

TEST_CASE("constraint solution") {
    const auto s = solve_constraints(q(1, 2));
    CHECK(s.mu2 == q(1, 2));
    CHECK(s.mu3 == q(1, 2));
    CHECK(s.admissible_N(3) == std::vector<int>{1, 3, 5});
    CHECK(s.admits(7));
    CHECK_FALSE(s.admits(2));
}

TEST_CASE("energy levels") {
    const auto lv = energy_levels(q(0), 3);
    REQUIRE(lv.size() == 3);
    for (const auto& l : lv) CHECK(l.epsilon == q(-2, (l.N + 4) * (l.N + 4)));
    CHECK(energy_level(q(1, 2), 1).epsilon == q(-2, 25));
    CHECK_THROWS_AS(energy_level(q(1), 0), hkit::InvalidQuantumNumbers);
    const Units u{q(2), q(3), q(5)};
    // -μ0 e⁴ / (2ħ²(N/2+2)²) at N = 2: -3·25/(2·4·9).
    CHECK(energy_level(q(1), 2, u).epsilon == q(-75, 72));
}

TEST_CASE("duality closure") {
    for (int N = 0; N <= 40; ++N) CHECK(duality_closure_check(N, q(3, 2)).pass);
    CHECK(duality_closure_range(40, {q(1), q(2, 7)}).pass);
}

TEST_CASE("spectrum suite") {
    for (const auto& row : spectrum_checks()) {
        CAPTURE(row.relation);
        CHECK(row.pass);
    }
}
