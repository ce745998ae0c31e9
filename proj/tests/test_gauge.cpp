#include <cmath>
#include <numbers>

#include "doctest.h"

#include "hkit/errors.hpp"
#include "hkit/gauge/checks.hpp"
#include "hkit/gauge/field_tensor.hpp"
#include "hkit/gauge/hyperspherical.hpp"
#include "hkit/gauge/potential.hpp"

using namespace hkit::gauge;
using hkit::exact::Rational;

namespace {

ScalarExpr x(int i) { return ScalarExpr::coordinate(i); }
ScalarExpr r(int p) { return ScalarExpr::radius_power(p); }
ScalarExpr w(int q) { return ScalarExpr::axis_power(q); }

void require_counted_pass(const hkit::CheckList& rows) {
    for (const auto& row : rows) {
        CAPTURE(row.relation);
        CAPTURE(row.detail);
        if (row.counts()) CHECK(row.pass);
    }
}

}  // namespace

TEST_CASE("potential at a regular point") {
    const auto A = potential_at(Chart::Plus, {0, 0, 0, 0, 1});
    CHECK(A[0] == std::array<double, 5>{0, 1, 0, 0, 0});
    CHECK(A[1] == std::array<double, 5>{0, 0, 1, 0, 0});
    CHECK(A[2] == std::array<double, 5>{0, 0, 0, 1, 0});
    CHECK_THROWS_AS(potential_at(Chart::Plus, {-1, 0, 0, 0, 0}), hkit::SingularAxis);
    CHECK_NOTHROW(potential_at(Chart::Minus, {-1, 0, 0, 0, 0}));
    CHECK_THROWS_AS(potential_at(Chart::Minus, {1, 0, 0, 0, 0}), hkit::SingularAxis);
}

TEST_CASE("potential orthogonality, symbolically") {
    const auto A = potential(Chart::Plus);
    const ScalarExpr expect = r(-2) * (r(1) - x(0)) * w(-1);
    for (int a = 0; a < 3; ++a) {
        ScalarExpr along_x;
        for (int j = 0; j < 5; ++j) along_x += A(a, j) * x(j);
        CHECK(along_x.is_zero());
        for (int b = 0; b < 3; ++b) {
            ScalarExpr dot;
            for (int j = 0; j < 5; ++j) dot += A(a, j) * A(b, j);
            CHECK(dot == (a == b ? expect : ScalarExpr()));
        }
    }
    require_counted_pass(potential_identities_check());
}

TEST_CASE("tau matrices") {
    const auto& tau = tau_matrices();
    // 4(τ¹)² = diag(0,1,1,1,1), computed independently here.
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            GaussRat s;
            for (int k = 0; k < 5; ++k) s += tau[0][i][k] * tau[0][k][j];
            CHECK(s * GaussRat(4) == GaussRat((i == j && i > 0) ? 1 : 0));
        }
    }
    // [τ¹, τ²] = iτ³.
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            GaussRat s;
            for (int k = 0; k < 5; ++k) s += tau[0][i][k] * tau[1][k][j] - tau[1][i][k] * tau[0][k][j];
            CHECK(s == GaussRat::i() * tau[2][i][j]);
        }
    }
    require_counted_pass(tau_relations_check());
}

TEST_CASE("field tensor from the definition") {
    const FieldTensor F = field_tensor(FieldSource::Definition);
    CHECK(F(0, 0, 1) == ScalarExpr::constant(-1) * x(4) * r(-3));
    CHECK(std::abs(F(0, 0, 1).evaluate({0, 0, 0, 0, 1}) + 1.0) < 1e-15);
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            ScalarExpr s;
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) s += F(a, i, j) * F(b, i, j);
            CHECK(s == (a == b ? ScalarExpr::constant(4) * r(-4) : ScalarExpr()));
        }
    }
    CHECK(compare_tensors(F, field_tensor(FieldSource::ClosedForm)).empty());
}

TEST_CASE("appendix table discrepancies are itemized") {
    const auto diffs = compare_tensors(field_tensor(FieldSource::Definition), field_tensor(FieldSource::AppendixTable));
    CHECK(diffs.size() == 3);
    for (const auto& d : diffs) CHECK(d.expected != d.found);
}

TEST_CASE("hyperspherical field tensor") {
    HyperSpherical q{1.0, std::numbers::pi / 2, 0.9, 1.3, 2.2};
    const auto table = hyperspherical_field_tensor(HyperSource::AppendixTable, q);
    CHECK(table[2][1][3] == doctest::Approx(0.5));
    const auto T = hyperspherical_field_tensor(HyperSource::Transformed, q);
    for (int a = 0; a < 3; ++a)
        for (int k = 0; k < 5; ++k) CHECK(std::abs(T[a][0][k]) < 1e-12);
}

TEST_CASE("self-duality and its control") {
    const int sigma = calibrated_orientation();
    CHECK(std::abs(sigma) == 1);
    HyperSpherical q{1.0, 1.1, 0.8, 2.5, 7.0};
    const auto F = hyperspherical_field_tensor(HyperSource::Transformed, q);
    CHECK(hodge_dual(F, q, sigma).residual < 1e-10);
    CHECK(hodge_dual(F, q, -sigma).residual > 0.1);
    q.theta = 0;
    CHECK_THROWS_AS(hodge_dual(F, q, sigma), hkit::SingularMetric);
    require_counted_pass(self_duality_check(20, 4));
}

TEST_CASE("gauge transformation between charts") {
    CHECK(gauge_transform_residual({0, 1, 0, 0, 0}) < 1e-10);
    CHECK_THROWS_AS(gauge_transform_residual({-2, 0, 0, 0, 0}), hkit::SingularAxis);
    CHECK(gauge_transform_check(100, 6).pass);
}

TEST_CASE("trigonometric generators") {
    const auto rows = su2_trig_generators_check(50, 2);
    bool any_audit_failure = false;
    for (const auto& row : rows) {
        if (row.counts()) CHECK(row.pass);
        else any_audit_failure = any_audit_failure || !row.pass;
    }
    CHECK(any_audit_failure);
}
