#include "hkit/symmetry/operators.hpp"

#include "hkit/errors.hpp"
#include "hkit/gauge/field_tensor.hpp"

namespace hkit::symmetry {

using exact::ScalarExpr;
using operators::IsospinWord;

namespace {

OperatorExpr iso_times(const ScalarExpr& f, int generator) {
    return OperatorExpr::from_term(f, IsospinWord::generator(generator), {});
}

}  // namespace

SymmetryOperators build_operators(const Units& u, bool gauge_field) {
    if (u.hbar.sign() <= 0 || u.mu0.sign() <= 0 || u.e2.sign() <= 0) {
        throw ConfigError("hbar, mu0 and e2 must be positive");
    }
    SymmetryOperators s;
    s.units = u;
    const GaussRat I = GaussRat::i();
    const GaussRat hbar(u.hbar);
    const GaussRat inv_hbar(Rational(1) / u.hbar);
    const gauge::GaugePotential A = gauge::potential(exact::Chart::Plus);
    const gauge::FieldTensor F = gauge::field_tensor(gauge::FieldSource::Definition, exact::Chart::Plus);

    for (int i = 0; i < 5; ++i) {
        OperatorExpr p = OperatorExpr::partial(i) * (-I * hbar);
        if (gauge_field) {
            for (int a = 0; a < 3; ++a) p -= iso_times(A(a, i), a + 1) * hbar;
        }
        s.pi[i] = std::move(p);
    }
    const ScalarExpr r2 = ScalarExpr::radius_power(2);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            if (i == j) continue;
            OperatorExpr l = (ScalarExpr::coordinate(i) * s.pi[j] - ScalarExpr::coordinate(j) * s.pi[i]) * inv_hbar;
            if (gauge_field) {
                for (int a = 0; a < 3; ++a) l -= iso_times(r2 * F(a, i, j), a + 1);
            }
            s.L[i][j] = std::move(l);
        }
    }
    const GaussRat coulomb(Rational(2) * u.mu0 * u.e2 / u.hbar);
    for (int k = 0; k < 5; ++k) {
        OperatorExpr m = OperatorExpr::multiply_by(ScalarExpr::coordinate(k) * ScalarExpr::radius_power(-1)) * coulomb;
        for (int i = 0; i < 5; ++i) {
            if (i == k) continue;
            m += operators::compose(s.pi[i], s.L[i][k]);
            m += operators::compose(s.L[i][k], s.pi[i]);
        }
        s.Mbar[k] = std::move(m);
    }
    s.Tsq = gauge_field ? OperatorExpr::isospin(operators::casimir_t2()) : OperatorExpr();
    OperatorExpr kinetic;
    for (int i = 0; i < 5; ++i) kinetic += operators::compose(s.pi[i], s.pi[i]);
    const GaussRat inv2m(Rational(1) / (Rational(2) * u.mu0));
    OperatorExpr h = kinetic * inv2m;
    if (gauge_field) {
        h += ScalarExpr::radius_power(-2) * s.Tsq * GaussRat(u.hbar * u.hbar / (Rational(2) * u.mu0));
    }
    h -= OperatorExpr::multiply_by(ScalarExpr::radius_power(-1)) * GaussRat(u.e2);
    s.H = std::move(h);
    return s;
}

}  // namespace hkit::symmetry
