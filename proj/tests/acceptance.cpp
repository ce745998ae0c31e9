// One line per acceptance criterion; exit status 0 only when all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "hkit/gauge/checks.hpp"
#include "hkit/gauge/field_tensor.hpp"
#include "hkit/gauge/hyperspherical.hpp"
#include "hkit/radial/radial.hpp"
#include "hkit/symmetry/relations.hpp"
#include "hkit/symmetry/spectrum.hpp"
#include "hkit/topology/charge.hpp"
#include "hkit/transforms/maps.hpp"

using hkit::exact::Rational;
using hkit::exact::ScalarExpr;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

Outcome charge() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto res = hkit::topology::topological_charge(hkit::topology::QuadratureSpec{16, 16, 8, 8, 1.0}, false);
    const double t = seconds_since(t0);
    double worst = std::abs(res.q - 1.0);
    double worst_a = 0;
    for (double qa : res.q_per_component) worst_a = std::max(worst_a, std::abs(qa - 1.0 / 3.0));
    const bool ok = worst < 1e-10 && worst_a < 1e-10 && t < 1.0;
    return {ok, "|q-1| = " + fmt(worst) + ", max |q^a-1/3| = " + fmt(worst_a) + ", " + fmt(t) + " s"};
}

Outcome field_identity() {
    const auto F = hkit::gauge::field_tensor(hkit::gauge::FieldSource::Definition);
    const ScalarExpr four_over_r4 = ScalarExpr::constant(4) * ScalarExpr::radius_power(-4);
    int nonzero = 0;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            ScalarExpr s;
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) s += F(a, i, j) * F(b, i, j);
            if (a == b) s -= four_over_r4;
            nonzero += !s.is_zero();
        }
    }
    return {nonzero == 0, std::to_string(nonzero) + " of 9 (a,b) residuals nonzero, definition-built tensor"};
}

Outcome self_duality() {
    const auto rows = hkit::gauge::self_duality_check(50, 1);
    const auto& calibrated = rows.at(0);
    const auto& opposite = rows.at(1);
    const bool ok = calibrated.pass && calibrated.residual < 1e-10 && opposite.residual > 1e-3;
    return {ok, "max |*F - F| = " + fmt(calibrated.residual) + " over 50 points, orientation " +
                    std::to_string(hkit::gauge::calibrated_orientation()) + "; opposite orientation " +
                    fmt(opposite.residual)};
}

Outcome euler() {
    using namespace hkit::transforms;
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> num(-1000, 1000), den(1, 97);
    int bad = 0;
    for (int k = 0; k < 1000; ++k) {
        std::vector<Rational> u(8);
        for (auto& v : u) v = Rational(num(rng), den(rng));
        for (int D : {2, 4, 8}) {
            const std::vector<Rational> head(u.begin(), u.begin() + D);
            Rational u2(0), x2(0);
            for (const auto& v : head) u2 += v * v;
            for (const auto& v : h_apply(h_matrix(D), head)) x2 += v * v;
            bad += x2 != u2 * u2;
        }
    }
    bool gram = true;
    for (int D : {2, 4, 8}) gram = gram && h_gram_is_scalar(h_matrix(D));
    return {bad == 0 && gram, std::to_string(bad) + " failures in 3000 exact evaluations; H H^T = u^2 E symbolically: " +
                                  (gram ? "yes" : "no")};
}

Outcome gauge_orthogonality() {
    const auto rows = hkit::gauge::potential_identities_check();
    bool ok = !rows.empty();
    for (const auto& r : rows) ok = ok && r.pass && r.residual == 0.0;
    return {ok, std::to_string(rows.size()) + " symbolic identities (both charts), all residuals exactly zero: " +
                    (ok ? "yes" : "no")};
}

Outcome algebra() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto ops = hkit::symmetry::build_operators(hkit::symmetry::Units{});
    int exact_zero = 0;
    std::string failing;
    for (const auto& name : hkit::symmetry::relation_names()) {
        const auto r = hkit::symmetry::verify_relation(ops, name);
        if (r.pass && r.residual == 0.0) ++exact_zero;
        else failing += " " + name;
    }
    const double t = seconds_since(t0);
    const int total = static_cast<int>(hkit::symmetry::relation_names().size());
    return {exact_zero == total && total == 10 && t < 60,
            std::to_string(exact_zero) + "/" + std::to_string(total) + " relations exactly zero, " + fmt(t) + " s" +
                (failing.empty() ? "" : "; failing:" + failing)};
}

Outcome casimir() {
    using namespace hkit::symmetry;
    const auto ops = build_operators(Units{});
    CasimirOptions opt;
    opt.test_fields = 3;
    const auto c2 = casimir_cleared_check(ops, Casimir::C2, opt);
    const auto c3 = casimir_cleared_check(ops, Casimir::C3, opt);
    const auto c4 = casimir_cleared_check(ops, Casimir::C4, opt);
    const bool ok = c2.pass && c2.residual == 0 && c3.pass && c3.residual == 0 && c4.pass &&
                    (c4.mode == hkit::CheckMode::Exact ? c4.residual == 0 : c4.residual < 1e-8);
    return {ok, "C2 residual " + fmt(c2.residual) + ", C3 residual " + fmt(c3.residual) + ", C4 (" +
                    hkit::mode_name(c4.mode) + ", 3 test fields) residual " + fmt(c4.residual)};
}

Outcome spectrum() {
    using namespace hkit::symmetry;
    const Units units{Rational(1), Rational(1), Rational(1)};
    int bad = 0, checked = 0;
    for (int twoT = 0; twoT <= 6; ++twoT) {
        const Rational T(twoT, 2);
        for (const auto& lv : energy_levels(T, 8, units)) {
            // N/2 must run through T, T+1, ...
            const Rational k = Rational(lv.N, 2) - T;
            bad += !(k.is_integer() && k.sign() >= 0);
            const Rational expect = Rational(-1, 2) / ((Rational(lv.N, 2) + Rational(2)) * (Rational(lv.N, 2) + Rational(2)));
            bad += lv.epsilon != expect;
            ++checked;
        }
    }
    const auto closure = duality_closure_range(40, {Rational(1), Rational(3, 2), Rational(2, 7)}, units);
    return {bad == 0 && closure.pass && closure.residual == 0,
            std::to_string(checked) + " levels for T = 0..3, " + std::to_string(bad) +
                " mismatches; closure N = 0..40 exact: " + (closure.pass ? "yes" : "no")};
}

Outcome radial() {
    using namespace hkit::radial;
    const auto t0 = std::chrono::steady_clock::now();
    auto osc = RadialProblem::oscillator(8, 0, 1);
    osc.levels = 3;
    const auto res = solve(osc);
    double osc_err = 0, map_err = 0;
    for (int n = 0; n < osc.levels; ++n) {
        const double exact = 2.0 * n + 4.0;  // ħω(N+4) with N = 2n
        osc_err = std::max(osc_err, std::abs(res.eigenvalues[n] - exact) / exact);
        const CoulombData mapped = duality_forward(res.eigenvalues[n], osc.omega);
        auto dual = dual_coulomb_problem(osc, res.eigenvalues[n]);
        dual.levels = n + 1;
        const auto coul = solve(dual);
        map_err = std::max(map_err, std::abs(mapped.epsilon - coul.eigenvalues[n]) / std::abs(coul.eigenvalues[n]));
    }
    const auto sub = substitution_residual_check(res, osc, 0);
    const double t = seconds_since(t0);
    const bool ok = osc_err < 1e-6 && map_err < 1e-6 && sub.pass && sub.residual < 1e-4 && t < 30;
    return {ok, "oscillator rel. err " + fmt(osc_err) + ", mapped vs Coulomb rel. err " + fmt(map_err) +
                    ", substitution residual " + fmt(sub.residual) + ", " + fmt(t) + " s"};
}

Outcome appendix_audit() {
    using namespace hkit::gauge;
    const auto derived = field_tensor(FieldSource::Definition);
    const auto table = field_tensor(FieldSource::AppendixTable);
    const auto diffs = compare_tensors(derived, table);
    int agreeing = 0;
    for (int a = 0; a < 3; ++a)
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) agreeing += derived(a, i, j) == table(a, i, j);
    std::ostringstream o;
    o << "Cartesian: " << agreeing << "/30 entries agree exactly, " << diffs.size() << " itemized:";
    for (const auto& d : diffs) o << " F^" << d.a << "_" << d.i << d.j << " derived " << d.expected << " vs printed " << d.found << ";";
    bool hyper_ok = false;
    for (const auto& row : hyperspherical_table_check(50, 1)) {
        if (row.mode == hkit::CheckMode::Audit) {
            hyper_ok = row.pass;
            o << " hyperspherical table: max |transformed - printed| = " << fmt(row.residual);
        }
    }
    // The itemized list is the deliverable; the criterion holds when every
    // entry is classified and the derived tensor meets criteria 2 and 3.
    const bool itemized = agreeing + static_cast<int>(diffs.size()) == 30;
    const bool derived_ok = field_identity().pass && self_duality().pass;
    o << "; derived tensor satisfies criteria 2-3: " << (derived_ok ? "yes" : "no");
    return {itemized && derived_ok && hyper_ok, o.str()};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"topological charge q = +1, q^a = 1/3 at (16,16,8,8), < 1 s", charge},
        {"F^a_ij F^b_ij = 4 delta_ab / r^4 exactly", field_identity},
        {"self-duality under the calibrated orientation", self_duality},
        {"Euler identities for D = 2, 4, 8", euler},
        {"gauge potential orthogonality, exact", gauge_orthogonality},
        {"operator algebra, ten relations exact, < 60 s", algebra},
        {"cleared Casimir identities C2, C3, C4", casimir},
        {"spectrum and duality closure N = 0..40", spectrum},
        {"radial duality D=8 oscillator <-> d=5 Coulomb, < 30 s", radial},
        {"appendix audit", appendix_audit},
    };
    int failed = 0, index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome out;
        try {
            out = run();
        } catch (const std::exception& e) {
            out = {false, std::string("threw: ") + e.what()};
        }
        failed += !out.pass;
        std::printf("%s criterion %d: %s -- %s\n", out.pass ? "PASS" : "FAIL", index, name, out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d acceptance criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
