#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "hkit/errors.hpp"
#include "hkit/radial/radial.hpp"

namespace hkit::radial {

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

CheckReport row(const std::string& relation, const std::string& anchor, double residual, double tol,
                const std::string& detail) {
    CheckReport c;
    c.suite = "radial";
    c.relation = relation;
    c.anchor = anchor;
    c.mode = CheckMode::Numeric;
    c.residual = residual;
    c.pass = residual <= tol;
    c.detail = detail;
    return c;
}

// Runs `body`, turning library errors into a failed row.
CheckReport guarded(const std::string& relation, const std::string& anchor, const std::function<CheckReport()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        CheckReport c = row(relation, anchor, INFINITY, 0, e.what());
        c.pass = false;
        return c;
    }
}

std::string fmt(double v) {
    std::ostringstream o;
    o.precision(12);
    o << v;
    return o.str();
}

CheckReport level_row(const RadialProblem& p, const std::string& label, const std::string& anchor, double tol) {
    return guarded(label, anchor, [&] {
        const EigenResult r = solve(p);
        double worst = 0;
        std::ostringstream det;
        for (int k = 0; k < p.levels; ++k) {
            const double exact = p.kind == RadialKind::Coulomb ? coulomb_level(p, k) : oscillator_level(p, k);
            worst = std::max(worst, rel(r.eigenvalues[static_cast<std::size_t>(k)], exact));
            det << (k ? ", " : "") << fmt(r.eigenvalues[static_cast<std::size_t>(k)]) << " vs " << fmt(exact);
        }
        det << " (max relative error)";
        return row(label, anchor, worst, tol, det.str());
    });
}

CheckReport duality_row(double D, double L, double omega, int n_points, double tol) {
    std::ostringstream label;
    label << "duality D=" << D << " L=" << L << " -> d=" << D / 2 + 1 << " l=" << L / 2 << ", omega=" << omega;
    return guarded(label.str(), "eq.3", [&] {
        RadialProblem osc = RadialProblem::oscillator(D, L, omega);
        osc.n_points = n_points;
        const EigenResult o = solve(osc);
        const auto mapped = duality_map(o, osc);
        double worst = 0;
        std::ostringstream det;
        for (int k = 0; k < osc.levels; ++k) {
            const auto K = static_cast<std::size_t>(k);
            worst = std::max(worst, rel(o.eigenvalues[K], oscillator_level(osc, k)));
            // Level k of the oscillator maps onto level k of the Coulomb problem at e² = E_k/4.
            RadialProblem c = dual_coulomb_problem(osc, o.eigenvalues[K]);
            c.levels = k + 1;
            const EigenResult cr = solve(c);
            const double eps = cr.eigenvalues[K];
            worst = std::max(worst, rel(eps, mapped[K].epsilon));
            det << (k ? "; " : "") << "E=" << fmt(o.eigenvalues[K]) << " e^2=" << fmt(mapped[K].e2)
                << " coulomb=" << fmt(eps) << " mapped=" << fmt(mapped[K].epsilon);
        }
        return row(label.str(), "eq.3", worst, tol, det.str());
    });
}

}  // namespace

CheckList radial_checks(const RadialCheckOptions& opt) {
    CheckList out;
    const double tol = opt.eigen_tolerance;
    auto with_grid = [&](RadialProblem p) {
        p.n_points = opt.n_points;
        p.tolerance = tol;
        return p;
    };

    out.push_back(level_row(with_grid(RadialProblem::oscillator(8, 0, 1)), "oscillator D=8 L=0 omega=1 levels", "eq.1", tol));
    out.push_back(level_row(with_grid(RadialProblem::oscillator(8, 2, 1)), "oscillator D=8 L=2 omega=1 levels", "eq.1", tol));
    out.push_back(level_row(with_grid(RadialProblem::oscillator(4, 0, 2)), "oscillator D=4 L=0 omega=2 levels", "eq.1", tol));
    out.push_back(level_row(with_grid(RadialProblem::coulomb(5, 0, 1)), "coulomb d=5 l=0 e^2=1 levels", "eq.2", tol));
    out.push_back(level_row(with_grid(RadialProblem::coulomb(5, 0.5, 1)), "coulomb d=5 l=1/2 e^2=1 levels", "eq.2", tol));
    out.push_back(level_row(with_grid(RadialProblem::coulomb(3, 0, 1)), "coulomb d=3 l=0 e^2=1 levels", "eq.2", tol));

    out.push_back(duality_row(8, 0, 1, opt.n_points, tol));
    out.push_back(duality_row(8, 2, 1, opt.n_points, tol));

    for (double L : {0.0, 2.0}) {
        std::ostringstream label;
        label << "substitution r = u^2, D=8 L=" << L << " ground state";
        out.push_back(guarded(label.str(), "sec.2", [&] {
            const RadialProblem p = with_grid(RadialProblem::oscillator(8, L, 1));
            SubstitutionOptions s;
            s.tolerance = opt.residual_tolerance;
            return substitution_residual_check(solve(p), p, 0, s);
        }));
    }
    out.push_back(guarded("negative control: epsilon off by 10% is rejected", "sec.2", [&] {
        const RadialProblem p = with_grid(RadialProblem::oscillator(8, 0, 1));
        SubstitutionOptions s;
        s.tolerance = opt.residual_tolerance;
        s.epsilon_scale = 1.1;
        CheckReport c = substitution_residual_check(solve(p), p, 0, s);
        c.relation = "negative control: epsilon off by 10% is rejected";
        c.pass = c.residual > 100 * opt.residual_tolerance;
        c.detail = "control residual must exceed " + fmt(100 * opt.residual_tolerance) + "; " + c.detail;
        return c;
    }));
    out.push_back(guarded("modified potential c0 + c1 u^2 + c2 u^4, substitution r = u^2", "sec.9", [&] {
        RadialProblem p = with_grid(RadialProblem::modified(8, 0, {0.5, 0.5, 0.05}));
        SubstitutionOptions s;
        s.tolerance = opt.residual_tolerance;
        CheckReport c = substitution_residual_check(solve(p), p, 0, s);
        c.relation = "modified potential c0 + c1 u^2 + c2 u^4, substitution r = u^2";
        c.anchor = "sec.9";
        return c;
    }));

    out.push_back(guarded("3-point stencil convergence order (oscillator ground state)", "eq.1", [&] {
        const double order = convergence_order(RadialProblem::oscillator(8, 0, 1), 200);
        CheckReport c = row("3-point stencil convergence order (oscillator ground state)", "eq.1",
                            std::abs(order - 2.0), 0.2, "observed order " + fmt(order) + ", accepted range [1.8, 2.2]");
        return c;
    }));
    out.push_back(guarded("oscillator level spacing 2 hbar omega at fixed L", "eq.1", [&] {
        const RadialProblem p = with_grid(RadialProblem::oscillator(8, 0, 1));
        const EigenResult r = solve(p);
        double worst = 0;
        for (std::size_t k = 1; k < r.eigenvalues.size(); ++k) {
            worst = std::max(worst, rel(r.eigenvalues[k] - r.eigenvalues[k - 1], 2 * p.hbar * p.omega));
        }
        return row("oscillator level spacing 2 hbar omega at fixed L", "eq.1", worst, tol, "max relative deviation");
    }));
    out.push_back(guarded("coulomb d=5 levels follow (n_r + l + 2)^-2", "eq.2", [&] {
        const RadialProblem p = with_grid(RadialProblem::coulomb(5, 0, 1));
        const EigenResult r = solve(p);
        double worst = 0;
        for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
            const double nu = static_cast<double>(k) + 2;
            worst = std::max(worst, rel(r.eigenvalues[k] * nu * nu, -0.5));
        }
        return row("coulomb d=5 levels follow (n_r + l + 2)^-2", "eq.2", worst, 1e-5, "max relative deviation of eps * (n_r+2)^2 from -1/2");
    }));
    return out;
}

}  // namespace hkit::radial
