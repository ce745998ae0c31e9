#include "hkit/radial/radial.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_spline.h>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <string>

#include "hkit/errors.hpp"

namespace hkit::radial {

namespace {

constexpr double kDecayMargin = 20.0;  // ∫κ dx beyond the turning point

bool is_half_integer(double v) { return std::abs(2 * v - std::round(2 * v)) < 1e-12; }

void validate(const RadialProblem& p) {
    if (p.n_points < 64) throw ConfigError("n_points must be at least 64");
    if (p.levels < 1) throw ConfigError("levels must be at least 1");
    if (!(p.mass > 0) || !(p.hbar > 0)) throw ConfigError("mass and hbar must be positive");
    if (p.ang < 0) throw ConfigError("angular quantum number must be non-negative");
    if (!(p.tolerance > 0)) throw ConfigError("tolerance must be positive");
    switch (p.kind) {
        case RadialKind::Oscillator:
            if (!(p.dim > 2)) throw ConfigError("oscillator dimension D must exceed 2");
            if (p.ang != std::floor(p.ang)) throw ConfigError("oscillator L must be an integer");
            if (!(p.omega > 0)) throw ConfigError("omega must be positive for a bound spectrum");
            break;
        case RadialKind::Coulomb:
            if (!(p.dim > 1)) throw ConfigError("Coulomb dimension d must exceed 1");
            if (!is_half_integer(p.ang)) throw ConfigError("Coulomb l must be an integer or half-integer");
            if (!(p.e2 > 0)) throw ConfigError("e^2 must be positive");
            break;
        case RadialKind::Modified:
            if (!(p.dim > 2)) throw ConfigError("oscillator dimension D must exceed 2");
            if (p.ang != std::floor(p.ang)) throw ConfigError("oscillator L must be an integer");
            if (p.coeffs.size() < 2) throw ConfigError("modified potential needs at least c0 and c1");
            if (!(p.coeffs.back() > 0)) throw ConfigError("leading coefficient of the modified potential must be positive");
            break;
    }
}

double effective(const RadialProblem& p, double x) {
    return p.hbar * p.hbar * p.centrifugal() / (2 * p.mass * x * x) + p.potential(x);
}

// Highest requested level, used only to size the grid.
double level_estimate(const RadialProblem& p) {
    const int top = p.levels - 1;
    switch (p.kind) {
        case RadialKind::Oscillator: return oscillator_level(p, top);
        case RadialKind::Coulomb: return coulomb_level(p, top);
        case RadialKind::Modified: break;
    }
    // Refine on a coarse grid until the domain stops growing.
    const double c1 = p.coeffs[1];
    const double w = c1 > 0 ? std::sqrt(2 * c1 / p.mass) : 1.0;
    double E = p.coeffs[0] + p.hbar * w * (2 * top + p.ang + p.dim / 2);
    double prev_extent = 0;
    for (int it = 0; it < 8; ++it) {
        double ext = automatic_extent(p, E);
        if (prev_extent > 0 && std::abs(ext - prev_extent) < 1e-3 * ext) break;
        prev_extent = ext;
        E = solve_on_grid(p, 1.2 * ext, 1024, p.levels, false).eigenvalues.back();
    }
    return E;
}

void orient(std::vector<double>& v) {
    double peak = 0;
    for (double a : v) peak = std::max(peak, std::abs(a));
    for (double a : v) {
        if (std::abs(a) > 1e-3 * peak) {
            if (a < 0) {
                for (double& b : v) b = -b;
            }
            return;
        }
    }
}

double discrete_residual(const RadialProblem& p, const GridSolution& g, std::size_t k) {
    const std::size_t n = g.grid.size();
    const double h = g.grid[1] - g.grid[0];
    const double t = p.hbar * p.hbar / (2 * p.mass * h * h);
    const auto& v = g.eigenvectors[k];
    double num = 0, den = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double left = i > 0 ? v[i - 1] : 0.0;
        const double right = i + 1 < n ? v[i + 1] : 0.0;
        const double hv = -t * (left + right) + (2 * t + effective(p, g.grid[i])) * v[i];
        const double r = hv - g.eigenvalues[k] * v[i];
        num += r * r;
        den += v[i] * v[i];
    }
    return std::sqrt(num / den);
}

}  // namespace

const char* kind_name(RadialKind k) {
    switch (k) {
        case RadialKind::Oscillator: return "oscillator";
        case RadialKind::Coulomb: return "coulomb";
        case RadialKind::Modified: return "modified";
    }
    return "?";
}

RadialProblem RadialProblem::oscillator(double D, double L, double omega) {
    RadialProblem p;
    p.kind = RadialKind::Oscillator;
    p.dim = D;
    p.ang = L;
    p.omega = omega;
    return p;
}

RadialProblem RadialProblem::coulomb(double d, double l, double e2) {
    RadialProblem p;
    p.kind = RadialKind::Coulomb;
    p.dim = d;
    p.ang = l;
    p.e2 = e2;
    return p;
}

RadialProblem RadialProblem::modified(double D, double L, std::vector<double> coeffs) {
    RadialProblem p;
    p.kind = RadialKind::Modified;
    p.dim = D;
    p.ang = L;
    p.coeffs = std::move(coeffs);
    return p;
}

double RadialProblem::centrifugal() const {
    return ang * (ang + dim - 2) + (dim - 1) * (dim - 3) / 4;
}

double RadialProblem::potential(double x) const {
    switch (kind) {
        case RadialKind::Oscillator: return 0.5 * mass * omega * omega * x * x;
        case RadialKind::Coulomb: return -e2 / x;
        case RadialKind::Modified: {
            double v = 0, u2 = x * x, pw = 1;
            for (double c : coeffs) {
                v += c * pw;
                pw *= u2;
            }
            return v;
        }
    }
    return 0;
}

bool RadialProblem::formal_dual() const {
    return kind != RadialKind::Coulomb && std::abs(dim / 2 - std::round(dim / 2)) > 1e-12;
}

GridSolution solve_on_grid(const RadialProblem& p, double extent, int n, int levels, bool vectors) {
    if (n < levels) throw ConfigError("grid has fewer nodes than requested levels");
    const double h = extent / (n + 1);
    const double t = p.hbar * p.hbar / (2 * p.mass * h * h);
    GridSolution g;
    g.grid.resize(static_cast<std::size_t>(n));
    std::vector<double> diag(static_cast<std::size_t>(n)), off(static_cast<std::size_t>(n), -t);
    for (int i = 0; i < n; ++i) {
        const double x = (i + 1) * h;
        g.grid[static_cast<std::size_t>(i)] = x;
        diag[static_cast<std::size_t>(i)] = 2 * t + effective(p, x);
    }
    lapack_int found = 0;
    std::vector<double> w(static_cast<std::size_t>(n));
    std::vector<double> z(vectors ? static_cast<std::size_t>(n) * static_cast<std::size_t>(levels) : 1);
    std::vector<lapack_int> support(2 * static_cast<std::size_t>(levels));
    const lapack_int info =
        LAPACKE_dstevr(LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'I', n, diag.data(), off.data(), 0.0, 0.0, 1, levels,
                       0.0, &found, w.data(), z.data(), n, support.data());
    if (info != 0 || found != levels) {
        throw GridTooCoarse("tridiagonal eigensolver failed (info " + std::to_string(info) + ")");
    }
    g.eigenvalues.assign(w.begin(), w.begin() + levels);
    if (vectors) {
        for (int k = 0; k < levels; ++k) {
            std::vector<double> v(z.begin() + static_cast<std::ptrdiff_t>(k) * n,
                                  z.begin() + static_cast<std::ptrdiff_t>(k + 1) * n);
            orient(v);
            g.eigenvectors.push_back(std::move(v));
        }
    }
    return g;
}

double automatic_extent(const RadialProblem& p, double E) {
    constexpr double lo = 1e-6, hi = 1e8, ratio = 1.001;
    double turning = -1;
    for (double x = lo; x < hi; x *= ratio) {
        if (effective(p, x) < E) turning = x * ratio;
    }
    if (turning < 0) throw ConfigError("energy lies below the effective potential everywhere");
    if (effective(p, hi) < E) throw ConfigError("level is not bound: no outer turning point");
    double action = 0, x = turning, prev = 0;
    while (action < kDecayMargin && x < hi) {
        const double nx = x * ratio;
        const double k = std::sqrt(std::max(0.0, 2 * p.mass * (effective(p, nx) - E))) / p.hbar;
        action += 0.5 * (k + prev) * (nx - x);
        prev = k;
        x = nx;
    }
    return std::max(1.5 * turning, x);
}

EigenResult solve(const RadialProblem& p) {
    validate(p);
    const double extent = p.extent > 0 ? p.extent : automatic_extent(p, level_estimate(p));
    const int n0 = p.n_points, n1 = 2 * n0 + 1, n2 = 2 * n1 + 1;
    const auto g0 = solve_on_grid(p, extent, n0, p.levels, false);
    const auto g1 = solve_on_grid(p, extent, n1, p.levels, false);
    auto g2 = solve_on_grid(p, extent, n2, p.levels, true);

    EigenResult r;
    r.kind = p.kind;
    r.extent = extent;
    r.n_points = p.n_points;
    r.formal = p.formal_dual();
    std::ostringstream bad;
    for (int k = 0; k < p.levels; ++k) {
        const auto K = static_cast<std::size_t>(k);
        const double r1 = (4 * g1.eigenvalues[K] - g0.eigenvalues[K]) / 3;
        const double r2 = (4 * g2.eigenvalues[K] - g1.eigenvalues[K]) / 3;
        const double err = std::abs(r2 - r1) / std::max(std::abs(r2), 1e-300);
        r.eigenvalues.push_back(r2);
        r.raw_eigenvalues.push_back(g2.eigenvalues[K]);
        r.error_estimates.push_back(err);
        r.residual_norms.push_back(discrete_residual(p, g2, K));
        if (err > p.tolerance) bad << " level " << k << " (estimated error " << err << ")";
    }
    if (!bad.str().empty()) {
        throw GridTooCoarse(std::string(kind_name(p.kind)) + " grid of " + std::to_string(p.n_points) +
                            " points too coarse for tolerance:" + bad.str());
    }
    r.grid = std::move(g2.grid);
    r.eigenvectors = std::move(g2.eigenvectors);
    return r;
}

EigenResult solve_oscillator(const RadialProblem& p) {
    if (p.kind == RadialKind::Coulomb) throw ConfigError("solve_oscillator needs an oscillator-type problem");
    return solve(p);
}

EigenResult solve_coulomb(const RadialProblem& p) {
    if (p.kind != RadialKind::Coulomb) throw ConfigError("solve_coulomb needs a Coulomb problem");
    return solve(p);
}

double oscillator_level(const RadialProblem& p, int n) { return p.hbar * p.omega * (2 * n + p.ang + p.dim / 2); }

double coulomb_level(const RadialProblem& p, int n) {
    const double nu = n + p.ang + (p.dim - 1) / 2;
    return -p.mass * p.e2 * p.e2 / (2 * p.hbar * p.hbar * nu * nu);
}

CoulombData duality_forward(double E, double omega, double mass) { return {-mass * omega * omega / 8, E / 4}; }

OscillatorData duality_backward(double epsilon, double e2, double mass) {
    if (epsilon > 0) throw ConfigError("backward duality needs a non-positive Coulomb energy");
    return {4 * e2, std::sqrt(-8 * epsilon / mass)};
}

RadialProblem dual_coulomb_problem(const RadialProblem& osc, double E) {
    if (osc.kind != RadialKind::Oscillator) throw ConfigError("dual problem defined for the oscillator kind");
    RadialProblem c = RadialProblem::coulomb(osc.dim / 2 + 1, osc.ang / 2, E / 4);
    c.mass = osc.mass;
    c.hbar = osc.hbar;
    c.n_points = osc.n_points;
    c.tolerance = osc.tolerance;
    return c;
}

std::vector<CoulombData> duality_map(const EigenResult& osc, const RadialProblem& p) {
    std::vector<CoulombData> out;
    for (double E : osc.eigenvalues) out.push_back(duality_forward(E, p.omega, p.mass));
    return out;
}

AnsatzValues modified_ansatz(double c0, double c1, double E) {
    const double e2 = (E - c0) / 4;
    return {-c1 / 4, e2, e2 == 0.0};
}

CheckReport substitution_residual_check(const EigenResult& osc, const RadialProblem& p, int level,
                                        const SubstitutionOptions& opt) {
    if (p.kind == RadialKind::Coulomb) throw ConfigError("substitution check starts from an oscillator-type solution");
    if (level < 0 || static_cast<std::size_t>(level) >= osc.eigenvectors.size()) {
        throw ConfigError("no eigenvector for level " + std::to_string(level));
    }
    if (opt.r_points < 16) throw ConfigError("r_points must be at least 16");
    const double E = osc.eigenvalues[static_cast<std::size_t>(level)];
    double epsilon = 0, e2 = 0;
    std::vector<double> W;  // cₙ, n ≥ 2
    if (p.kind == RadialKind::Oscillator) {
        const CoulombData c = duality_forward(E, p.omega, p.mass);
        epsilon = c.epsilon;
        e2 = c.e2;
    } else {
        const AnsatzValues a = modified_ansatz(p.coeffs[0], p.coeffs[1], E);
        epsilon = a.epsilon;
        e2 = a.e2;
        W.assign(p.coeffs.begin() + 2, p.coeffs.end());
    }
    epsilon *= opt.epsilon_scale;

    const auto& u = osc.grid;
    const auto& chi = osc.eigenvectors[static_cast<std::size_t>(level)];
    const double r_max = osc.extent * osc.extent;
    const double near_origin = std::sqrt(r_max / 100);
    if (std::count_if(u.begin(), u.end(), [&](double x) { return x < near_origin; }) < 4) {
        throw InterpolationFailure("oscillator grid too sparse near the origin to resample onto r = u^2");
    }
    std::vector<double> uu{0.0}, cc{0.0};
    uu.insert(uu.end(), u.begin(), u.end());
    cc.insert(cc.end(), chi.begin(), chi.end());
    uu.push_back(osc.extent);
    cc.push_back(0.0);
    std::unique_ptr<gsl_spline, decltype(&gsl_spline_free)> spline(gsl_spline_alloc(gsl_interp_cspline, uu.size()),
                                                                   &gsl_spline_free);
    std::unique_ptr<gsl_interp_accel, decltype(&gsl_interp_accel_free)> acc(gsl_interp_accel_alloc(),
                                                                           &gsl_interp_accel_free);
    if (gsl_spline_init(spline.get(), uu.data(), cc.data(), uu.size()) != GSL_SUCCESS) {
        throw InterpolationFailure("spline construction failed");
    }

    // Dual reduced function χ_d(r) = r^{1/4} χ(√r).
    const int n = opt.r_points;
    const double h = r_max / (n + 1);
    std::vector<double> f(static_cast<std::size_t>(n) + 2, 0.0);
    for (int j = 1; j <= n; ++j) {
        const double r = j * h;
        double v = 0;
        if (gsl_spline_eval_e(spline.get(), std::sqrt(r), acc.get(), &v) != GSL_SUCCESS) {
            throw InterpolationFailure("spline evaluation failed at r = " + std::to_string(r));
        }
        f[static_cast<std::size_t>(j)] = std::pow(r, 0.25) * v;
    }
    const double d = p.dim / 2 + 1, l = p.ang / 2;
    const double cent = l * (l + d - 2) + (d - 1) * (d - 3) / 4;
    const double t = p.hbar * p.hbar / (2 * p.mass);
    std::vector<double> res(static_cast<std::size_t>(n)), norm(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const double r = j * h;
        double w = 0, pw = r;
        for (double c : W) {
            w += c * pw;
            pw *= r;
        }
        const double v = t * cent / (r * r) - e2 / r + w / 4;
        const auto J = static_cast<std::size_t>(j);
        const double lap = (f[J + 1] - 2 * f[J] + f[J - 1]) / (h * h);
        res[J - 1] = -t * lap + (v - epsilon) * f[J];
        norm[J - 1] = f[J];
    }
    auto l2 = [](const std::vector<double>& a) {
        double s = 0;
        for (double x : a) s += x * x;
        return std::sqrt(s);
    };
    CheckReport c;
    c.suite = "radial";
    c.anchor = "sec.2";
    c.mode = CheckMode::Numeric;
    std::ostringstream rel;
    rel << "substitution r = u^2, D=" << p.dim << " L=" << p.ang << " level " << level;
    if (opt.epsilon_scale != 1.0) rel << ", epsilon scaled by " << opt.epsilon_scale;
    c.relation = rel.str();
    c.residual = l2(res) / (std::abs(epsilon) * l2(norm));
    c.pass = c.residual < opt.tolerance;
    std::ostringstream det;
    det << "dual d=" << d << " l=" << l << " e^2=" << e2 << " epsilon=" << epsilon << "; relative residual over " << n
        << " r nodes";
    if (p.formal_dual()) det << "; odd D, dual dimension is formal";
    c.detail = det.str();
    return c;
}

double convergence_order(const RadialProblem& p, int n) {
    validate(p);
    RadialProblem q = p;
    q.levels = 1;
    const double exact = p.kind == RadialKind::Coulomb ? coulomb_level(q, 0) : oscillator_level(q, 0);
    if (p.kind == RadialKind::Modified) throw ConfigError("no closed-form level for the modified kind");
    const double extent = p.extent > 0 ? p.extent : automatic_extent(q, exact);
    const double e1 = std::abs(solve_on_grid(q, extent, n, 1, false).eigenvalues[0] - exact);
    const double e2 = std::abs(solve_on_grid(q, extent, 2 * n + 1, 1, false).eigenvalues[0] - exact);
    return std::log2(e1 / e2);
}

}  // namespace hkit::radial
