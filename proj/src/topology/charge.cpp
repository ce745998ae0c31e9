#include "hkit/topology/charge.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "hkit/errors.hpp"
#include "hkit/topology/dual_number.hpp"

namespace hkit::topology {

namespace {

constexpr double kPi = std::numbers::pi;

using D5 = Dual<5>;

std::array<D5, 5> inverse_chart(const std::array<D5, 5>& q) {
    const D5& r = q[0];
    const D5& th = q[1];
    const D5 half_b = q[2] / 2.0;
    const D5 p1 = (q[3] - q[4]) / 2.0;
    const D5 p2 = (q[3] + q[4]) / 2.0;
    const D5 rs = r * sin(th);
    const D5 s = rs * sin(half_b);
    const D5 c = rs * cos(half_b);
    return {r * cos(th), s * sin(p1), s * cos(p1), c * sin(p2), c * cos(p2)};
}

double pairwise_sum(const double* v, std::size_t n) {
    if (n <= 8) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

struct GLRule {
    std::vector<double> x, w;
};

GLRule gauss_legendre(int n, double a, double b) {
    std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> t(
        gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n)), gsl_integration_glfixed_table_free);
    GLRule r;
    for (int i = 0; i < n; ++i) {
        double xi = 0, wi = 0;
        gsl_integration_glfixed_point(a, b, static_cast<std::size_t>(i), &xi, &wi, t.get());
        r.x.push_back(xi);
        r.w.push_back(wi);
    }
    return r;
}

ChargeResult integrate(const QuadratureSpec& s) {
    if (s.n_theta < 2 || s.n_beta < 2 || s.n_alpha < 2 || s.n_gamma < 2) {
        throw ConfigError("quadrature node counts must be at least 2");
    }
    const GLRule th = gauss_legendre(s.n_theta, 0, kPi);
    const GLRule be = gauss_legendre(s.n_beta, 0, kPi);
    const double wa = 2 * kPi / s.n_alpha, wg = 4 * kPi / s.n_gamma;
    const double r4 = std::pow(s.radius, 4);
    const int sigma = gauge::calibrated_orientation();
    std::array<std::vector<double>, 3> parts;
    for (int i = 0; i < s.n_theta; ++i) {
        for (int j = 0; j < s.n_beta; ++j) {
            const double measure =
                r4 / 8 * std::pow(std::sin(th.x[i]), 3) * std::sin(be.x[j]) * th.w[i] * be.w[j] * wa * wg;
            for (int k = 0; k < s.n_alpha; ++k) {
                for (int l = 0; l < s.n_gamma; ++l) {
                    const HyperSpherical q{s.radius, th.x[i], be.x[j], k * 2 * kPi / s.n_alpha,
                                           l * 4 * kPi / s.n_gamma};
                    const auto F = jacobian_tensor_transform(closed_form_field(transforms::hyperspherical_inverse(q)), q);
                    const auto dual = gauge::hodge_dual(F, q, sigma);
                    for (int a = 0; a < 3; ++a) {
                        double dens = 0;
                        for (int m = 0; m < 4; ++m) {
                            for (int n = 0; n < 4; ++n) dens += dual.dual[a][m][n] * F[a][m + 1][n + 1];
                        }
                        parts[a].push_back(dens * measure);
                    }
                }
            }
        }
    }
    ChargeResult res;
    const double norm = 1.0 / (32 * kPi * kPi);
    for (int a = 0; a < 3; ++a) res.q_per_component[a] = norm * pairwise_sum(parts[a].data(), parts[a].size());
    res.q = res.q_per_component[0] + res.q_per_component[1] + res.q_per_component[2];
    return res;
}

}  // namespace

CartesianTensor closed_form_field(const exact::Point5& x) {
    const auto A = gauge::potential_at(exact::Chart::Plus, x);
    const auto& tau = gauge::tau_matrices();
    double s = 0;
    for (double v : x) s += v * v;
    const double r = std::sqrt(s);
    CartesianTensor F{};
    for (int a = 0; a < 3; ++a) {
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                const double xi = x[i] + (i == 0 ? r : 0.0);
                const double xj = x[j] + (j == 0 ? r : 0.0);
                // −2iτ is real: τ entries are imaginary.
                const double tau_term = 2 * tau[a][i][j].im().to_double();
                F[a][i][j] = (xj * A[a][i] - xi * A[a][j] + tau_term) / (r * r);
            }
        }
    }
    return F;
}

HyperTensor jacobian_tensor_transform(const CartesianTensor& f, const HyperSpherical& q) {
    const auto qa = q.as_array();
    std::array<D5, 5> vars;
    for (int k = 0; k < 5; ++k) vars[k] = D5::variable(qa[k], k);
    const auto x = inverse_chart(vars);
    HyperTensor out{};
    for (int a = 0; a < 3; ++a) {
        for (int i = 0; i < 5; ++i) {
            for (int k = i + 1; k < 5; ++k) {
                double s = 0;
                for (int m = 0; m < 5; ++m) {
                    for (int n = 0; n < 5; ++n) s += x[m].d[i] * x[n].d[k] * f[a][m][n];
                }
                out[a][i][k] = s;
                out[a][k][i] = -s;
            }
        }
    }
    return out;
}

double charge_density(const HyperSpherical& q, std::optional<int> a) {
    const auto F = jacobian_tensor_transform(closed_form_field(transforms::hyperspherical_inverse(q)), q);
    const auto dual = gauge::hodge_dual(F, q, gauge::calibrated_orientation());
    double total = 0;
    for (int c = 0; c < 3; ++c) {
        if (a && *a != c) continue;
        for (int m = 0; m < 4; ++m) {
            for (int n = 0; n < 4; ++n) total += dual.dual[c][m][n] * F[c][m + 1][n + 1];
        }
    }
    return total;
}

ChargeResult topological_charge(const QuadratureSpec& spec, bool estimate_error) {
    ChargeResult res = integrate(spec);
    if (estimate_error) {
        QuadratureSpec fine = spec;
        fine.n_theta *= 2;
        fine.n_beta *= 2;
        fine.n_alpha *= 2;
        fine.n_gamma *= 2;
        res.estimated_error = std::abs(integrate(fine).q - res.q);
    }
    return res;
}

CheckList charge_checks(const QuadratureSpec& spec, bool estimate_error, std::uint64_t seed) {
    CheckList out;
    auto row = [&](const std::string& relation, const std::string& anchor, double residual, double tol,
                   const std::string& detail) {
        out.push_back({"charge", relation, anchor, CheckMode::Numeric, residual, residual <= tol, detail});
    };
    std::ostringstream nodes;
    nodes << "nodes (" << spec.n_theta << "," << spec.n_beta << "," << spec.n_alpha << "," << spec.n_gamma << ")";

    const ChargeResult res = topological_charge(spec, false);
    std::ostringstream det;
    det.precision(17);
    det << nodes.str() << ", q = " << res.q;
    row("topological charge q = +1", "sec.6", std::abs(res.q - 1), 1e-10, det.str());
    for (int a = 0; a < 3; ++a) {
        std::ostringstream d;
        d.precision(17);
        d << nodes.str() << ", q^" << a + 1 << " = " << res.q_per_component[static_cast<std::size_t>(a)];
        row("component charge q^" + std::to_string(a + 1) + " = 1/3", "sec.6",
            std::abs(res.q_per_component[static_cast<std::size_t>(a)] - 1.0 / 3), 1e-10, d.str());
    }
    if (estimate_error) {
        const ChargeResult fine = topological_charge(spec, true);
        row("quadrature error estimate (doubled nodes)", "sec.6", fine.estimated_error, 1e-10,
            "|q(2n) - q(n)| with every node count doubled");
    }
    {
        QuadratureSpec other = spec;
        other.radius = 7.0 / 3;
        const ChargeResult r2 = topological_charge(other, false);
        row("q independent of the sphere radius (r = 7/3)", "sec.6", std::abs(r2.q - 1), 1e-10,
            nodes.str() + " at radius 7/3");
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double dens_worst = 0, jac_worst = 0;
    for (int s = 0; s < 20; ++s) {
        HyperSpherical q;
        q.r = 0.5 + 2 * U(rng);
        q.theta = 0.2 + 2.6 * U(rng);
        q.beta = 0.2 + 2.6 * U(rng);
        q.alpha = 2 * kPi * U(rng);
        q.gamma = 4 * kPi * U(rng);
        const double r4 = q.r * q.r * q.r * q.r;
        dens_worst = std::max(dens_worst, std::abs(charge_density(q) * r4 - 12));
        const HyperTensor a = jacobian_tensor_transform(closed_form_field(transforms::hyperspherical_inverse(q)), q);
        const HyperTensor b = gauge::hyperspherical_field_tensor(gauge::HyperSource::Transformed, q);
        for (int c = 0; c < 3; ++c) {
            for (int i = 0; i < 5; ++i) {
                for (int k = 0; k < 5; ++k) jac_worst = std::max(jac_worst, std::abs(a[c][i][k] - b[c][i][k]));
            }
        }
    }
    row("pointwise density r^4 *F.F = 12", "eq.12", dens_worst / 12, 1e-10, "20 random regular points, relative");
    row("dual-number Jacobian of closed-form F vs analytic Jacobian of definition F", "sec.6", jac_worst, 1e-10,
        "20 random regular points, max entry difference");
    return out;
}

}  // namespace hkit::topology
