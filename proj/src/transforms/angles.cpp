#include "hkit/transforms/angles.hpp"

#include <cmath>
#include <numbers>

#include "hkit/errors.hpp"

namespace hkit::transforms {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap(double v, double period) {
    double m = std::fmod(v, period);
    if (m < 0) m += period;
    if (m >= period) m -= period;
    return m;
}

// Angles from the phases of two planar pairs: α = φ_a + s·φ_b, γ = 2φ_b − α on the 4π lift.
AngleTriple from_pairs(double phi_first, double phi_second, double rho_first_sq, double rho_second_sq, int sign) {
    AngleTriple t;
    t.alpha = wrap(phi_second + sign * phi_first, 2 * kPi);
    t.gamma = wrap(2 * phi_second - t.alpha, 4 * kPi);
    t.beta = 2 * std::atan(std::sqrt(rho_first_sq / rho_second_sq));
    return t;
}

}  // namespace

AngleTriple body_angles(const Point8& u) {
    const double r1 = u[0] * u[0] + u[1] * u[1];
    const double r2 = u[2] * u[2] + u[3] * u[3];
    if (r1 == 0 || r2 == 0) throw UndefinedAngle("body angles need u0²+u1² > 0 and u2²+u3² > 0");
    return from_pairs(std::atan2(u[1], u[0]), std::atan2(u[3], u[2]), r1, r2, -1);
}

AngleTriple space_angles(const Point5& x) {
    const double r1 = x[1] * x[1] + x[2] * x[2];
    const double r2 = x[3] * x[3] + x[4] * x[4];
    if (r1 == 0 || r2 == 0) throw UndefinedAngle("space angles need x1²+x2² > 0 and x3²+x4² > 0");
    return from_pairs(std::atan2(x[1], x[2]), std::atan2(x[3], x[4]), r1, r2, 1);
}

HyperSpherical hyperspherical(const Point5& x) {
    double s = 0;
    for (double v : x) s += v * v;
    const double r = std::sqrt(s);
    if (r == 0) throw ZeroRadius("hyperspherical coordinates undefined at the origin");
    const AngleTriple a = space_angles(x);
    HyperSpherical h;
    h.r = r;
    h.theta = std::atan2(std::sqrt(x[1] * x[1] + x[2] * x[2] + x[3] * x[3] + x[4] * x[4]), x[0]);
    h.alpha = a.alpha;
    h.beta = a.beta;
    h.gamma = a.gamma;
    return h;
}

Point5 hyperspherical_inverse(const HyperSpherical& h) {
    const double rs = h.r * std::sin(h.theta);
    const double p1 = (h.alpha - h.gamma) / 2;
    const double p2 = (h.alpha + h.gamma) / 2;
    const double s = rs * std::sin(h.beta / 2);
    const double c = rs * std::cos(h.beta / 2);
    return {h.r * std::cos(h.theta), s * std::sin(p1), s * std::cos(p1), c * std::sin(p2), c * std::cos(p2)};
}

std::array<std::array<double, 5>, 5> hyperspherical_jacobian(const HyperSpherical& h) {
    const double st = std::sin(h.theta), ct = std::cos(h.theta);
    const double sb = std::sin(h.beta / 2), cb = std::cos(h.beta / 2);
    const double p1 = (h.alpha - h.gamma) / 2, p2 = (h.alpha + h.gamma) / 2;
    const double s1 = std::sin(p1), c1 = std::cos(p1), s2 = std::sin(p2), c2 = std::cos(p2);
    const double r = h.r;
    std::array<std::array<double, 5>, 5> J{};
    // x0 = r cosθ
    J[0] = {ct, -r * st, 0, 0, 0};
    // x1 = r sinθ sin(β/2) sin p1, x2 = ... cos p1
    J[1] = {st * sb * s1, r * ct * sb * s1, r * st * cb * s1 / 2, r * st * sb * c1 / 2, -r * st * sb * c1 / 2};
    J[2] = {st * sb * c1, r * ct * sb * c1, r * st * cb * c1 / 2, -r * st * sb * s1 / 2, r * st * sb * s1 / 2};
    // x3 = r sinθ cos(β/2) sin p2, x4 = ... cos p2
    J[3] = {st * cb * s2, r * ct * cb * s2, -r * st * sb * s2 / 2, r * st * cb * c2 / 2, r * st * cb * c2 / 2};
    J[4] = {st * cb * c2, r * ct * cb * c2, -r * st * sb * c2 / 2, -r * st * cb * s2 / 2, -r * st * cb * s2 / 2};
    return J;
}

}  // namespace hkit::transforms
