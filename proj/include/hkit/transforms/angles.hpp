#pragma once

#include <array>

#include "hkit/exact/scalar_expr.hpp"
#include "hkit/transforms/maps.hpp"

namespace hkit::transforms {

using exact::Point5;

/// α ∈ [0,2π), β ∈ [0,π], γ ∈ [0,4π).
struct AngleTriple {
    double alpha = 0;
    double beta = 0;
    double gamma = 0;
};

/// r ≥ 0, θ ∈ [0,π] and the fiber angles.
struct HyperSpherical {
    double r = 0;
    double theta = 0;
    double beta = 0;
    double alpha = 0;
    double gamma = 0;

    /// Ordered as (r, θ, β, α, γ).
    std::array<double, 5> as_array() const { return {r, theta, beta, alpha, gamma}; }
    static HyperSpherical from_array(const std::array<double, 5>& q) { return {q[0], q[1], q[2], q[3], q[4]}; }
};

/// Fiber angles of u ∈ ℝ⁸; throws UndefinedAngle when u0²+u1² or u2²+u3² vanishes.
AngleTriple body_angles(const Point8& u);

/// Angles of x ∈ ℝ⁵; throws UndefinedAngle when x1²+x2² or x3²+x4² vanishes.
AngleTriple space_angles(const Point5& x);

/// Throws ZeroRadius at the origin, UndefinedAngle on the angular axes.
HyperSpherical hyperspherical(const Point5& x);
Point5 hyperspherical_inverse(const HyperSpherical& h);

/// ∂x_m/∂q_k with q = (r, θ, β, α, γ).
std::array<std::array<double, 5>, 5> hyperspherical_jacobian(const HyperSpherical& h);

}  // namespace hkit::transforms
