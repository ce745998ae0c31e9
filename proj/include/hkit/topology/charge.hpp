#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "hkit/check.hpp"
#include "hkit/gauge/hyperspherical.hpp"

namespace hkit::topology {

using gauge::HyperTensor;
using transforms::HyperSpherical;

using CartesianTensor = std::array<std::array<std::array<double, 5>, 5>, 3>;

/// Node counts: Gauss–Legendre in θ and β, uniform in α ∈ [0,2π) and γ ∈ [0,4π).
struct QuadratureSpec {
    int n_theta = 16;
    int n_beta = 16;
    int n_alpha = 8;
    int n_gamma = 8;
    double radius = 1.0;
};

struct ChargeResult {
    double q = 0;
    std::array<double, 3> q_per_component{};
    double estimated_error = 0;
};

/// Cartesian F^a at x from the closed form, in floating point.
CartesianTensor closed_form_field(const exact::Point5& x);

/// f̄_ik = (∂x_m/∂q_i)(∂x_n/∂q_k) f_mn with the Jacobian of the
/// hyperspherical chart obtained by forward-mode differentiation.
HyperTensor jacobian_tensor_transform(const CartesianTensor& f, const HyperSpherical& q);

/// Σ_a (or one component a in 0..2) *F^{aμν} F^a_{μν}; throws SingularMetric.
double charge_density(const HyperSpherical& q, std::optional<int> a = std::nullopt);

/// Quadrature of q and q^a; the error estimate compares with doubled node counts.
ChargeResult topological_charge(const QuadratureSpec& spec, bool estimate_error = true);

/// q = 1 and q^a = 1/3 at the given nodes, independence of the radius,
/// the pointwise density r⁴ *F·F = 12, and agreement of the dual-number
/// Jacobian path with the analytic one at seeded random points.
CheckList charge_checks(const QuadratureSpec& spec = {}, bool estimate_error = false, std::uint64_t seed = 1);

}  // namespace hkit::topology
