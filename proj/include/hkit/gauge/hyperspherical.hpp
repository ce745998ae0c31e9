#pragma once

#include <array>
#include <cstdint>

#include "hkit/check.hpp"
#include "hkit/gauge/field_tensor.hpp"
#include "hkit/transforms/angles.hpp"

namespace hkit::gauge {

using transforms::HyperSpherical;

/// Numeric F^a over (r, θ, β, α, γ).
using HyperTensor = std::array<std::array<std::array<double, 5>, 5>, 3>;
/// Angular block over (θ, β, α, γ).
using AngularBlock = std::array<std::array<double, 4>, 4>;

enum class HyperSource { Transformed, AppendixTable };

/// Cartesian F^a at x from the exact definition-built tensor (A-chart).
std::array<std::array<std::array<double, 5>, 5>, 3> cartesian_field_at(const Point5& x);

/// Transformed: Jᵀ F J with the analytic Jacobian.  AppendixTable: the
/// printed trigonometric components (F_r· set to zero).
HyperTensor hyperspherical_field_tensor(HyperSource source, const HyperSpherical& q);

/// Induced metric of the r = const surface over (θ, β, α, γ).
AngularBlock induced_metric(const HyperSpherical& q);

struct DualResult {
    std::array<AngularBlock, 3> dual;    // *F^{μν}
    std::array<AngularBlock, 3> raised;  // F^{μν}
    double residual = 0;                 // max |*F − F|
};

/// *F^{μν} = (σ/(2√g)) ε^{μνρσ} F_{ρσ}; throws SingularMetric where the
/// induced metric degenerates.
DualResult hodge_dual(const HyperTensor& F, const HyperSpherical& q, int orientation);

/// Sign σ (±1) for which F is self-dual, fixed at a reference point.
int calibrated_orientation();

/// Max |*F − F| over random regular points for the calibrated orientation,
/// plus the opposite orientation as a reported control.
CheckList self_duality_check(int points, std::uint64_t seed);

/// F_r· ≡ 0 and transformed vs printed trigonometric components.
CheckList hyperspherical_table_check(int points, std::uint64_t seed);

}  // namespace hkit::gauge
