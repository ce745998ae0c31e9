#pragma once

#include <cstdint>

#include "hkit/check.hpp"
#include "hkit/gauge/field_tensor.hpp"

namespace hkit::gauge {

/// Orthogonality of the potentials to each other and to x, both charts.
CheckList potential_identities_check();

/// τ antisymmetry, su(2) bracket, the product and contraction identities,
/// and reconstruction of the A-listing from τ.
CheckList tau_relations_check();

/// Antisymmetry, FᵃᵢⱼFᵇᵢⱼ = 4δ_ab/r⁴, definition vs closed form, and the
/// entrywise audit of the printed Cartesian table.
CheckList field_identities_check();

/// Finite-difference su(2) brackets for the printed T̂₁ and for the variant
/// with cot β_T in its first coefficient.
CheckList su2_trig_generators_check(int samples, std::uint64_t seed);

/// max_j |S A_j S⁻¹ + i S ∂_j S⁻¹ − B_j| at x in the spin-½ representation.
/// Throws SingularAxis on the x0 axis.
double gauge_transform_residual(const Point5& x);
CheckReport gauge_transform_check(int points, std::uint64_t seed);

}  // namespace hkit::gauge
