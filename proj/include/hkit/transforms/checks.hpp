#pragma once

#include <cstdint>

#include "hkit/check.hpp"

namespace hkit::transforms {

/// Euler identities of the three maps on random rationals (exact), the
/// symbolic H·Hᵀ = u²E(D), the printed H(u;8) against the component
/// formulas, fiber invariance, and the hyperspherical round trip.
CheckList euler_checks(int samples = 1000, std::uint64_t seed = 1);

}  // namespace hkit::transforms
