#pragma once

#include <array>

#include "hkit/exact/scalar_expr.hpp"

namespace hkit::gauge {

using exact::Chart;
using exact::GaussRat;
using exact::Point5;
using exact::ScalarExpr;

/// Triplet of five-vector potentials A^a_j (A-chart) or B^a_j (B-chart).
struct GaugePotential {
    Chart chart = Chart::Plus;
    std::array<std::array<ScalarExpr, 5>, 3> components;

    const ScalarExpr& operator()(int a, int j) const { return components[a][j]; }
};

using NumericPotential = std::array<std::array<double, 5>, 3>;

/// Monopole potential of the given chart.  The A-chart is singular on the
/// non-positive x0 semiaxis, the B-chart on the non-negative one.
GaugePotential potential(Chart chart);

/// Numeric components at a point; throws SingularAxis on the chart's string.
NumericPotential potential_at(Chart chart, const Point5& x);

using TauMatrix = std::array<std::array<GaussRat, 5>, 5>;
using TauMatrices = std::array<TauMatrix, 3>;

/// 5×5 matrices τ^a assembled from Pauli blocks.
const TauMatrices& tau_matrices();

/// Coupling g for which A^a_i = 2ig τ^a_ij x_j / (r(r+x0)) reproduces the
/// explicit A-chart listing.
GaussRat tau_coupling();

}  // namespace hkit::gauge
