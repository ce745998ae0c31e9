#pragma once

#include <array>
#include <string>

#include "hkit/exact/rational.hpp"
#include "hkit/operators/operator_expr.hpp"

namespace hkit::symmetry {

using exact::GaussRat;
using exact::Rational;
using operators::OperatorExpr;

/// ħ, μ₀ and e² as exact positive rationals.
struct Units {
    Rational hbar{1};
    Rational mu0{1};
    Rational e2{1};
};

/// All operators are built in the A-chart.
///
///   π_i = −iħ∂_i − ħA^a_i T_a
///   L_ij = (x_i π_j − x_j π_i)/ħ − r² F^a_ij T_a
///   M̄_k = Σ_i (π_i L_ik + L_ik π_i) + (2μ₀e²/ħ) x_k/r     (M_k = M̄_k / (2√μ₀))
///   H = Σ π_i²/(2μ₀) + ħ²T²/(2μ₀r²) − e²/r
struct SymmetryOperators {
    Units units;
    std::array<OperatorExpr, 5> pi;
    std::array<std::array<OperatorExpr, 5>, 5> L;
    std::array<OperatorExpr, 5> Mbar;
    OperatorExpr H;
    OperatorExpr Tsq;
};

/// With gauge_field = false the potential, field tensor and T² terms are
/// dropped, leaving the flat operators.
SymmetryOperators build_operators(const Units& units, bool gauge_field = true);

}  // namespace hkit::symmetry
