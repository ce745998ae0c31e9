#pragma once

#include <vector>

#include "hkit/check.hpp"
#include "hkit/symmetry/operators.hpp"

namespace hkit::symmetry {

/// SO(6) Casimir eigenvalues for the labels μ₁ ≥ μ₂ ≥ μ₃ ≥ 0.
struct CasimirEigenvalues {
    Rational mu1, mu2, mu3;
    Rational C2, C3, C4;
};

/// Labels must be non-negative integers or half-integers in
/// non-increasing order; throws OrderingViolation otherwise.
CasimirEigenvalues casimir_eigenvalues(const Rational& mu1, const Rational& mu2, const Rational& mu3);

/// Solution of the isospin constraint for a given T: μ₂ = μ₃ = T and
/// N/2 = μ₁ ∈ {T, T+1, ...}.
struct ConstraintSolution {
    Rational mu2, mu3;
    int min_N = 0;
    int N_step = 2;

    /// The first `count` admissible values of N.
    std::vector<int> admissible_N(int count) const;
    bool admits(int N) const;
};

ConstraintSolution solve_constraints(const Rational& T);

struct SpectrumLevel {
    Rational T;
    int N = 0;
    Rational epsilon;
};

/// ε = −μ₀e⁴/(2ħ²(N/2+2)²); throws InvalidQuantumNumbers unless N/2 − T
/// is a non-negative integer.
SpectrumLevel energy_level(const Rational& T, int N, const Units& units = {});

/// The lowest `count` levels at fixed T.
std::vector<SpectrumLevel> energy_levels(const Rational& T, int count, const Units& units = {});

/// Sets E = ħω(N+4) and e² = E/4, then compares the level with μ₁ = N/2
/// against ε = −μ₀ω²/8 exactly.
CheckReport duality_closure_check(int N, const Rational& omega, const Units& units = {});

/// Closure for every N in [0, max_N] and each ω in `omegas`, folded into one row.
CheckReport duality_closure_range(int max_N, const std::vector<Rational>& omegas, const Units& units = {});

/// Identities among the eigenvalue formulas (C₂ − 2T(T+1), the μ₂/μ₃ quartic,
/// the alternative C₄ expression) and the ordering of the spectrum.
CheckList spectrum_property_checks(const Units& units = {});

/// Eigenvalue and level examples, error cases, duality closure for
/// N = 0..40 at several ω, and the property checks.
CheckList spectrum_checks(const Units& units = {});

}  // namespace hkit::symmetry
