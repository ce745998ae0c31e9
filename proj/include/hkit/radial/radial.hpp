#pragma once

#include <optional>
#include <vector>

#include "hkit/check.hpp"

namespace hkit::radial {

enum class RadialKind { Oscillator, Coulomb, Modified };

const char* kind_name(RadialKind k);

/// One radial eigenproblem.
///
/// Oscillator and Modified use (dim = D, ang = L, coordinate u); Coulomb
/// uses (dim = d, ang = l, coordinate r).  The Modified potential is
/// V(u) = c₀ + c₁u² + Σ_{n≥2} cₙ u^{2n}.
struct RadialProblem {
    RadialKind kind = RadialKind::Oscillator;
    double dim = 8;
    double ang = 0;
    double omega = 1;
    double e2 = 1;
    std::vector<double> coeffs;
    double mass = 1;
    double hbar = 1;
    int n_points = 4096;
    /// Right end of the grid; 0 selects it automatically from the decay of the highest level.
    double extent = 0;
    int levels = 3;
    /// Relative accuracy demanded of every eigenvalue; GridTooCoarse above it.
    double tolerance = 1e-6;

    static RadialProblem oscillator(double D, double L, double omega);
    static RadialProblem coulomb(double d, double l, double e2);
    static RadialProblem modified(double D, double L, std::vector<double> coeffs);

    /// Centrifugal coefficient c in ħ²c/(2m x²) of the reduced equation.
    double centrifugal() const;
    /// Potential without the centrifugal part.
    double potential(double x) const;
    /// Odd-D oscillators have a non-integer dual dimension d = D/2 + 1.
    bool formal_dual() const;
};

struct EigenResult {
    RadialKind kind = RadialKind::Oscillator;
    /// Richardson-extrapolated eigenvalues, ascending.
    std::vector<double> eigenvalues;
    /// Finest-grid eigenvalues before extrapolation.
    std::vector<double> raw_eigenvalues;
    /// Estimated relative error of each extrapolated eigenvalue.
    std::vector<double> error_estimates;
    /// ‖(H_h − E_h)χ‖/‖χ‖ of the discrete finest-grid eigenpairs.
    std::vector<double> residual_norms;
    /// Interior nodes of the finest grid and the reduced functions χ on it
    /// (unit discrete norm, positive near the origin).
    std::vector<double> grid;
    std::vector<std::vector<double>> eigenvectors;
    double extent = 0;
    int n_points = 0;
    bool formal = false;
};

/// Eigenvalues of the tridiagonal 3-point discretization on `n` interior
/// points of (0, extent), lowest `levels` only.
struct GridSolution {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors;
    std::vector<double> grid;
};
GridSolution solve_on_grid(const RadialProblem& p, double extent, int n, int levels, bool vectors);

/// Grid end from the outer turning point of energy `E` plus a WKB decay
/// margin, never below 1.5 times the turning point.
double automatic_extent(const RadialProblem& p, double E);

/// Lowest levels of the kind-appropriate reduced equation.
EigenResult solve(const RadialProblem& p);
EigenResult solve_oscillator(const RadialProblem& p);
EigenResult solve_coulomb(const RadialProblem& p);

/// Exact levels for comparison: ħω(2n + L + D/2) and −me⁴/(2ħ²(n + l + (d−1)/2)²).
double oscillator_level(const RadialProblem& p, int n);
double coulomb_level(const RadialProblem& p, int n);

struct CoulombData {
    double epsilon;
    double e2;
};
struct OscillatorData {
    double E;
    double omega;
};

/// (E, ω) → (e² = E/4, ε = −mω²/8).
CoulombData duality_forward(double E, double omega, double mass = 1);
/// (ε, e²) → (E = 4e², ω = √(−8ε/m)); requires ε ≤ 0.
OscillatorData duality_backward(double epsilon, double e2, double mass = 1);
/// Dual Coulomb problem of an oscillator problem at energy E: d = D/2 + 1, l = L/2.
RadialProblem dual_coulomb_problem(const RadialProblem& osc, double E);
/// Forward map of a whole oscillator spectrum.
std::vector<CoulombData> duality_map(const EigenResult& osc, const RadialProblem& p);

struct AnsatzValues {
    double epsilon;
    double e2;
    /// e² = 0 when E = c₀; the dual coupling vanishes.
    bool degenerate;
};
AnsatzValues modified_ansatz(double c0, double c1, double E);

struct SubstitutionOptions {
    int r_points = 20000;
    /// Multiplies the dual energy, for negative controls.
    double epsilon_scale = 1.0;
    double tolerance = 1e-4;
};

/// Maps eigenpair `level` of an oscillator-type solution through r = u²
/// and evaluates the dual Coulomb-type equation on a uniform r grid.
/// The residual is ‖(H_dual − ε)χ‖ / (|ε| ‖χ‖) over interior nodes.
CheckReport substitution_residual_check(const EigenResult& osc, const RadialProblem& p, int level = 0,
                                        const SubstitutionOptions& opt = {});

/// Observed order log₂(e(h)/e(h/2)) of the unextrapolated ground level
/// against the exact level, from grids of n and 2n+1 interior nodes.
double convergence_order(const RadialProblem& p, int n = 200);

struct RadialCheckOptions {
    int n_points = 4096;
    double eigen_tolerance = 1e-6;
    double residual_tolerance = 1e-4;
};

/// Oscillator and Coulomb levels, the duality map, the substitution residual
/// with its negative control, convergence order and level laws.
CheckList radial_checks(const RadialCheckOptions& opt = {});

}  // namespace hkit::radial
