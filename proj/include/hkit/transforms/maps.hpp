#pragma once

#include <array>
#include <vector>

#include "hkit/exact/rational.hpp"

namespace hkit::transforms {

using exact::Rational;

using Point8 = std::array<double, 8>;
using ExactPoint8 = std::array<Rational, 8>;

/// One entry of H(u;D): sign · u_index, or 0 when sign is 0.
struct HEntry {
    int sign = 0;
    int index = 0;
};

/// Bilinear matrix with x = H(u;D)u.  Indices refer to the 0-based input vector.
struct HMatrix {
    int D = 0;
    std::vector<std::vector<HEntry>> rows;
};

/// H(u;D) for D in {2,4,8}; throws BadDimension otherwise.
HMatrix h_matrix(int D);

/// Σ_ab c_ab u_a u_b with a <= b; the symbolic entries of H·Hᵀ.
struct Quadratic {
    std::vector<std::array<int, 3>> terms;  // {a, b, coefficient}
};

/// (H·Hᵀ)_ij as integer quadratic forms in u.
std::vector<std::vector<Quadratic>> h_gram(const HMatrix& h);

/// True iff H·Hᵀ = u²E(D) as polynomials.
bool h_gram_is_scalar(const HMatrix& h);

template <class T>
std::vector<T> h_apply(const HMatrix& h, const std::vector<T>& u) {
    std::vector<T> x(static_cast<std::size_t>(h.D), T(0));
    for (int i = 0; i < h.D; ++i) {
        for (int j = 0; j < h.D; ++j) {
            const HEntry e = h.rows[i][j];
            if (e.sign > 0) x[i] += u[e.index] * u[j];
            else if (e.sign < 0) x[i] -= u[e.index] * u[j];
        }
    }
    return x;
}

template <class T>
std::array<T, 2> levi_civita_map(const std::array<T, 2>& u) {
    return {u[0] * u[0] - u[1] * u[1], T(2) * u[0] * u[1]};
}

/// First three rows of H(u;4)u; the fourth row vanishes identically.
template <class T>
std::array<T, 3> kustaanheimo_stiefel_map(const std::array<T, 4>& u) {
    return {T(2) * (u[0] * u[2] - u[1] * u[3]), T(2) * (u[0] * u[3] + u[1] * u[2]),
            u[0] * u[0] + u[1] * u[1] - u[2] * u[2] - u[3] * u[3]};
}

template <class T>
std::array<T, 5> hurwitz_map(const std::array<T, 8>& u) {
    const T two(2);
    return {
        u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3] - u[4] * u[4] - u[5] * u[5] - u[6] * u[6] - u[7] * u[7],
        two * (u[0] * u[4] - u[1] * u[5] - u[2] * u[6] - u[3] * u[7]),
        two * (u[0] * u[5] + u[1] * u[4] - u[2] * u[7] + u[3] * u[6]),
        two * (u[0] * u[6] + u[1] * u[7] + u[2] * u[4] - u[3] * u[5]),
        two * (u[0] * u[7] - u[1] * u[6] + u[2] * u[5] + u[3] * u[4]),
    };
}

template <class T, std::size_t N>
T squared_norm(const std::array<T, N>& v) {
    T s(0);
    for (const auto& c : v) s += c * c;
    return s;
}

/// Coordinates where the component formulas and H(u;8)u differ symbolically.
std::vector<int> hurwitz_matrix_mismatch();

/// Basis of the antisymmetric K with [Q_j, K] = 0 for the five quadratic
/// forms of the component formulas; these generate the fiber action.
std::vector<std::array<std::array<double, 8>, 8>> hurwitz_fiber_generators();

/// exp(tK)u for antisymmetric K.
Point8 fiber_rotate(const std::array<std::array<double, 8>, 8>& K, double t, const Point8& u);

}  // namespace hkit::transforms
