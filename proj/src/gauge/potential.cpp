#include "hkit/gauge/potential.hpp"

#include <cmath>

#include "hkit/errors.hpp"

namespace hkit::gauge {

namespace {

// Signed coordinate index per component; 0 marks the vanishing x0 slot.
struct Slot {
    int sign;
    int index;
};
using Listing = std::array<std::array<Slot, 5>, 3>;

const Listing kAChart = {{
    {{{0, 0}, {1, 4}, {1, 3}, {-1, 2}, {-1, 1}}},
    {{{0, 0}, {-1, 3}, {1, 4}, {1, 1}, {-1, 2}}},
    {{{0, 0}, {1, 2}, {-1, 1}, {1, 4}, {-1, 3}}},
}};

const Listing kBChart = {{
    {{{0, 0}, {-1, 4}, {1, 3}, {-1, 2}, {1, 1}}},
    {{{0, 0}, {-1, 3}, {-1, 4}, {1, 1}, {1, 2}}},
    {{{0, 0}, {1, 2}, {-1, 1}, {-1, 4}, {1, 3}}},
}};

const Listing& listing(Chart c) { return c == Chart::Plus ? kAChart : kBChart; }

}  // namespace

GaugePotential potential(Chart chart) {
    GaugePotential g;
    g.chart = chart;
    const ScalarExpr prefactor = ScalarExpr::radius_power(-1, chart) * ScalarExpr::axis_power(-1, chart);
    const auto& L = listing(chart);
    for (int a = 0; a < 3; ++a) {
        for (int j = 0; j < 5; ++j) {
            const Slot s = L[a][j];
            g.components[a][j] = s.sign == 0 ? ScalarExpr(chart)
                                             : prefactor * ScalarExpr::coordinate(s.index, chart) * GaussRat(s.sign);
        }
    }
    return g;
}

NumericPotential potential_at(Chart chart, const Point5& x) {
    double s = 0;
    for (double v : x) s += v * v;
    const double r = std::sqrt(s);
    const double w = chart == Chart::Plus ? r + x[0] : r - x[0];
    if (r == 0 || w == 0) {
        throw SingularAxis(std::string("point lies on the singular semiaxis of chart ") + exact::chart_name(chart));
    }
    NumericPotential out{};
    const auto& L = listing(chart);
    for (int a = 0; a < 3; ++a) {
        for (int j = 0; j < 5; ++j) {
            const Slot sl = L[a][j];
            out[a][j] = sl.sign == 0 ? 0.0 : sl.sign * x[sl.index] / (r * w);
        }
    }
    return out;
}

const TauMatrices& tau_matrices() {
    static const TauMatrices taus = [] {
        const GaussRat h(exact::Rational(1, 2));
        const GaussRat i = GaussRat::i();
        TauMatrices t{};
        // Pauli blocks acting on the (1,2) and (3,4) coordinate pairs.
        const std::array<std::array<GaussRat, 2>, 2> s1 = {{{0, 1}, {1, 0}}};
        const std::array<std::array<GaussRat, 2>, 2> s2 = {{{0, -i}, {i, 0}}};
        const std::array<std::array<GaussRat, 2>, 2> s3 = {{{1, 0}, {0, -1}}};
        auto put = [&](TauMatrix& m, int row0, int col0, const auto& block, const GaussRat& k) {
            for (int p = 0; p < 2; ++p) {
                for (int q = 0; q < 2; ++q) m[row0 + p][col0 + q] = block[p][q] * k;
            }
        };
        put(t[0], 1, 3, s1, -i * h);
        put(t[0], 3, 1, s1, i * h);
        put(t[1], 1, 3, s3, i * h);
        put(t[1], 3, 1, s3, -i * h);
        put(t[2], 1, 1, s2, h);
        put(t[2], 3, 3, s2, h);
        return t;
    }();
    return taus;
}

GaussRat tau_coupling() {
    // Match one nonvanishing component: A^1_1 r(r+x0) against 2i τ^1_1j x_j.
    const auto& tau = tau_matrices();
    ScalarExpr contracted(Chart::Plus);
    for (int j = 0; j < 5; ++j) contracted += ScalarExpr::coordinate(j) * tau[0][1][j];
    const ScalarExpr listed = potential(Chart::Plus)(0, 1) * ScalarExpr::radius_power(1) * ScalarExpr::axis_power(1);
    if (contracted.size() != 1 || listed.size() != 1 || !(contracted.terms()[0].first == listed.terms()[0].first)) {
        throw Error("tau contraction is not proportional to the listed potential");
    }
    return listed.terms()[0].second / (GaussRat(2) * GaussRat::i() * contracted.terms()[0].second);
}

}  // namespace hkit::gauge
