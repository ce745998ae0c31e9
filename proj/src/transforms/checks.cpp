#include "hkit/transforms/checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "hkit/errors.hpp"
#include "hkit/transforms/angles.hpp"
#include "hkit/transforms/maps.hpp"

namespace hkit::transforms {

namespace {

CheckReport make(const std::string& relation, const std::string& anchor, CheckMode mode, double residual, bool pass,
                 const std::string& detail) {
    return {"euler", relation, anchor, mode, residual, pass, detail};
}

template <std::size_t N>
std::array<Rational, N> random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-99, 99), den(1, 30);
    std::array<Rational, N> u;
    for (auto& v : u) v = Rational(num(rng), den(rng));
    return u;
}

template <std::size_t N>
Point8 to_point8(const std::array<Rational, N>& u) {
    Point8 p{};
    for (std::size_t i = 0; i < N && i < 8; ++i) p[i] = u[i].to_double();
    return p;
}

// Counts samples where |x|² ≠ |u|⁴ exactly, for map `f` on N-vectors.
template <std::size_t N, class Map>
int euler_failures(std::mt19937_64& rng, int samples, Map f) {
    int bad = 0;
    for (int s = 0; s < samples; ++s) {
        const auto u = random_rational<N>(rng);
        const Rational nu = squared_norm(u);
        if (squared_norm(f(u)) != nu * nu) ++bad;
    }
    return bad;
}

template <std::size_t N>
std::array<Rational, N> via_matrix(const std::array<Rational, N>& u) {
    static const HMatrix h = h_matrix(static_cast<int>(N));
    const std::vector<Rational> x = h_apply(h, std::vector<Rational>(u.begin(), u.end()));
    std::array<Rational, N> out;
    std::copy(x.begin(), x.end(), out.begin());
    return out;
}

}  // namespace

CheckList euler_checks(int samples, std::uint64_t seed) {
    if (samples < 1) throw ConfigError("euler checks need at least one sample");
    CheckList out;
    std::mt19937_64 rng(seed);
    const std::string n = std::to_string(samples);
    auto exact_row = [&](const std::string& relation, const std::string& anchor, int bad) {
        out.push_back(make(relation, anchor, CheckMode::Exact, bad, bad == 0,
                           std::to_string(samples - bad) + "/" + n + " random rational inputs exact"));
    };

    exact_row("Levi-Civita |x|^2 = |u|^4", "sec.3",
              euler_failures<2>(rng, samples, [](const auto& u) { return levi_civita_map(u); }));
    exact_row("Kustaanheimo-Stiefel |x|^2 = |u|^4", "sec.3",
              euler_failures<4>(rng, samples, [](const auto& u) { return kustaanheimo_stiefel_map(u); }));
    exact_row("Hurwitz component formulas |x|^2 = |u|^4", "eq.5",
              euler_failures<8>(rng, samples, [](const auto& u) { return hurwitz_map(u); }));
    for (int D : {2, 4, 8}) {
        int bad = 0;
        if (D == 2) bad = euler_failures<2>(rng, samples, via_matrix<2>);
        if (D == 4) bad = euler_failures<4>(rng, samples, via_matrix<4>);
        if (D == 8) bad = euler_failures<8>(rng, samples, via_matrix<8>);
        exact_row("H(u;" + std::to_string(D) + ")u satisfies |x|^2 = |u|^4", "eq.4", bad);
    }

    {
        int zero_row_bad = 0;
        for (int s = 0; s < samples; ++s) {
            const auto u = random_rational<4>(rng);
            if (!via_matrix<4>(u)[3].is_zero()) ++zero_row_bad;
        }
        exact_row("fourth row of H(u;4)u vanishes", "sec.3", zero_row_bad);
    }

    for (int D : {2, 4, 8}) {
        const bool ok = h_gram_is_scalar(h_matrix(D));
        out.push_back(make("H(u;" + std::to_string(D) + ") H^T(u;" + std::to_string(D) + ") = u^2 E(" +
                               std::to_string(D) + ")",
                           "sec.3", CheckMode::Exact, ok ? 0 : 1, ok,
                           ok ? "symbolic identity over integer quadratic forms" : "Gram matrix is not u^2 E(D)"));
    }

    {
        const auto rows = hurwitz_matrix_mismatch();
        std::ostringstream det;
        if (rows.empty()) {
            det << "printed H(u;8)u reproduces the component formulas";
        } else {
            det << "printed H(u;8)u differs from the component formulas in x";
            for (std::size_t k = 0; k < rows.size(); ++k) det << (k ? ", x" : "") << rows[k];
            det << " (both satisfy the Euler identity)";
        }
        out.push_back(make("printed H(u;8) matrix vs component formulas", "eq.5", CheckMode::Audit,
                           static_cast<double>(rows.size()), rows.empty(), det.str()));
    }

    {
        const auto gens = hurwitz_fiber_generators();
        std::normal_distribution<double> nd;
        double worst = 0, moved = 0;
        for (int s = 0; s < 20; ++s) {
            Point8 u;
            for (auto& v : u) v = nd(rng);
            const auto x0 = hurwitz_map(u);
            const AngleTriple b0 = body_angles(u);
            for (const auto& K : gens) {
                const Point8 v = fiber_rotate(K, 0.7, u);
                const auto x1 = hurwitz_map(v);
                for (int i = 0; i < 5; ++i) worst = std::max(worst, std::abs(x1[i] - x0[i]));
                const AngleTriple b1 = body_angles(v);
                moved = std::max(moved, std::abs(b1.gamma - b0.gamma) + std::abs(b1.alpha - b0.alpha));
            }
        }
        std::ostringstream det;
        det << gens.size() << " fiber generators x 20 points; body angles change by up to " << moved;
        out.push_back(make("Hurwitz map invariant under the fiber action", "eq.6", CheckMode::Numeric, worst,
                           worst < 1e-12 && gens.size() == 3, det.str()));
    }

    {
        std::normal_distribution<double> nd;
        double worst = 0;
        for (int s = 0; s < samples; ++s) {
            Point5 x;
            for (auto& v : x) v = nd(rng);
            const Point5 y = hyperspherical_inverse(hyperspherical(x));
            for (int i = 0; i < 5; ++i) worst = std::max(worst, std::abs(y[i] - x[i]));
        }
        out.push_back(make("hyperspherical round trip", "sec.6", CheckMode::Numeric, worst, worst < 1e-12,
                           n + " random points, max coordinate error"));
    }

    {
        // β_T uses (u0²+u1²)/(u2²+u3²); the space angle β uses (x1²+x2²)/(x3²+x4²).
        std::normal_distribution<double> nd;
        double worst = 0;
        for (int s = 0; s < 50; ++s) {
            Point8 u;
            for (auto& v : u) v = nd(rng);
            const auto xm = hurwitz_map(u);
            const Point5 x{xm[0], xm[1], xm[2], xm[3], xm[4]};
            worst = std::max(worst, std::abs(body_angles(u).beta - space_angles(x).beta));
        }
        out.push_back(make("beta_T of the fiber vs space beta of the image", "eq.6", CheckMode::Audit, worst,
                           worst < 1e-12,
                           "the two angle sets are distinct coordinates; largest difference over 50 points"));
    }
    return out;
}

}  // namespace hkit::transforms
