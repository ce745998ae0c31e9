#include "hkit/gauge/hyperspherical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hkit/errors.hpp"

namespace hkit::gauge {

namespace {

constexpr double kPi = std::numbers::pi;

const FieldTensor& definition_tensor() {
    static const FieldTensor F = field_tensor(FieldSource::Definition, Chart::Plus);
    return F;
}

HyperTensor appendix_table(const HyperSpherical& q) {
    const double st = std::sin(q.theta), st2 = st * st;
    const double sb = std::sin(q.beta), cb = std::cos(q.beta);
    const double sa = std::sin(q.alpha), ca = std::cos(q.alpha);
    HyperTensor T{};
    auto set = [&](int a, int i, int j, double v) {
        T[a - 1][i][j] = v;
        T[a - 1][j][i] = -v;
    };
    enum { R, TH, BE, AL, GA };
    set(1, TH, BE, 0.5 * st * sa);
    set(1, TH, AL, 0);
    set(1, TH, GA, -0.5 * st * sb * ca);
    set(1, BE, AL, -0.25 * st2 * ca);
    set(1, BE, GA, -0.25 * st2 * cb * ca);
    set(1, AL, GA, 0.25 * st2 * sb * sa);

    set(2, TH, BE, 0.5 * st * ca);
    set(2, TH, AL, 0);
    set(2, TH, GA, 0.5 * st * sb * sa);
    set(2, BE, AL, 0.25 * st2 * sa);
    set(2, BE, GA, 0.25 * st2 * cb * sa);
    set(2, AL, GA, 0.25 * st2 * sb * ca);

    set(3, TH, BE, 0);
    set(3, TH, AL, 0.5 * st);
    set(3, TH, GA, 0.5 * st * cb);
    set(3, BE, AL, 0);
    set(3, BE, GA, -0.25 * st2 * sb);
    set(3, AL, GA, 0);
    return T;
}

int levi_civita4(int a, int b, int c, int d) {
    const int p[4] = {a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (p[i] == p[j]) return 0;
            if (p[i] > p[j]) sign = -sign;
        }
    }
    return sign;
}

std::array<std::array<double, 4>, 4> invert4(const AngularBlock& g, double& det) {
    // Gauss–Jordan with partial pivoting.
    std::array<std::array<double, 8>, 4> m{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) m[i][j] = g[i][j];
        m[i][4 + i] = 1;
    }
    det = 1;
    for (int c = 0; c < 4; ++c) {
        int p = c;
        for (int r = c + 1; r < 4; ++r) {
            if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
        }
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        const double piv = m[c][c];
        det *= piv;
        if (piv == 0) return {};
        for (auto& v : m[c]) v /= piv;
        for (int r = 0; r < 4; ++r) {
            if (r == c) continue;
            const double f = m[r][c];
            for (int k = 0; k < 8; ++k) m[r][k] -= f * m[c][k];
        }
    }
    AngularBlock inv{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) inv[i][j] = m[i][4 + j];
    }
    return inv;
}

HyperSpherical random_regular(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ur(0.5, 3.0), ut(0.2, kPi - 0.2), ub(0.2, kPi - 0.2),
        ua(0.0, 2 * kPi), ug(0.0, 4 * kPi);
    HyperSpherical q;
    q.r = ur(rng);
    q.theta = ut(rng);
    q.beta = ub(rng);
    q.alpha = ua(rng);
    q.gamma = ug(rng);
    return q;
}

}  // namespace

std::array<std::array<std::array<double, 5>, 5>, 3> cartesian_field_at(const Point5& x) {
    const FieldTensor& F = definition_tensor();
    std::array<std::array<std::array<double, 5>, 5>, 3> out{};
    for (int a = 0; a < 3; ++a) {
        for (int i = 0; i < 5; ++i) {
            for (int j = i + 1; j < 5; ++j) {
                const double v = F(a, i, j).evaluate(x).real();
                out[a][i][j] = v;
                out[a][j][i] = -v;
            }
        }
    }
    return out;
}

HyperTensor hyperspherical_field_tensor(HyperSource source, const HyperSpherical& q) {
    if (source == HyperSource::AppendixTable) return appendix_table(q);
    const auto J = transforms::hyperspherical_jacobian(q);
    const auto Fc = cartesian_field_at(transforms::hyperspherical_inverse(q));
    HyperTensor out{};
    for (int a = 0; a < 3; ++a) {
        for (int i = 0; i < 5; ++i) {
            for (int k = 0; k < 5; ++k) {
                double s = 0;
                for (int m = 0; m < 5; ++m) {
                    for (int n = 0; n < 5; ++n) s += J[m][i] * J[n][k] * Fc[a][m][n];
                }
                out[a][i][k] = s;
            }
        }
    }
    return out;
}

AngularBlock induced_metric(const HyperSpherical& q) {
    const auto J = transforms::hyperspherical_jacobian(q);
    AngularBlock g{};
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            for (int m = 0; m < 5; ++m) g[mu][nu] += J[m][mu + 1] * J[m][nu + 1];
        }
    }
    return g;
}

DualResult hodge_dual(const HyperTensor& F, const HyperSpherical& q, int orientation) {
    const AngularBlock g = induced_metric(q);
    double det = 0;
    const AngularBlock gi = invert4(g, det);
    const double scale = std::pow(q.r, 8);
    if (!(det > 1e-24 * scale)) throw SingularMetric("induced metric degenerates at this point");
    const double sqrt_g = std::sqrt(det);
    DualResult res;
    for (int a = 0; a < 3; ++a) {
        AngularBlock low{};
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) low[i][j] = F[a][i + 1][j + 1];
        }
        AngularBlock up{};
        for (int m = 0; m < 4; ++m) {
            for (int n = 0; n < 4; ++n) {
                double s = 0;
                for (int p = 0; p < 4; ++p) {
                    for (int t = 0; t < 4; ++t) s += gi[m][p] * gi[n][t] * low[p][t];
                }
                up[m][n] = s;
            }
        }
        AngularBlock dual{};
        for (int m = 0; m < 4; ++m) {
            for (int n = 0; n < 4; ++n) {
                double s = 0;
                for (int p = 0; p < 4; ++p) {
                    for (int t = 0; t < 4; ++t) s += levi_civita4(m, n, p, t) * low[p][t];
                }
                dual[m][n] = orientation * s / (2 * sqrt_g);
            }
        }
        res.dual[a] = dual;
        res.raised[a] = up;
        for (int m = 0; m < 4; ++m) {
            for (int n = 0; n < 4; ++n) res.residual = std::max(res.residual, std::abs(dual[m][n] - up[m][n]));
        }
    }
    return res;
}

int calibrated_orientation() {
    static const int sigma = [] {
        const HyperSpherical q{1.0, 1.1, 0.7, 2.3, 5.1};
        const HyperTensor F = hyperspherical_field_tensor(HyperSource::Transformed, q);
        return hodge_dual(F, q, 1).residual <= hodge_dual(F, q, -1).residual ? 1 : -1;
    }();
    return sigma;
}

CheckList self_duality_check(int points, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int sigma = calibrated_orientation();
    double worst = 0, worst_opposite = 1e300;
    for (int p = 0; p < points; ++p) {
        const HyperSpherical q = random_regular(rng);
        const HyperTensor F = hyperspherical_field_tensor(HyperSource::Transformed, q);
        worst = std::max(worst, hodge_dual(F, q, sigma).residual);
        worst_opposite = std::min(worst_opposite, hodge_dual(F, q, -sigma).residual);
    }
    CheckList out;
    CheckReport c;
    c.suite = "field";
    c.relation = "*F = F on the angular block (calibrated orientation)";
    c.anchor = "eq.12";
    c.mode = CheckMode::Numeric;
    c.residual = worst;
    c.pass = worst < 1e-10;
    c.detail = std::to_string(points) + " points, orientation eps^{theta beta alpha gamma} = " + std::to_string(sigma);
    out.push_back(c);
    CheckReport o;
    o.suite = "field";
    o.relation = "opposite orientation is not self-dual";
    o.anchor = "eq.12";
    o.mode = CheckMode::Numeric;
    o.residual = worst_opposite;
    o.pass = worst_opposite > 1e-3;
    o.detail = "smallest |*F - F| over the same points with the sign reversed";
    out.push_back(o);
    return out;
}

CheckList hyperspherical_table_check(int points, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst_r = 0, worst_table = 0;
    for (int p = 0; p < points; ++p) {
        const HyperSpherical q = random_regular(rng);
        const HyperTensor F = hyperspherical_field_tensor(HyperSource::Transformed, q);
        const HyperTensor T = hyperspherical_field_tensor(HyperSource::AppendixTable, q);
        for (int a = 0; a < 3; ++a) {
            for (int k = 0; k < 5; ++k) worst_r = std::max(worst_r, std::abs(F[a][0][k]));
            for (int i = 1; i < 5; ++i) {
                for (int k = 1; k < 5; ++k) {
                    worst_table = std::max(worst_table, std::abs(F[a][i][k] - T[a][i][k]));
                }
            }
        }
    }
    CheckList out;
    CheckReport c;
    c.suite = "field";
    c.relation = "F^a_rk = 0 in hyperspherical coordinates";
    c.anchor = "sec.6";
    c.mode = CheckMode::Numeric;
    c.residual = worst_r;
    c.pass = worst_r < 1e-12;
    c.detail = std::to_string(points) + " random regular points";
    out.push_back(c);
    CheckReport t;
    t.suite = "field";
    t.relation = "hyperspherical table audit: transformed vs printed components";
    t.anchor = "appendix 2";
    t.mode = CheckMode::Audit;
    t.residual = worst_table;
    t.pass = worst_table < 1e-10;
    t.detail = t.pass ? "all 18 printed components agree" : "printed components deviate";
    out.push_back(t);
    return out;
}

}  // namespace hkit::gauge
