#include "hkit/transforms/maps.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "hkit/errors.hpp"

namespace hkit::transforms {

namespace {

// Signed 1-based entries as printed: +k is u_k, -k is -u_k (u_0 written as 100).
using Printed = std::vector<std::vector<int>>;

const Printed kH2 = {{1, -2}, {2, 1}};

const Printed kH4 = {
    {3, -4, 1, -2},
    {4, 3, 2, 1},
    {1, 2, -3, -4},
    {2, -1, -4, 3},
};

constexpr int Z = 100;
const Printed kH8 = {
    {Z, 1, 2, 3, -4, -5, -6, -7},
    {4, 5, -6, -7, Z, 1, -2, -3},
    {5, -4, 7, -6, -1, Z, -3, 2},
    {6, 7, 4, 5, 2, 3, Z, 1},
    {7, -6, -5, 4, 3, -2, -1, Z},
    {1, -Z, 3, -2, 5, -4, 7, -6},
    {2, -3, -Z, 1, -6, 7, 4, -5},
    {3, 2, -1, -Z, -7, -6, 5, 4},
};

HMatrix build(const Printed& p, bool one_based) {
    HMatrix h;
    h.D = static_cast<int>(p.size());
    for (const auto& row : p) {
        std::vector<HEntry> out;
        for (int v : row) {
            const int mag = std::abs(v);
            const int idx = mag == Z ? 0 : (one_based ? mag - 1 : mag);
            out.push_back({v > 0 ? 1 : -1, idx});
        }
        h.rows.push_back(std::move(out));
    }
    return h;
}

using QuadMap = std::map<std::pair<int, int>, int>;

QuadMap quad_of(const HMatrix& h, int i, int j) {
    QuadMap q;
    for (int k = 0; k < h.D; ++k) {
        const HEntry a = h.rows[i][k];
        const HEntry b = h.rows[j][k];
        if (a.sign == 0 || b.sign == 0) continue;
        auto key = std::minmax(a.index, b.index);
        q[{key.first, key.second}] += a.sign * b.sign;
    }
    std::erase_if(q, [](const auto& kv) { return kv.second == 0; });
    return q;
}

// Symmetric 8×8 integer matrix of the quadratic form x_j(u) = uᵀQu (doubled).
using IntMat8 = std::array<std::array<int, 8>, 8>;

std::array<IntMat8, 5> component_forms() {
    std::array<IntMat8, 5> Q{};
    // Probe the polynomial map with integer unit vectors: x(e_a + e_b) − x(e_a) − x(e_b) = 2Q_ab.
    auto x_of = [](const std::array<long, 8>& u) { return hurwitz_map<long>(u); };
    for (int a = 0; a < 8; ++a) {
        std::array<long, 8> ea{};
        ea[a] = 1;
        const auto xa = x_of(ea);
        for (int j = 0; j < 5; ++j) Q[j][a][a] = static_cast<int>(2 * xa[j]);
        for (int b = a + 1; b < 8; ++b) {
            std::array<long, 8> eb{}, eab{};
            eb[b] = 1;
            eab[a] = 1;
            eab[b] = 1;
            const auto xb = x_of(eb);
            const auto xab = x_of(eab);
            for (int j = 0; j < 5; ++j) {
                const int v = static_cast<int>(xab[j] - xa[j] - xb[j]);
                Q[j][a][b] = v;
                Q[j][b][a] = v;
            }
        }
    }
    return Q;
}

}  // namespace

HMatrix h_matrix(int D) {
    switch (D) {
        case 2: return build(kH2, true);
        case 4: return build(kH4, true);
        case 8: return build(kH8, false);
        default: throw BadDimension("Euler-identity matrices exist only for D = 2, 4, 8 (got " + std::to_string(D) + ")");
    }
}

std::vector<std::vector<Quadratic>> h_gram(const HMatrix& h) {
    std::vector<std::vector<Quadratic>> g(h.D, std::vector<Quadratic>(h.D));
    for (int i = 0; i < h.D; ++i) {
        for (int j = 0; j < h.D; ++j) {
            for (const auto& [ab, c] : quad_of(h, i, j)) g[i][j].terms.push_back({ab.first, ab.second, c});
        }
    }
    return g;
}

bool h_gram_is_scalar(const HMatrix& h) {
    for (int i = 0; i < h.D; ++i) {
        for (int j = 0; j < h.D; ++j) {
            const QuadMap q = quad_of(h, i, j);
            if (i != j) {
                if (!q.empty()) return false;
                continue;
            }
            if (static_cast<int>(q.size()) != h.D) return false;
            for (int a = 0; a < h.D; ++a) {
                auto it = q.find({a, a});
                if (it == q.end() || it->second != 1) return false;
            }
        }
    }
    return true;
}

std::vector<int> hurwitz_matrix_mismatch() {
    const HMatrix h = h_matrix(8);
    const auto Q = component_forms();
    std::vector<int> out;
    for (int j = 0; j < 5; ++j) {
        // Row j of H(u;8)u as a symmetric form, doubled to match Q.
        IntMat8 M{};
        for (int k = 0; k < 8; ++k) {
            const HEntry e = h.rows[j][k];
            M[e.index][k] += e.sign;
            M[k][e.index] += e.sign;
        }
        if (M != Q[j]) out.push_back(j);
    }
    return out;
}

std::vector<std::array<std::array<double, 8>, 8>> hurwitz_fiber_generators() {
    const auto Q = component_forms();
    // Unknowns: K_ab for a < b (28).  Equations: (QK − KQ)_ik = 0.
    std::vector<std::pair<int, int>> vars;
    for (int a = 0; a < 8; ++a) {
        for (int b = a + 1; b < 8; ++b) vars.emplace_back(a, b);
    }
    const int n = static_cast<int>(vars.size());
    auto Kcoef = [&](int a, int b, int v) {
        // coefficient of variable v in K_ab
        if (vars[v] == std::pair{a, b}) return 1;
        if (vars[v] == std::pair{b, a}) return -1;
        return 0;
    };
    std::vector<std::vector<Rational>> rows;
    for (int j = 0; j < 5; ++j) {
        for (int i = 0; i < 8; ++i) {
            for (int k = 0; k < 8; ++k) {
                std::vector<Rational> row(n, Rational(0));
                bool any = false;
                for (int v = 0; v < n; ++v) {
                    long c = 0;
                    for (int m = 0; m < 8; ++m) c += Q[j][i][m] * Kcoef(m, k, v) - Kcoef(i, m, v) * Q[j][m][k];
                    if (c != 0) {
                        row[v] = Rational(c);
                        any = true;
                    }
                }
                if (any) rows.push_back(std::move(row));
            }
        }
    }
    // Reduced row echelon form.
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < n && rank < static_cast<int>(rows.size()); ++c) {
        int p = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (!rows[r][c].is_zero()) {
                p = r;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(rows[p], rows[rank]);
        const Rational inv = Rational(1) / rows[rank][c];
        for (auto& v : rows[rank]) v *= inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            const Rational f = rows[r][c];
            for (int k = 0; k < n; ++k) rows[r][k] -= f * rows[rank][k];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<std::array<std::array<double, 8>, 8>> basis;
    for (int free = 0; free < n; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
        std::vector<Rational> sol(n, Rational(0));
        sol[free] = Rational(1);
        for (int r = 0; r < rank; ++r) sol[pivot_col[r]] = -rows[r][free];
        std::array<std::array<double, 8>, 8> K{};
        for (int v = 0; v < n; ++v) {
            const auto [a, b] = vars[v];
            K[a][b] = sol[v].to_double();
            K[b][a] = -sol[v].to_double();
        }
        basis.push_back(K);
    }
    return basis;
}

Point8 fiber_rotate(const std::array<std::array<double, 8>, 8>& K, double t, const Point8& u) {
    double norm = 0;
    for (const auto& row : K) {
        double s = 0;
        for (double v : row) s += std::abs(v);
        norm = std::max(norm, s * std::abs(t));
    }
    int squarings = 0;
    while (norm > 0.25) {
        norm /= 2;
        ++squarings;
    }
    const double step = t / std::ldexp(1.0, squarings);
    // Taylor series of exp(step·K) applied repeatedly.
    auto apply_exp = [&](const Point8& v) {
        Point8 out = v, term = v;
        for (int k = 1; k < 30; ++k) {
            Point8 next{};
            for (int i = 0; i < 8; ++i) {
                for (int j = 0; j < 8; ++j) next[i] += K[i][j] * term[j];
            }
            for (int i = 0; i < 8; ++i) {
                term[i] = next[i] * step / k;
                out[i] += term[i];
            }
        }
        return out;
    };
    Point8 v = u;
    const long reps = 1L << squarings;
    for (long i = 0; i < reps; ++i) v = apply_exp(v);
    return v;
}

}  // namespace hkit::transforms
