#pragma once

#include <array>
#include <cmath>

namespace hkit::topology {

/// Forward-mode dual number carrying N partial derivatives.
template <int N>
struct Dual {
    double v = 0;
    std::array<double, N> d{};

    Dual() = default;
    Dual(double value) : v(value) {}
    static Dual variable(double value, int k) {
        Dual x(value);
        x.d[k] = 1;
        return x;
    }

    friend Dual operator+(Dual a, const Dual& b) {
        a.v += b.v;
        for (int k = 0; k < N; ++k) a.d[k] += b.d[k];
        return a;
    }
    friend Dual operator-(Dual a, const Dual& b) {
        a.v -= b.v;
        for (int k = 0; k < N; ++k) a.d[k] -= b.d[k];
        return a;
    }
    friend Dual operator*(const Dual& a, const Dual& b) {
        Dual c(a.v * b.v);
        for (int k = 0; k < N; ++k) c.d[k] = a.d[k] * b.v + a.v * b.d[k];
        return c;
    }
    friend Dual operator/(const Dual& a, double s) {
        Dual c(a.v / s);
        for (int k = 0; k < N; ++k) c.d[k] = a.d[k] / s;
        return c;
    }
};

template <int N>
Dual<N> sin(const Dual<N>& a) {
    Dual<N> c(std::sin(a.v));
    const double cv = std::cos(a.v);
    for (int k = 0; k < N; ++k) c.d[k] = cv * a.d[k];
    return c;
}

template <int N>
Dual<N> cos(const Dual<N>& a) {
    Dual<N> c(std::cos(a.v));
    const double sv = -std::sin(a.v);
    for (int k = 0; k < N; ++k) c.d[k] = sv * a.d[k];
    return c;
}

}  // namespace hkit::topology
