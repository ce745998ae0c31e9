#pragma once

#include <complex>
#include <string>

#include "hkit/exact/rational.hpp"

namespace hkit::exact {

/// Exact element a + b·i of ℚ(i).
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussRat(std::int64_t re) : re_(re) {}         // NOLINT(google-explicit-constructor)
    GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRat conj() const { return {re_, -im_}; }
    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
    std::complex<long double> to_complex_ld() const { return {re_.to_long_double(), im_.to_long_double()}; }
    std::string to_string() const;

    GaussRat operator-() const { return {-re_, -im_}; }
    GaussRat& operator+=(const GaussRat& o) {
        re_ += o.re_;
        if (!o.im_.is_zero()) im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re_ -= o.re_;
        if (!o.im_.is_zero()) im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

private:
    Rational re_;
    Rational im_;
};

}  // namespace hkit::exact
