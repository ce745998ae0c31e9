#include "hkit/exact/gaussian_rational.hpp"

#include <stdexcept>

namespace hkit::exact {

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    if (o.im_.is_zero()) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    if (o.re_.is_zero()) {
        // (a + bi)(ci) = -bc + aci
        Rational nre = -(im_ * o.im_);
        im_ = re_ * o.im_;
        re_ = std::move(nre);
        return *this;
    }
    Rational nre = re_ * o.re_ - im_ * o.im_;
    Rational nim = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(nre);
    im_ = std::move(nim);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    if (o.is_zero()) throw std::domain_error("GaussRat: division by zero");
    Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
    *this *= o.conj();
    re_ /= norm;
    im_ /= norm;
    return *this;
}

std::string GaussRat::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string imag = im_.is_one() ? "i" : (-im_).is_one() ? "-i" : im_.to_string() + "i";
    if (re_.is_zero()) return imag;
    std::string sep = im_.sign() < 0 ? "" : "+";
    return "(" + re_.to_string() + sep + imag + ")";
}

}  // namespace hkit::exact
