#include "hkit/exact/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hkit::exact {

namespace {

using i128 = __int128;

bool fits64(i128 v) {
    return v >= static_cast<i128>(INT64_MIN) + 1 && v <= static_cast<i128>(INT64_MAX);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpq_class mpq_from(std::int64_t n, std::int64_t d) {
    mpz_class num, den;
    mpz_set_si(num.get_mpz_t(), n);
    mpz_set_si(den.get_mpz_t(), d);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    i128 nn = n, dd = d;
    if (dd < 0) {
        nn = -nn;
        dd = -dd;
    }
    i128 g = gcd128(nn, dd);
    if (g > 1) {
        nn /= g;
        dd /= g;
    }
    if (fits64(nn) && fits64(dd)) {
        small_ = {static_cast<std::int64_t>(nn), static_cast<std::int64_t>(dd)};
    } else {
        set_big(mpq_from(n, d));
    }
}

Rational::Rational(const mpq_class& q) { set_big(q); }

void Rational::set_big(mpq_class q) {
    q.canonicalize();
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t()) &&
        mpz_get_si(n.get_mpz_t()) != INT64_MIN) {
        small_ = {mpz_get_si(n.get_mpz_t()), mpz_get_si(d.get_mpz_t())};
        big_.reset();
    } else {
        small_ = {};
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) {
        // Accept decimals such as "0.25".
        auto dot = text.find('.');
        if (dot == std::string::npos) throw std::invalid_argument("not a rational: " + text);
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        mpz_class num;
        if (num.set_str(digits, 10) != 0) throw std::invalid_argument("not a rational: " + text);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
        q = mpq_class(num, den);
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(q);
}

bool Rational::is_integer() const {
    return is_small() ? small_.den == 1 : big_->get_den() == 1;
}

int Rational::sign() const {
    if (is_small()) return (small_.num > 0) - (small_.num < 0);
    return sgn(*big_);
}

mpq_class Rational::to_mpq() const { return is_small() ? mpq_from(small_.num, small_.den) : *big_; }

double Rational::to_double() const {
    return is_small() ? static_cast<double>(small_.num) / static_cast<double>(small_.den) : big_->get_d();
}

long double Rational::to_long_double() const {
    if (is_small()) return static_cast<long double>(small_.num) / static_cast<long double>(small_.den);
    return static_cast<long double>(big_->get_d());
}

std::string Rational::to_string() const {
    if (is_small()) {
        return small_.den == 1 ? std::to_string(small_.num)
                               : std::to_string(small_.num) + "/" + std::to_string(small_.den);
    }
    return big_->get_str();
}

bool Rational::exact_sqrt(Rational& out) const {
    mpq_class q = to_mpq();
    if (sgn(q) < 0) return false;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    out = Rational(mpq_class(sn, sd));
    return true;
}

Rational Rational::operator-() const {
    Rational r(*this);
    if (r.is_small()) {
        r.small_.num = -r.small_.num;
    } else {
        r.set_big(-*r.big_);
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (is_small() && o.is_small()) {
        if (small_.den == o.small_.den) {
            i128 n = static_cast<i128>(small_.num) + o.small_.num;
            if (small_.den == 1 && fits64(n)) {
                small_.num = static_cast<std::int64_t>(n);
                return *this;
            }
            i128 d = small_.den;
            i128 g = gcd128(n, d);
            if (g > 1) {
                n /= g;
                d /= g;
            }
            if (fits64(n)) {
                small_ = {static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
                if (small_.num == 0) small_.den = 1;
                return *this;
            }
        } else {
            i128 n = static_cast<i128>(small_.num) * o.small_.den + static_cast<i128>(o.small_.num) * small_.den;
            i128 d = static_cast<i128>(small_.den) * o.small_.den;
            i128 g = gcd128(n, d);
            if (g > 1) {
                n /= g;
                d /= g;
            }
            if (n == 0) d = 1;
            if (fits64(n) && fits64(d)) {
                small_ = {static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
                return *this;
            }
        }
    }
    set_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (is_small() && o.is_small()) {
        if (small_.num == 0 || o.small_.num == 0) {
            small_ = {0, 1};
            return *this;
        }
        i128 n1 = small_.num, d1 = small_.den, n2 = o.small_.num, d2 = o.small_.den;
        if (d1 != 1 || d2 != 1) {
            i128 g1 = gcd128(n1, d2);
            i128 g2 = gcd128(n2, d1);
            if (g1 > 1) {
                n1 /= g1;
                d2 /= g1;
            }
            if (g2 > 1) {
                n2 /= g2;
                d1 /= g2;
            }
        }
        i128 n = n1 * n2, d = d1 * d2;
        if (fits64(n) && fits64(d)) {
            small_ = {static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
            return *this;
        }
    }
    set_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    if (o.is_small()) {
        Rational inv;
        inv.small_ = o.small_.num < 0 ? Small{-o.small_.den, -o.small_.num} : Small{o.small_.den, o.small_.num};
        if (o.small_.num != INT64_MIN) return *this *= inv;
    }
    set_big(to_mpq() / o.to_mpq());
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (a.is_small() != b.is_small()) return false;
    if (a.is_small()) return a.small_.num == b.small_.num && a.small_.den == b.small_.den;
    return *a.big_ == *b.big_;
}

bool operator<(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
        return static_cast<i128>(a.small_.num) * b.small_.den < static_cast<i128>(b.small_.num) * a.small_.den;
    }
    return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace hkit::exact
