#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <memory>

#include <gmpxx.h>

namespace hkit::exact {

/// Arbitrary-precision rational with an inline 64-bit fast path.
///
/// Values that fit in a reduced int64 fraction stay inline; any operation
/// whose result overflows is redone in GMP and the value is demoted back
/// to the inline form when it fits again.  The two forms are never mixed
/// for the same value, so equality is a structural comparison.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : Rational(n, 1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);

    static Rational parse(const std::string& text);

    bool is_zero() const { return is_small() && small_.num == 0; }
    bool is_one() const { return is_small() && small_.num == 1 && small_.den == 1; }
    bool is_integer() const;
    int sign() const;

    mpq_class to_mpq() const;
    double to_double() const;
    long double to_long_double() const;
    std::string to_string() const;

    /// Exact square root when both numerator and denominator are perfect squares.
    bool exact_sqrt(Rational& out) const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    struct Small {
        std::int64_t num = 0;
        std::int64_t den = 1;
    };

    bool is_small() const { return !big_; }
    void set_big(mpq_class q);

    Small small_{};
    // Engaged only when the value does not fit the inline form.
    std::unique_ptr<mpq_class> big_;

public:
    Rational(const Rational& o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            small_ = o.small_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;
};

}  // namespace hkit::exact
