#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hkit/exact/gaussian_rational.hpp"

namespace hkit::exact {

/// Gauge chart of an expression.  The axis factor is w = r + x0 on the
/// A-chart (singular on the non-positive x0 semiaxis) and w = r - x0 on
/// the B-chart.
enum class Chart : std::uint8_t { Plus, Minus };

inline int chart_sign(Chart c) { return c == Chart::Plus ? 1 : -1; }
const char* chart_name(Chart c);

using Point5 = std::array<double, 5>;
using ExactPoint5 = std::array<Rational, 5>;

/// Power product x1^a x2^b x3^c x4^d r^p w^q, packed into one word.
///
/// Byte k holds the exponent of variable k; the r and w exponents are
/// stored with a bias of 128 so that negative powers sort and add like
/// the others.  Within the canonical ring basis d is 0 or 1.
class Monomial {
public:
    enum Var : int { X1 = 0, X2, X3, X4, R, W };
    static constexpr int kVars = 6;

    Monomial() : key_(kBias) {}
    static Monomial from_exponents(const std::array<int, kVars>& e);

    int exponent(int var) const {
        int raw = static_cast<int>((key_ >> (8 * var)) & 0xff);
        return var >= R ? raw - 128 : raw;
    }
    std::array<int, kVars> exponents() const;
    std::uint64_t key() const { return key_; }

    /// Product without ring reduction.  The x4 exponent may reach 2.
    Monomial operator*(const Monomial& o) const;
    Monomial with_exponent(int var, int value) const;

    friend bool operator==(Monomial a, Monomial b) { return a.key_ == b.key_; }
    friend bool operator<(Monomial a, Monomial b) { return a.key_ < b.key_; }

private:
    static constexpr std::uint64_t kBias = (std::uint64_t{128} << 32) | (std::uint64_t{128} << 40);
    explicit Monomial(std::uint64_t k) : key_(k) {}
    std::uint64_t key_;
};

/// A term in the raw input shape: coefficient times x0^e0..x4^e4 r^p (r±x0)^q.
/// Any exponents are accepted; `normalize` reduces them to canonical form.
struct RawTerm {
    GaussRat coefficient;
    std::array<int, 5> x{};
    int r_power = 0;
    int axis_power = 0;
};

/// Exact element of ℚ(i)[x0..x4, r, 1/r, 1/(r±x0)] / (r² − Σ xᵢ²).
///
/// Internally the ring is written over the variables x1..x4, r and
/// w = r ± x0, in which the relation reads x4² = 2rw − w² − x1² − x2² − x3²
/// and both admissible denominators r and w are plain variables.  A
/// canonical element is then a Laurent polynomial in (r, w) with x4-degree
/// at most one; that representation is unique, so equality is structural
/// and never tolerance based.  Values are immutable after construction.
class ScalarExpr {
public:
    using Term = std::pair<Monomial, GaussRat>;

    explicit ScalarExpr(Chart chart = Chart::Plus) : chart_(chart) {}

    static ScalarExpr constant(const GaussRat& c, Chart chart = Chart::Plus);
    /// Cartesian coordinate x_i, i in 0..4.
    static ScalarExpr coordinate(int i, Chart chart = Chart::Plus);
    static ScalarExpr radius_power(int p, Chart chart = Chart::Plus);
    /// (r ± x0)^q, sign fixed by the chart.
    static ScalarExpr axis_power(int q, Chart chart = Chart::Plus);
    static ScalarExpr from_raw(const std::vector<RawTerm>& raw, Chart chart = Chart::Plus);

    Chart chart() const { return chart_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Degree in 1/r and 1/w of the canonical form (for diagnostics).
    std::pair<int, int> pole_orders() const;

    ScalarExpr operator-() const;
    ScalarExpr& operator+=(const ScalarExpr& o);
    ScalarExpr& operator-=(const ScalarExpr& o);
    ScalarExpr& operator*=(const GaussRat& c);

    friend ScalarExpr operator+(ScalarExpr a, const ScalarExpr& b) { return a += b; }
    friend ScalarExpr operator-(ScalarExpr a, const ScalarExpr& b) { return a -= b; }
    friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
    friend ScalarExpr operator*(ScalarExpr a, const GaussRat& c) { return a *= c; }
    friend ScalarExpr operator*(const GaussRat& c, ScalarExpr a) { return a *= c; }

    ScalarExpr pow(unsigned n) const;

    /// Formal partial derivative ∂/∂x_axis, axis in 0..4.
    ScalarExpr derivative(int axis) const;

    /// Float value at a point; throws SingularPoint on a vanishing denominator.
    std::complex<double> evaluate(const Point5& p) const;
    /// Exact value when r is rational at p, std::nullopt otherwise.
    std::optional<GaussRat> evaluate_exact(const ExactPoint5& p) const;

    std::string to_string() const;

    friend bool operator==(const ScalarExpr& a, const ScalarExpr& b);
    friend bool operator!=(const ScalarExpr& a, const ScalarExpr& b) { return !(a == b); }

private:
    friend class ScalarAccumulator;
    Chart chart_;
    std::vector<Term> terms_;  // sorted by monomial, no zero coefficients
};

/// Collects unsorted terms and produces a canonical ScalarExpr.
class ScalarAccumulator {
public:
    explicit ScalarAccumulator(Chart chart) : chart_(chart) {}

    /// Adds c·m, reducing an x4² factor through the ring relation.
    void add(Monomial m, GaussRat c);
    void add(const ScalarExpr& e);
    void add_scaled(const ScalarExpr& e, const GaussRat& c);
    /// Adds a·b.
    void add_product(const ScalarExpr& a, const ScalarExpr& b, const GaussRat& scale = GaussRat(1));
    std::size_t pending() const { return raw_.size(); }
    Chart chart() const { return chart_; }
    ScalarExpr finish();

private:
    Chart chart_;
    std::vector<ScalarExpr::Term> raw_;
};

void require_same_chart(const ScalarExpr& a, const ScalarExpr& b);

/// Canonical form; the identity on already-canonical values.
ScalarExpr normalize(const ScalarExpr& e);
ScalarExpr differentiate(const ScalarExpr& e, int axis);
bool equals(const ScalarExpr& a, const ScalarExpr& b);

}  // namespace hkit::exact
