#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hkit/exact/scalar_expr.hpp"
#include "hkit/operators/isospin.hpp"

namespace hkit::operators {

using exact::Chart;
using exact::ScalarExpr;

class OperatorExpr;
OperatorExpr compose(const OperatorExpr& a, const OperatorExpr& b, std::size_t term_budget);

/// Multi-index over ∂0..∂4.
struct DerivIndex {
    std::array<std::uint8_t, 5> n{};

    static DerivIndex axis(int i) {
        DerivIndex d;
        d.n.at(static_cast<std::size_t>(i)) = 1;
        return d;
    }
    int order() const { return n[0] + n[1] + n[2] + n[3] + n[4]; }
    std::uint32_t key() const {
        std::uint32_t k = 0;
        for (int i = 0; i < 5; ++i) k |= static_cast<std::uint32_t>(n[i]) << (4 * i);
        return k;
    }
    static DerivIndex from_key(std::uint32_t k) {
        DerivIndex d;
        for (int i = 0; i < 5; ++i) d.n[i] = static_cast<std::uint8_t>((k >> (4 * i)) & 0xf);
        return d;
    }
    std::string to_string() const;
};

/// Finite sum of  coefficient · T-word · ∂^α  with coefficients on the left,
/// isospin words in PBW order and like terms merged.  Isospin generators
/// commute with coordinates and derivatives, so this ordering is canonical.
class OperatorExpr {
public:
    struct Term {
        std::uint64_t key;  // derivative index in the high word, isospin word in the low word
        ScalarExpr coeff;

        DerivIndex deriv() const { return DerivIndex::from_key(static_cast<std::uint32_t>(key >> 32)); }
        IsospinWord iso() const { return IsospinWord::from_key(static_cast<std::uint32_t>(key & 0xffffffffU)); }
    };

    explicit OperatorExpr(Chart chart = Chart::Plus) : chart_(chart) {}

    static OperatorExpr identity(Chart chart = Chart::Plus);
    static OperatorExpr multiply_by(const ScalarExpr& f);
    /// ∂/∂x_i.
    static OperatorExpr partial(int i, Chart chart = Chart::Plus);
    static OperatorExpr isospin(const IsoPoly& p, Chart chart = Chart::Plus);
    /// Generator T_k, k in 1..3.
    static OperatorExpr generator(int k, Chart chart = Chart::Plus);
    static OperatorExpr from_term(const ScalarExpr& c, IsospinWord w, DerivIndex d);

    Chart chart() const { return chart_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int order() const;
    /// Total number of monomials across all coefficients.
    std::size_t weight() const;
    std::string to_string() const;

    OperatorExpr operator-() const;
    OperatorExpr& operator+=(const OperatorExpr& o);
    OperatorExpr& operator-=(const OperatorExpr& o);
    OperatorExpr& operator*=(const exact::GaussRat& c);
    friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
    friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
    friend OperatorExpr operator*(OperatorExpr a, const exact::GaussRat& c) { return a *= c; }
    friend OperatorExpr operator*(const exact::GaussRat& c, OperatorExpr a) { return a *= c; }
    /// f·A: multiplication by a function on the left.
    friend OperatorExpr operator*(const ScalarExpr& f, const OperatorExpr& a);
    /// Operator product A∘B.
    friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);

    friend bool operator==(const OperatorExpr& a, const OperatorExpr& b) { return (a - b).is_zero(); }

private:
    friend class OperatorAccumulator;
    friend OperatorExpr compose(const OperatorExpr& a, const OperatorExpr& b, std::size_t term_budget);
    Chart chart_;
    std::vector<Term> terms_;  // sorted by key, nonzero coefficients
};

/// Composition with an optional cap on the number of generated monomials;
/// exceeding the cap throws TermBudgetExceeded.
OperatorExpr compose(const OperatorExpr& a, const OperatorExpr& b, std::size_t term_budget = 0);
OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b, std::size_t term_budget = 0);

/// Function with values in the enveloping algebra: Σ_w f_w ⊗ w.
class Field {
public:
    using Entry = std::pair<IsospinWord, ScalarExpr>;

    explicit Field(Chart chart = Chart::Plus) : chart_(chart) {}
    Field(const ScalarExpr& f, IsospinWord w = {});

    Chart chart() const { return chart_; }
    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    ScalarExpr component(IsospinWord w) const;
    std::size_t weight() const;
    std::string to_string() const;

    Field& operator+=(const Field& o);
    Field& operator*=(const exact::GaussRat& c);
    friend Field operator+(Field a, const Field& b) { return a += b; }
    friend Field operator-(Field a, const Field& b) { return a += (b * exact::GaussRat(-1)); }
    friend Field operator*(Field a, const exact::GaussRat& c) { return a *= c; }
    /// Left multiplication of the algebra part.
    friend Field operator*(const IsoPoly& p, const Field& f);
    friend bool operator==(const Field& a, const Field& b) { return (a - b).is_zero(); }

private:
    friend Field apply(const OperatorExpr& op, const Field& f);
    Chart chart_;
    std::vector<Entry> entries_;  // sorted by word
};

/// A acting on f with every derivative executed; isospin words of the
/// operator multiply the algebra part of f from the left.
Field apply(const OperatorExpr& op, const Field& f);

}  // namespace hkit::operators
