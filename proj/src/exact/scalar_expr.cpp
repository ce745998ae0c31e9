#include "hkit/exact/scalar_expr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hkit/errors.hpp"

namespace hkit::exact {

const char* chart_name(Chart c) { return c == Chart::Plus ? "A" : "B"; }

// ---------------------------------------------------------------- Monomial

Monomial Monomial::from_exponents(const std::array<int, kVars>& e) {
    std::uint64_t k = 0;
    for (int v = 0; v < kVars; ++v) {
        int raw = v >= R ? e[v] + 128 : e[v];
        if (raw < 0 || raw > 255) throw std::overflow_error("Monomial: exponent out of range");
        k |= static_cast<std::uint64_t>(raw) << (8 * v);
    }
    return Monomial(k);
}

std::array<int, Monomial::kVars> Monomial::exponents() const {
    std::array<int, kVars> e{};
    for (int v = 0; v < kVars; ++v) e[v] = exponent(v);
    return e;
}

Monomial Monomial::operator*(const Monomial& o) const {
    // Field-wise addition; biased fields need the bias removed once.
    std::uint64_t sum = key_ + o.key_ - kBias;
    // Detect a carry or borrow across byte boundaries by re-checking each field.
    for (int v = 0; v < kVars; ++v) {
        int a = exponent(v), b = o.exponent(v);
        int c = a + b;
        int raw = v >= R ? c + 128 : c;
        if (raw < 0 || raw > 255) throw std::overflow_error("Monomial: exponent out of range");
    }
    return Monomial(sum);
}

Monomial Monomial::with_exponent(int var, int value) const {
    auto e = exponents();
    e[var] = value;
    return from_exponents(e);
}

// ------------------------------------------------------- ScalarAccumulator

namespace {

bool has_axis(const std::vector<ScalarExpr::Term>& terms) {
    return std::any_of(terms.begin(), terms.end(),
                       [](const ScalarExpr::Term& t) { return t.first.exponent(Monomial::W) != 0; });
}

// x4² = 2rw − w² − x1² − x2² − x3²
const std::array<std::pair<std::array<int, Monomial::kVars>, int>, 5> kX4Squared = {{
    {{0, 0, 0, 0, 1, 1}, 2},
    {{0, 0, 0, 0, 0, 2}, -1},
    {{2, 0, 0, 0, 0, 0}, -1},
    {{0, 2, 0, 0, 0, 0}, -1},
    {{0, 0, 2, 0, 0, 0}, -1},
}};

}  // namespace

void ScalarAccumulator::add(Monomial m, GaussRat c) {
    if (c.is_zero()) return;
    int d = m.exponent(Monomial::X4);
    if (d < 2) {
        raw_.emplace_back(m, std::move(c));
        return;
    }
    Monomial base = m.with_exponent(Monomial::X4, d - 2);
    for (const auto& [exps, k] : kX4Squared) {
        add(base * Monomial::from_exponents(exps), c * GaussRat(k));
    }
}

void ScalarAccumulator::add(const ScalarExpr& e) {
    raw_.insert(raw_.end(), e.terms_.begin(), e.terms_.end());
}

void ScalarAccumulator::add_scaled(const ScalarExpr& e, const GaussRat& c) {
    if (c.is_zero()) return;
    raw_.reserve(raw_.size() + e.terms_.size());
    for (const auto& [m, k] : e.terms_) raw_.emplace_back(m, k * c);
}

void ScalarAccumulator::add_product(const ScalarExpr& a, const ScalarExpr& b, const GaussRat& scale) {
    if (a.is_zero() || b.is_zero() || scale.is_zero()) return;
    bool unit = scale == GaussRat(1);
    raw_.reserve(raw_.size() + a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
        GaussRat cas = unit ? ca : ca * scale;
        for (const auto& [mb, cb] : b.terms_) add(ma * mb, cas * cb);
    }
}

ScalarExpr ScalarAccumulator::finish() {
    std::sort(raw_.begin(), raw_.end(),
              [](const ScalarExpr::Term& x, const ScalarExpr::Term& y) { return x.first < y.first; });
    ScalarExpr out(chart_);
    out.terms_.reserve(raw_.size());
    for (auto& t : raw_) {
        if (!out.terms_.empty() && out.terms_.back().first == t.first) {
            out.terms_.back().second += t.second;
            if (out.terms_.back().second.is_zero()) out.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            out.terms_.push_back(std::move(t));
        }
    }
    raw_.clear();
    return out;
}

// --------------------------------------------------------------- ScalarExpr

void require_same_chart(const ScalarExpr& a, const ScalarExpr& b) {
    if (a.chart() == b.chart()) return;
    // Expressions free of the axis factor denote the same function in both charts.
    if (!has_axis(a.terms()) || !has_axis(b.terms())) return;
    throw ChartMismatch(std::string("expressions from charts ") + chart_name(a.chart()) + " and " +
                        chart_name(b.chart()) + " combined");
}

namespace {

Chart combined_chart(const ScalarExpr& a, const ScalarExpr& b) {
    require_same_chart(a, b);
    if (a.chart() == b.chart()) return a.chart();
    return has_axis(a.terms()) ? a.chart() : b.chart();
}

}  // namespace

ScalarExpr ScalarExpr::constant(const GaussRat& c, Chart chart) {
    ScalarExpr e(chart);
    if (!c.is_zero()) e.terms_.emplace_back(Monomial(), c);
    return e;
}

ScalarExpr ScalarExpr::coordinate(int i, Chart chart) {
    if (i < 0 || i > 4) throw std::out_of_range("coordinate index");
    ScalarExpr e(chart);
    if (i == 0) {
        // x0 = σ(w − r)
        int s = chart_sign(chart);
        ScalarAccumulator acc(chart);
        acc.add(Monomial::from_exponents({0, 0, 0, 0, 0, 1}), GaussRat(s));
        acc.add(Monomial::from_exponents({0, 0, 0, 0, 1, 0}), GaussRat(-s));
        return acc.finish();
    }
    std::array<int, Monomial::kVars> ex{};
    ex[i - 1] = 1;
    e.terms_.emplace_back(Monomial::from_exponents(ex), GaussRat(1));
    return e;
}

ScalarExpr ScalarExpr::radius_power(int p, Chart chart) {
    ScalarExpr e(chart);
    e.terms_.emplace_back(Monomial::from_exponents({0, 0, 0, 0, p, 0}), GaussRat(1));
    return e;
}

ScalarExpr ScalarExpr::axis_power(int q, Chart chart) {
    ScalarExpr e(chart);
    e.terms_.emplace_back(Monomial::from_exponents({0, 0, 0, 0, 0, q}), GaussRat(1));
    return e;
}

ScalarExpr ScalarExpr::from_raw(const std::vector<RawTerm>& raw, Chart chart) {
    ScalarExpr sum(chart);
    for (const auto& t : raw) {
        ScalarExpr term = constant(t.coefficient, chart);
        for (int i = 0; i < 5; ++i) {
            if (t.x[i] < 0) throw std::invalid_argument("negative coordinate exponent");
            if (t.x[i] > 0) term = term * coordinate(i, chart).pow(static_cast<unsigned>(t.x[i]));
        }
        term = term * radius_power(t.r_power, chart) * axis_power(t.axis_power, chart);
        sum += term;
    }
    return sum;
}

bool ScalarExpr::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial());
}

std::pair<int, int> ScalarExpr::pole_orders() const {
    int pr = 0, pw = 0;
    for (const auto& [m, c] : terms_) {
        pr = std::max(pr, -m.exponent(Monomial::R));
        pw = std::max(pw, -m.exponent(Monomial::W));
    }
    return {pr, pw};
}

ScalarExpr ScalarExpr::operator-() const {
    ScalarExpr e(*this);
    for (auto& t : e.terms_) t.second = -t.second;
    return e;
}

ScalarExpr& ScalarExpr::operator+=(const ScalarExpr& o) {
    if (o.is_zero()) return *this;
    Chart c = combined_chart(*this, o);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == ae || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            GaussRat s = a->second + b->second;
            if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    chart_ = c;
    return *this;
}

ScalarExpr& ScalarExpr::operator-=(const ScalarExpr& o) { return *this += -o; }

ScalarExpr& ScalarExpr::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
    ScalarAccumulator acc(combined_chart(a, b));
    acc.add_product(a, b);
    return acc.finish();
}

ScalarExpr ScalarExpr::pow(unsigned n) const {
    ScalarExpr result = constant(GaussRat(1), chart_);
    ScalarExpr base = *this;
    while (n > 0) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n > 0) base = base * base;
    }
    return result;
}

ScalarExpr ScalarExpr::derivative(int axis) const {
    if (axis < 0 || axis > 4) throw std::out_of_range("derivative axis");
    ScalarAccumulator acc(chart_);
    const int s = chart_sign(chart_);
    for (const auto& [m, c] : terms_) {
        auto e = m.exponents();
        const int p = e[Monomial::R];
        const int q = e[Monomial::W];
        if (axis == 0) {
            // ∂r/∂x0 = σ(w/r − 1), ∂w/∂x0 = σw/r
            if (p != 0) {
                auto e1 = e;
                e1[Monomial::R] -= 2;
                e1[Monomial::W] += 1;
                acc.add(Monomial::from_exponents(e1), c * GaussRat(s * p));
            }
            if (q - p != 0) {
                auto e2 = e;
                e2[Monomial::R] -= 1;
                acc.add(Monomial::from_exponents(e2), c * GaussRat(s * (q - p)));
            }
            continue;
        }
        const int v = axis - 1;
        if (e[v] > 0) {
            auto e1 = e;
            e1[v] -= 1;
            acc.add(Monomial::from_exponents(e1), c * GaussRat(e[v]));
        }
        // ∂r/∂xi = xi/r, ∂w/∂xi = xi/r for i ≥ 1
        if (p != 0) {
            auto e2 = e;
            e2[v] += 1;
            e2[Monomial::R] -= 2;
            acc.add(Monomial::from_exponents(e2), c * GaussRat(p));
        }
        if (q != 0) {
            auto e3 = e;
            e3[v] += 1;
            e3[Monomial::R] -= 1;
            e3[Monomial::W] -= 1;
            acc.add(Monomial::from_exponents(e3), c * GaussRat(q));
        }
    }
    return acc.finish();
}

std::complex<double> ScalarExpr::evaluate(const Point5& p) const {
    using ld = long double;
    ld s = 0;
    for (double v : p) s += static_cast<ld>(v) * v;
    const ld r = std::sqrt(s);
    const ld w = r + chart_sign(chart_) * static_cast<ld>(p[0]);
    const std::array<ld, Monomial::kVars> vals = {p[1], p[2], p[3], p[4], r, w};
    std::complex<ld> sum = 0;
    for (const auto& [m, c] : terms_) {
        ld prod = 1;
        for (int v = 0; v < Monomial::kVars; ++v) {
            int k = m.exponent(v);
            if (k == 0) continue;
            if (k < 0 && vals[v] == 0) {
                throw SingularPoint(v == Monomial::R ? "r = 0 in a denominator"
                                                     : std::string("axis factor r") +
                                                           (chart_ == Chart::Plus ? "+" : "-") +
                                                           "x0 vanishes in a denominator");
            }
            prod *= std::pow(vals[v], k);
        }
        sum += c.to_complex_ld() * prod;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

std::optional<GaussRat> ScalarExpr::evaluate_exact(const ExactPoint5& p) const {
    Rational s;
    for (const auto& v : p) s += v * v;
    Rational r;
    if (!s.exact_sqrt(r)) return std::nullopt;
    Rational w = chart_ == Chart::Plus ? r + p[0] : r - p[0];
    const std::array<Rational, Monomial::kVars> vals = {p[1], p[2], p[3], p[4], r, w};
    GaussRat sum;
    for (const auto& [m, c] : terms_) {
        Rational prod(1);
        for (int v = 0; v < Monomial::kVars; ++v) {
            int k = m.exponent(v);
            if (k == 0) continue;
            if (k < 0 && vals[v].is_zero()) {
                throw SingularPoint(v == Monomial::R ? "r = 0 in a denominator"
                                                     : "axis factor vanishes in a denominator");
            }
            Rational base = k < 0 ? Rational(1) / vals[v] : vals[v];
            for (int j = 0; j < std::abs(k); ++j) prod *= base;
        }
        sum += c * GaussRat(prod);
    }
    return sum;
}

std::string ScalarExpr::to_string() const {
    if (terms_.empty()) return "0";
    static const char* names[] = {"x1", "x2", "x3", "x4", "r", nullptr};
    const std::string axis = chart_ == Chart::Plus ? "(r+x0)" : "(r-x0)";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string();
        for (int v = 0; v < Monomial::kVars; ++v) {
            int k = m.exponent(v);
            if (k == 0) continue;
            os << '*' << (names[v] ? names[v] : axis.c_str());
            if (k != 1) os << '^' << k;
        }
    }
    return os.str();
}

bool operator==(const ScalarExpr& a, const ScalarExpr& b) {
    require_same_chart(a, b);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
        if (!(a.terms_[k].first == b.terms_[k].first) || a.terms_[k].second != b.terms_[k].second) return false;
    }
    return true;
}

ScalarExpr normalize(const ScalarExpr& e) {
    // Construction already yields the canonical form; re-accumulating makes
    // the operation usable on hand-built inputs and keeps it idempotent.
    ScalarAccumulator acc(e.chart());
    for (const auto& [m, c] : e.terms()) acc.add(m, c);
    return acc.finish();
}

ScalarExpr differentiate(const ScalarExpr& e, int axis) { return e.derivative(axis); }

bool equals(const ScalarExpr& a, const ScalarExpr& b) { return (a - b).is_zero(); }

}  // namespace hkit::exact
