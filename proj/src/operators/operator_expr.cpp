#include "hkit/operators/operator_expr.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "hkit/errors.hpp"

namespace hkit::operators {

using exact::GaussRat;
using exact::ScalarAccumulator;

std::string DerivIndex::to_string() const {
    std::string s;
    for (int i = 0; i < 5; ++i) {
        if (n[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += "d" + std::to_string(i);
        if (n[i] > 1) s += "^" + std::to_string(n[i]);
    }
    return s;
}

namespace {

std::uint64_t make_key(DerivIndex d, IsospinWord w) {
    return (static_cast<std::uint64_t>(d.key()) << 32) | w.key();
}

bool coefficients_axis_free(const std::vector<OperatorExpr::Term>& terms) {
    for (const auto& t : terms) {
        for (const auto& [m, c] : t.coeff.terms()) {
            if (m.exponent(exact::Monomial::W) != 0) return false;
        }
    }
    return true;
}

Chart merged_chart(const OperatorExpr& a, const OperatorExpr& b) {
    if (a.chart() == b.chart()) return a.chart();
    bool fa = coefficients_axis_free(a.terms());
    bool fb = coefficients_axis_free(b.terms());
    if (!fa && !fb) {
        throw ChartMismatch(std::string("operators from charts ") + exact::chart_name(a.chart()) + " and " +
                            exact::chart_name(b.chart()) + " combined");
    }
    return fa ? b.chart() : a.chart();
}

std::int64_t binomial(int n, int k) {
    std::int64_t r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

/// Keyed accumulation of scalar coefficients with periodic compaction.
class KeyedAccumulator {
public:
    KeyedAccumulator(Chart chart, std::size_t budget) : chart_(chart), budget_(budget) {}

    void add_scaled(std::uint64_t key, const ScalarExpr& e, const GaussRat& c) {
        auto it = slots_.try_emplace(key, chart_).first;
        it->second.add_scaled(e, c);
        if (it->second.pending() > kCompactAt) {
            ScalarExpr done = it->second.finish();
            it->second.add(done);
        }
        generated_ += e.size();
        if (budget_ != 0 && generated_ > budget_) {
            throw TermBudgetExceeded("operator composition exceeded the term budget of " + std::to_string(budget_));
        }
    }

    template <typename Emit>
    void drain(Emit&& emit) {
        std::vector<std::uint64_t> keys;
        keys.reserve(slots_.size());
        for (const auto& kv : slots_) keys.push_back(kv.first);
        std::sort(keys.begin(), keys.end());
        for (auto k : keys) {
            ScalarExpr e = slots_.at(k).finish();
            if (!e.is_zero()) emit(k, std::move(e));
        }
        slots_.clear();
    }

private:
    static constexpr std::size_t kCompactAt = 1U << 15;
    Chart chart_;
    std::size_t budget_;
    std::size_t generated_ = 0;
    std::unordered_map<std::uint64_t, ScalarAccumulator> slots_;
};

/// Memoized mixed partial derivatives of one coefficient.
class DerivativeCache {
public:
    explicit DerivativeCache(const ScalarExpr& base) { table_.emplace(0U, base); }

    const ScalarExpr& get(const DerivIndex& d) {
        std::uint32_t k = d.key();
        if (auto it = table_.find(k); it != table_.end()) return it->second;
        int axis = 0;
        while (d.n[axis] == 0) ++axis;
        DerivIndex lower = d;
        lower.n[axis] -= 1;
        ScalarExpr value = get(lower).derivative(axis);
        return table_.emplace(k, std::move(value)).first->second;
    }

private:
    std::unordered_map<std::uint32_t, ScalarExpr> table_;
};

template <typename F>
void for_each_subindex(const DerivIndex& alpha, F&& f) {
    DerivIndex g;
    while (true) {
        f(g);
        int i = 0;
        while (i < 5) {
            if (g.n[i] < alpha.n[i]) {
                ++g.n[i];
                break;
            }
            g.n[i] = 0;
            ++i;
        }
        if (i == 5) return;
    }
}

}  // namespace

// ------------------------------------------------------------ OperatorExpr

OperatorExpr OperatorExpr::from_term(const ScalarExpr& c, IsospinWord w, DerivIndex d) {
    OperatorExpr op(c.chart());
    if (!c.is_zero()) op.terms_.push_back({make_key(d, w), c});
    return op;
}

OperatorExpr OperatorExpr::identity(Chart chart) {
    return from_term(ScalarExpr::constant(GaussRat(1), chart), {}, {});
}

OperatorExpr OperatorExpr::multiply_by(const ScalarExpr& f) { return from_term(f, {}, {}); }

OperatorExpr OperatorExpr::partial(int i, Chart chart) {
    return from_term(ScalarExpr::constant(GaussRat(1), chart), {}, DerivIndex::axis(i));
}

OperatorExpr OperatorExpr::isospin(const IsoPoly& p, Chart chart) {
    OperatorExpr op(chart);
    for (const auto& [w, c] : p.entries()) op.terms_.push_back({make_key({}, w), ScalarExpr::constant(c, chart)});
    return op;
}

OperatorExpr OperatorExpr::generator(int k, Chart chart) {
    return isospin(IsoPoly(IsospinWord::generator(k), GaussRat(1)), chart);
}

int OperatorExpr::order() const {
    int o = 0;
    for (const auto& t : terms_) o = std::max(o, t.deriv().order());
    return o;
}

std::size_t OperatorExpr::weight() const {
    std::size_t n = 0;
    for (const auto& t : terms_) n += t.coeff.size();
    return n;
}

std::string OperatorExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << "\n + ";
        first = false;
        os << "[" << t.coeff.to_string() << "]";
        IsospinWord w = t.iso();
        if (w.degree() > 0) os << " " << w.to_string();
        DerivIndex d = t.deriv();
        if (d.order() > 0) os << " " << d.to_string();
    }
    return os.str();
}

OperatorExpr OperatorExpr::operator-() const {
    OperatorExpr r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
    if (o.is_zero()) return *this;
    Chart c = merged_chart(*this, o);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->key < b->key)) {
            merged.push_back(std::move(*a++));
        } else if (a == ae || b->key < a->key) {
            merged.push_back(*b++);
        } else {
            ScalarExpr s = a->coeff + b->coeff;
            if (!s.is_zero()) merged.push_back({a->key, std::move(s)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    chart_ = c;
    return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) { return *this += -o; }

OperatorExpr& OperatorExpr::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

OperatorExpr operator*(const ScalarExpr& f, const OperatorExpr& a) {
    return compose(OperatorExpr::multiply_by(f), a);
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) { return compose(a, b); }

OperatorExpr compose(const OperatorExpr& a, const OperatorExpr& b, std::size_t term_budget) {
    Chart chart = merged_chart(a, b);
    KeyedAccumulator acc(chart, term_budget);
    std::vector<DerivativeCache> caches;
    caches.reserve(b.terms().size());
    for (const auto& t : b.terms()) caches.emplace_back(t.coeff);

    for (const auto& ta : a.terms()) {
        const DerivIndex alpha = ta.deriv();
        const IsospinWord u = ta.iso();
        for_each_subindex(alpha, [&](const DerivIndex& gamma) {
            std::int64_t binom = 1;
            DerivIndex rest;
            for (int i = 0; i < 5; ++i) {
                binom *= binomial(alpha.n[i], gamma.n[i]);
                rest.n[i] = static_cast<std::uint8_t>(alpha.n[i] - gamma.n[i]);
            }
            for (std::size_t j = 0; j < b.terms().size(); ++j) {
                const auto& tb = b.terms()[j];
                const ScalarExpr& dg = caches[j].get(gamma);
                if (dg.is_zero()) continue;
                DerivIndex total = rest;
                const DerivIndex beta = tb.deriv();
                for (int i = 0; i < 5; ++i) {
                    int n = total.n[i] + beta.n[i];
                    if (n > 15) throw std::overflow_error("derivative order exceeds 15");
                    total.n[i] = static_cast<std::uint8_t>(n);
                }
                ScalarExpr prod = ta.coeff * dg;
                if (prod.is_zero()) continue;
                for (const auto& [w, cw] : pbw_product(u, tb.iso()).entries()) {
                    acc.add_scaled(make_key(total, w), prod, cw * GaussRat(binom));
                }
            }
        });
    }
    OperatorExpr out(chart);
    acc.drain([&](std::uint64_t k, ScalarExpr e) { out.terms_.push_back({k, std::move(e)}); });
    return out;
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b, std::size_t term_budget) {
    return compose(a, b, term_budget) - compose(b, a, term_budget);
}

// ------------------------------------------------------------------- Field

Field::Field(const ScalarExpr& f, IsospinWord w) : chart_(f.chart()) {
    if (!f.is_zero()) entries_.emplace_back(w, f);
}

ScalarExpr Field::component(IsospinWord w) const {
    for (const auto& [v, f] : entries_) {
        if (v == w) return f;
    }
    return ScalarExpr(chart_);
}

std::size_t Field::weight() const {
    std::size_t n = 0;
    for (const auto& e : entries_) n += e.second.size();
    return n;
}

std::string Field::to_string() const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, f] : entries_) {
        if (!first) os << "\n + ";
        first = false;
        os << "[" << f.to_string() << "] " << w.to_string();
    }
    return os.str();
}

Field& Field::operator+=(const Field& o) {
    std::map<std::uint32_t, ScalarExpr> merged;
    for (auto& [w, f] : entries_) merged.emplace(w.key(), std::move(f));
    for (const auto& [w, f] : o.entries_) {
        auto [it, fresh] = merged.try_emplace(w.key(), f);
        if (!fresh) it->second += f;
    }
    entries_.clear();
    for (auto& [k, f] : merged) {
        if (!f.is_zero()) entries_.emplace_back(IsospinWord::from_key(k), std::move(f));
    }
    if (!o.entries_.empty()) chart_ = o.chart_ == chart_ ? chart_ : o.entries_.front().second.chart();
    return *this;
}

Field& Field::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& e : entries_) e.second *= c;
    return *this;
}

Field operator*(const IsoPoly& p, const Field& f) {
    std::map<std::uint32_t, ScalarAccumulator> acc;
    for (const auto& [u, cu] : p.entries()) {
        for (const auto& [v, g] : f.entries()) {
            for (const auto& [w, cw] : pbw_product(u, v).entries()) {
                acc.try_emplace(w.key(), f.chart()).first->second.add_scaled(g, cu * cw);
            }
        }
    }
    Field out(f.chart());
    for (auto& [k, a] : acc) {
        ScalarExpr e = a.finish();
        if (!e.is_zero()) out.entries_.emplace_back(IsospinWord::from_key(k), std::move(e));
    }
    return out;
}

Field apply(const OperatorExpr& op, const Field& f) {
    Chart chart = f.is_zero() ? op.chart() : f.chart();
    KeyedAccumulator acc(chart, 0);
    std::vector<DerivativeCache> caches;
    caches.reserve(f.entries().size());
    for (const auto& e : f.entries()) caches.emplace_back(e.second);
    for (const auto& t : op.terms()) {
        const DerivIndex alpha = t.deriv();
        for (std::size_t j = 0; j < f.entries().size(); ++j) {
            const ScalarExpr& dg = caches[j].get(alpha);
            if (dg.is_zero()) continue;
            ScalarExpr prod = t.coeff * dg;
            if (prod.is_zero()) continue;
            for (const auto& [w, cw] : pbw_product(t.iso(), f.entries()[j].first).entries()) {
                acc.add_scaled(w.key(), prod, cw);
            }
        }
    }
    Field out(chart);
    acc.drain([&](std::uint64_t k, ScalarExpr e) {
        out.entries_.emplace_back(IsospinWord::from_key(static_cast<std::uint32_t>(k)), std::move(e));
    });
    return out;
}

}  // namespace hkit::operators
