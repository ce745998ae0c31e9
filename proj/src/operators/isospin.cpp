#include "hkit/operators/isospin.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace hkit::operators {

IsospinWord IsospinWord::generator(int k) {
    switch (k) {
        case 1: return {1, 0, 0};
        case 2: return {0, 1, 0};
        case 3: return {0, 0, 1};
        default: throw std::out_of_range("isospin generator index must be 1..3");
    }
}

std::string IsospinWord::to_string() const {
    if (degree() == 0) return "1";
    std::string s;
    auto part = [&](int e, const char* name) {
        if (e == 0) return;
        if (!s.empty()) s += '*';
        s += name;
        if (e > 1) s += "^" + std::to_string(e);
    };
    part(a, "T1");
    part(b, "T2");
    part(c, "T3");
    return s;
}

IsoPoly::IsoPoly(IsospinWord w, GaussRat c) {
    if (!c.is_zero()) entries_.emplace_back(w, std::move(c));
}

GaussRat IsoPoly::coefficient(IsospinWord w) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), w,
                               [](const Entry& e, IsospinWord x) { return e.first < x; });
    return it != entries_.end() && it->first == w ? it->second : GaussRat();
}

void IsoPoly::add(IsospinWord w, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), w,
                               [](const Entry& e, IsospinWord x) { return e.first < x; });
    if (it != entries_.end() && it->first == w) {
        it->second += c;
        if (it->second.is_zero()) entries_.erase(it);
    } else {
        entries_.insert(it, {w, c});
    }
}

IsoPoly& IsoPoly::operator+=(const IsoPoly& o) {
    for (const auto& [w, c] : o.entries_) add(w, c);
    return *this;
}

IsoPoly& IsoPoly::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& e : entries_) e.second *= c;
    return *this;
}

IsoPoly operator*(const IsoPoly& x, const IsoPoly& y) {
    IsoPoly out;
    for (const auto& [u, cu] : x.entries_) {
        for (const auto& [v, cv] : y.entries_) {
            GaussRat k = cu * cv;
            for (const auto& [w, cw] : pbw_product(u, v).entries_) out.add(w, k * cw);
        }
    }
    return out;
}

std::string IsoPoly::to_string() const {
    if (entries_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : entries_) {
        if (!s.empty()) s += " + ";
        s += c.to_string() + "*" + w.to_string();
    }
    return s;
}

namespace {

struct Cache {
    std::unordered_map<std::uint64_t, IsoPoly> by_generator;
    std::unordered_map<std::uint64_t, IsoPoly> products;
};

Cache& cache() {
    thread_local Cache c;
    return c;
}

const IsoPoly& times_generator(IsospinWord w, int k);

IsoPoly poly_times_generator(const IsoPoly& p, int k) {
    IsoPoly out;
    for (const auto& [w, c] : p.entries()) out += times_generator(w, k) * c;
    return out;
}

IsoPoly compute_times_generator(IsospinWord w, int k) {
    const GaussRat i = GaussRat::i();
    if (k == 3) return {IsospinWord{w.a, w.b, static_cast<std::uint8_t>(w.c + 1)}, 1};
    if (k == 2) {
        if (w.c == 0) return {IsospinWord{w.a, static_cast<std::uint8_t>(w.b + 1), 0}, 1};
        // W T3 T2 = (W T2) T3 − i W T1, with W = T1^a T2^b T3^(c−1)
        IsospinWord lower{w.a, w.b, static_cast<std::uint8_t>(w.c - 1)};
        IsoPoly out = poly_times_generator(times_generator(lower, 2), 3);
        out += times_generator(lower, 1) * (-i);
        return out;
    }
    if (w.c > 0) {
        // W T3 T1 = (W T1) T3 + i W T2
        IsospinWord lower{w.a, w.b, static_cast<std::uint8_t>(w.c - 1)};
        IsoPoly out = poly_times_generator(times_generator(lower, 1), 3);
        out += times_generator(lower, 2) * i;
        return out;
    }
    if (w.b > 0) {
        // W T2 T1 = (W T1) T2 − i W T3, with W = T1^a T2^(b−1)
        IsospinWord lower{w.a, static_cast<std::uint8_t>(w.b - 1), 0};
        IsoPoly out = poly_times_generator(times_generator(lower, 1), 2);
        out += times_generator(lower, 3) * (-i);
        return out;
    }
    return {IsospinWord{static_cast<std::uint8_t>(w.a + 1), 0, 0}, 1};
}

const IsoPoly& times_generator(IsospinWord w, int k) {
    std::uint64_t key = (static_cast<std::uint64_t>(w.key()) << 2) | static_cast<std::uint64_t>(k);
    auto& table = cache().by_generator;
    if (auto it = table.find(key); it != table.end()) return it->second;
    IsoPoly value = compute_times_generator(w, k);
    return table.emplace(key, std::move(value)).first->second;
}

}  // namespace

const IsoPoly& pbw_product(IsospinWord u, IsospinWord v) {
    std::uint64_t key = (static_cast<std::uint64_t>(u.key()) << 32) | v.key();
    auto& table = cache().products;
    if (auto it = table.find(key); it != table.end()) return it->second;
    IsoPoly p(u, 1);
    for (int n = 0; n < v.a; ++n) p = poly_times_generator(p, 1);
    for (int n = 0; n < v.b; ++n) p = poly_times_generator(p, 2);
    for (int n = 0; n < v.c; ++n) p = poly_times_generator(p, 3);
    return table.emplace(key, std::move(p)).first->second;
}

IsoPoly pbw_reduce(const std::vector<int>& generators) {
    IsoPoly p(IsospinWord{}, 1);
    for (int k : generators) {
        if (k < 1 || k > 3) throw std::out_of_range("isospin generator index must be 1..3");
        p = poly_times_generator(p, k);
    }
    return p;
}

IsoPoly pbw_reduce(std::initializer_list<int> generators) { return pbw_reduce(std::vector<int>(generators)); }

IsoPoly casimir_t2() {
    IsoPoly t2(IsospinWord{2, 0, 0}, 1);
    t2 += IsoPoly(IsospinWord{0, 2, 0}, 1);
    t2 += IsoPoly(IsospinWord{0, 0, 2}, 1);
    return t2;
}

}  // namespace hkit::operators
