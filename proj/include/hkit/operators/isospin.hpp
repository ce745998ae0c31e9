#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hkit/exact/gaussian_rational.hpp"

namespace hkit::operators {

using exact::GaussRat;

/// PBW basis monomial T1^a T2^b T3^c of the enveloping algebra of su(2).
struct IsospinWord {
    std::uint8_t a = 0;
    std::uint8_t b = 0;
    std::uint8_t c = 0;

    static IsospinWord generator(int k);  // k in 1..3
    int degree() const { return a + b + c; }
    std::uint32_t key() const { return a | (static_cast<std::uint32_t>(b) << 8) | (static_cast<std::uint32_t>(c) << 16); }
    static IsospinWord from_key(std::uint32_t k) {
        return {static_cast<std::uint8_t>(k & 0xff), static_cast<std::uint8_t>((k >> 8) & 0xff),
                static_cast<std::uint8_t>((k >> 16) & 0xff)};
    }
    std::string to_string() const;

    friend bool operator==(IsospinWord x, IsospinWord y) { return x.key() == y.key(); }
    friend bool operator<(IsospinWord x, IsospinWord y) { return x.key() < y.key(); }
};

/// Finite linear combination of PBW words, sorted by word, no zero entries.
class IsoPoly {
public:
    using Entry = std::pair<IsospinWord, GaussRat>;

    IsoPoly() = default;
    IsoPoly(IsospinWord w, GaussRat c);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    GaussRat coefficient(IsospinWord w) const;

    IsoPoly& operator+=(const IsoPoly& o);
    IsoPoly& operator*=(const GaussRat& c);
    friend IsoPoly operator+(IsoPoly x, const IsoPoly& y) { return x += y; }
    friend IsoPoly operator*(IsoPoly x, const GaussRat& c) { return x *= c; }
    friend IsoPoly operator*(const IsoPoly& x, const IsoPoly& y);
    friend bool operator==(const IsoPoly& x, const IsoPoly& y) { return x.entries_ == y.entries_; }

    std::string to_string() const;

private:
    void add(IsospinWord w, const GaussRat& c);
    std::vector<Entry> entries_;
};

/// Product of two PBW words reduced with [T_a, T_b] = i ε_abc T_c.
/// Results are memoized per thread.
const IsoPoly& pbw_product(IsospinWord u, IsospinWord v);

/// Reduces an arbitrary product T_{k1} T_{k2} ... (indices 1..3) to PBW order.
IsoPoly pbw_reduce(std::initializer_list<int> generators);
IsoPoly pbw_reduce(const std::vector<int>& generators);

/// T² = T1² + T2² + T3².
IsoPoly casimir_t2();

}  // namespace hkit::operators
