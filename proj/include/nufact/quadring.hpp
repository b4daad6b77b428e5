#pragma once

/**
 * @file quadring.hpp
 * @brief Element arithmetic in Z[w], w = (1 + sqrt(-23)) / 2, with w^2 = w - 6.
 *
 * Norm form N(a + bw) = a^2 + ab + 6b^2. The only units are +-1, so
 * associates are identified by sign: the canonical representative has its
 * first nonzero coordinate positive.
 */

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nufact/errors.hpp"

namespace nufact {

namespace detail {
inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw DomainError("integer overflow in quadratic-order arithmetic");
    return r;
}
inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw DomainError("integer overflow in quadratic-order arithmetic");
    return r;
}
}  // namespace detail

/// a + b*w
struct QuadInt {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend bool operator==(const QuadInt&, const QuadInt&) = default;
    friend auto operator<=>(const QuadInt&, const QuadInt&) = default;

    bool is_zero() const noexcept { return a == 0 && b == 0; }
    QuadInt operator-() const { return {-a, -b}; }
};

inline QuadInt qmul(const QuadInt& x, const QuadInt& y) {
    using detail::checked_add;
    using detail::checked_mul;
    auto bd = checked_mul(x.b, y.b);
    return {checked_add(checked_mul(x.a, y.a), checked_mul(-6, bd)),
            checked_add(checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a)), bd)};
}

inline QuadInt operator*(const QuadInt& x, const QuadInt& y) { return qmul(x, y); }

/// Galois conjugate: w -> 1 - w.
inline QuadInt conjugate(const QuadInt& x) { return {detail::checked_add(x.a, x.b), -x.b}; }

inline std::int64_t norm(const QuadInt& x) {
    using detail::checked_add;
    using detail::checked_mul;
    return checked_add(checked_add(checked_mul(x.a, x.a), checked_mul(x.a, x.b)), checked_mul(6, checked_mul(x.b, x.b)));
}

inline bool is_unit(const QuadInt& x) { return norm(x) == 1; }

inline QuadInt canonical_associate(const QuadInt& x) {
    if (x.a < 0 || (x.a == 0 && x.b < 0)) return -x;
    return x;
}

/// All elements of norm n. Uses 4N = (2a + b)^2 + 23 b^2, so |b| <= sqrt(4n/23).
inline std::vector<QuadInt> elements_of_norm(std::int64_t n, const Caps& caps = {}) {
    if (n < 0) throw DomainError("norm must be nonnegative");
    if (static_cast<std::uint64_t>(n) > caps.norm) throw CapExceeded("norm exceeds scan cap", static_cast<std::uint64_t>(n), caps.norm);
    std::vector<QuadInt> out;
    auto bmax = static_cast<std::int64_t>(std::sqrt(4.0 * static_cast<double>(n) / 23.0)) + 1;
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
        auto rest = 4 * n - 23 * b * b;  // (2a + b)^2
        if (rest < 0) continue;
        auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
        while (r * r > rest) --r;
        while ((r + 1) * (r + 1) <= rest) ++r;
        if (r * r != rest) continue;
        for (auto s : {r, -r}) {
            if ((s - b) % 2 != 0) continue;
            QuadInt q{(s - b) / 2, b};
            if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Returns q with x = y*q when it exists in Z[w].
inline std::optional<QuadInt> divides(const QuadInt& y, const QuadInt& x) {
    if (y.is_zero()) throw DomainError("division by zero");
    auto num = qmul(x, conjugate(y));
    auto n = norm(y);
    if (num.a % n != 0 || num.b % n != 0) return std::nullopt;
    return QuadInt{num.a / n, num.b / n};
}

namespace detail {
inline std::vector<std::int64_t> proper_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d < n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}
}  // namespace detail

inline bool is_atom(const QuadInt& x, const Caps& caps = {}) {
    if (x.is_zero()) throw DomainError("zero is not an atom candidate");
    auto n = norm(x);
    if (n == 1) throw DomainError("units are not atom candidates");
    for (auto d : detail::proper_divisors(n))
        for (const auto& y : elements_of_norm(d, caps))
            if (divides(y, x)) return false;
    return true;
}

/// Canonical atoms y with N(y) | N(x) that divide x, ordered by (norm, coords).
inline std::vector<QuadInt> atom_divisors(const QuadInt& x, const Caps& caps = {}) {
    auto n = norm(x);
    std::vector<std::pair<std::int64_t, QuadInt>> found;
    auto ds = detail::proper_divisors(n);
    ds.push_back(n);
    for (auto d : ds)
        for (const auto& y : elements_of_norm(d, caps)) {
            if (canonical_associate(y) != y) continue;
            if (divides(y, x) && is_atom(y, caps)) found.emplace_back(d, y);
        }
    std::sort(found.begin(), found.end());
    std::vector<QuadInt> out;
    for (auto& [d, y] : found) out.push_back(y);
    return out;
}

using QuadFactorization = std::vector<QuadInt>;

/// All factorizations of x into atoms up to order and associates. Factors
/// are canonical representatives sorted by (norm, coords); the list is
/// sorted by length then lexicographically.
inline std::vector<QuadFactorization> element_factorizations(const QuadInt& x, const Caps& caps = {}) {
    if (x.is_zero()) throw DomainError("cannot factor zero");
    auto n = norm(x);
    if (static_cast<std::uint64_t>(n) > caps.norm) throw CapExceeded("norm exceeds scan cap", static_cast<std::uint64_t>(n), caps.norm);
    if (n == 1) return {QuadFactorization{}};

    auto candidates = atom_divisors(x, caps);
    auto key = [](const QuadInt& y) { return std::pair{norm(y), y}; };
    std::vector<QuadFactorization> out;
    QuadFactorization current;
    // Factors are chosen in non-decreasing (norm, coords) order.
    auto recurse = [&](auto&& self, const QuadInt& rest, std::size_t from) -> void {
        if (norm(rest) == 1) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = from; i < candidates.size(); ++i) {
            const auto& y = candidates[i];
            if (norm(rest) % norm(y) != 0) continue;
            auto q = divides(y, rest);
            if (!q) continue;
            current.push_back(y);
            self(self, *q, i);
            current.pop_back();
        }
    };
    recurse(recurse, x, 0);
    std::sort(out.begin(), out.end(), [&](const auto& p, const auto& q) {
        if (p.size() != q.size()) return p.size() < q.size();
        return std::lexicographical_compare(p.begin(), p.end(), q.begin(), q.end(),
                                            [&](const QuadInt& u, const QuadInt& v) { return key(u) < key(v); });
    });
    return out;
}

/// Canonical atoms of norm at most max_norm, ordered by (norm, coords).
inline std::vector<QuadInt> atoms_up_to_norm(std::int64_t max_norm, const Caps& caps = {}) {
    std::vector<QuadInt> out;
    for (std::int64_t n = 2; n <= max_norm; ++n)
        for (const auto& y : elements_of_norm(n, caps))
            if (canonical_associate(y) == y && is_atom(y, caps)) out.push_back(y);
    return out;
}

}  // namespace nufact
