#pragma once

/**
 * @file abelian.hpp
 * @brief Finite abelian groups Z/n1 x ... x Z/nk in explicit product form.
 *
 * Elements are residue vectors. Every element also has a dense index in
 * [0, |G|) following lexicographic coordinate order (first coordinate most
 * significant); the zero-sum searches work on these indices.
 */

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "nufact/errors.hpp"

namespace nufact {

class GroupElement;

class FinAbGroup {
public:
    explicit FinAbGroup(std::vector<std::int64_t> moduli) {
        if (moduli.empty()) moduli.push_back(1);
        std::uint64_t order = 1;
        for (auto n : moduli) {
            if (n < 1) throw DomainError("group modulus must be >= 1, got " + std::to_string(n));
            if (order > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n))
                throw DomainError("group order overflows 64 bits");
            order *= static_cast<std::uint64_t>(n);
        }
        data_ = std::make_shared<const Data>(Data{std::move(moduli), order});
    }

    const std::vector<std::int64_t>& moduli() const noexcept { return data_->moduli; }
    std::size_t rank() const noexcept { return data_->moduli.size(); }
    std::uint64_t order() const noexcept { return data_->order; }
    bool is_cyclic() const noexcept { return data_->moduli.size() == 1; }

    GroupElement zero() const;
    GroupElement element(std::vector<std::int64_t> coords) const;
    GroupElement from_index(std::uint64_t index) const;
    std::uint64_t index_of(const GroupElement& g) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scale(const GroupElement& a, std::int64_t k) const;
    std::uint64_t element_order(const GroupElement& a) const;

    /// All elements in lexicographic coordinate order.
    std::vector<GroupElement> enumerate_elements(std::uint64_t cap = Caps{}.group_elements) const;

    /// Index arithmetic for the hot loops of the zero-sum searches.
    std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg_index(std::uint64_t a) const;

    friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) noexcept {
        return a.data_ == b.data_ || a.data_->moduli == b.data_->moduli;
    }

private:
    struct Data {
        std::vector<std::int64_t> moduli;
        std::uint64_t order;
    };
    std::shared_ptr<const Data> data_;
};

class GroupElement {
public:
    const FinAbGroup& group() const noexcept { return group_; }
    const std::vector<std::int64_t>& coords() const noexcept { return coords_; }

    bool is_zero() const noexcept {
        for (auto c : coords_)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const GroupElement& a, const GroupElement& b) noexcept {
        return a.coords_ == b.coords_ && a.group_ == b.group_;
    }
    /// Lexicographic on coordinates; only meaningful within one group.
    friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) noexcept {
        return a.coords_ <=> b.coords_;
    }

    friend GroupElement operator+(const GroupElement& a, const GroupElement& b) {
        return a.group_.add(a, b);
    }
    GroupElement operator-() const { return group_.neg(*this); }

private:
    friend class FinAbGroup;
    GroupElement(FinAbGroup g, std::vector<std::int64_t> c) : group_(std::move(g)), coords_(std::move(c)) {}

    FinAbGroup group_;
    std::vector<std::int64_t> coords_;
};

inline FinAbGroup make_group(std::vector<std::int64_t> moduli) { return FinAbGroup(std::move(moduli)); }

namespace detail {
inline std::int64_t reduce(std::int64_t x, std::int64_t n) {
    x %= n;
    return x < 0 ? x + n : x;
}
}  // namespace detail

inline GroupElement FinAbGroup::zero() const {
    return GroupElement(*this, std::vector<std::int64_t>(rank(), 0));
}

inline GroupElement FinAbGroup::element(std::vector<std::int64_t> coords) const {
    if (coords.size() != rank())
        throw DomainError("element has " + std::to_string(coords.size()) + " coordinates, group has rank " +
                          std::to_string(rank()));
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = detail::reduce(coords[i], moduli()[i]);
    return GroupElement(*this, std::move(coords));
}

inline GroupElement FinAbGroup::from_index(std::uint64_t index) const {
    if (index >= order()) throw DomainError("element index out of range");
    std::vector<std::int64_t> c(rank());
    for (std::size_t i = rank(); i-- > 0;) {
        auto n = static_cast<std::uint64_t>(moduli()[i]);
        c[i] = static_cast<std::int64_t>(index % n);
        index /= n;
    }
    return GroupElement(*this, std::move(c));
}

inline std::uint64_t FinAbGroup::index_of(const GroupElement& g) const {
    if (!(g.group() == *this)) throw DomainError("element belongs to a different group");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        idx = idx * static_cast<std::uint64_t>(moduli()[i]) + static_cast<std::uint64_t>(g.coords()[i]);
    return idx;
}

inline GroupElement FinAbGroup::add(const GroupElement& a, const GroupElement& b) const {
    if (!(a.group() == *this) || !(b.group() == *this))
        throw DomainError("cannot add elements of different groups");
    std::vector<std::int64_t> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        c[i] = a.coords()[i] + b.coords()[i];
        if (c[i] >= moduli()[i]) c[i] -= moduli()[i];
    }
    return GroupElement(*this, std::move(c));
}

inline GroupElement FinAbGroup::neg(const GroupElement& a) const {
    if (!(a.group() == *this)) throw DomainError("element belongs to a different group");
    std::vector<std::int64_t> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) c[i] = a.coords()[i] == 0 ? 0 : moduli()[i] - a.coords()[i];
    return GroupElement(*this, std::move(c));
}

inline GroupElement FinAbGroup::scale(const GroupElement& a, std::int64_t k) const {
    if (!(a.group() == *this)) throw DomainError("element belongs to a different group");
    std::vector<std::int64_t> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        auto n = moduli()[i];
        c[i] = static_cast<std::int64_t>((static_cast<__int128>(a.coords()[i]) * detail::reduce(k, n)) % n);
    }
    return GroupElement(*this, std::move(c));
}

inline std::uint64_t FinAbGroup::element_order(const GroupElement& a) const {
    // lcm over coordinates of n_i / gcd(n_i, c_i)
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
        auto n = static_cast<std::uint64_t>(moduli()[i]);
        auto c = static_cast<std::uint64_t>(a.coords()[i]);
        std::uint64_t x = n, y = c;
        while (y != 0) {
            auto t = x % y;
            x = y;
            y = t;
        }
        auto oi = n / x;
        std::uint64_t p = ord, q = oi;
        while (q != 0) {
            auto t = p % q;
            p = q;
            q = t;
        }
        ord = ord / p * oi;
    }
    return ord;
}

inline std::vector<GroupElement> FinAbGroup::enumerate_elements(std::uint64_t cap) const {
    if (order() > cap) throw CapExceeded("group too large to enumerate", order(), cap);
    std::vector<GroupElement> out;
    out.reserve(order());
    for (std::uint64_t i = 0; i < order(); ++i) out.push_back(from_index(i));
    return out;
}

inline std::uint64_t FinAbGroup::add_index(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t result = 0, place = 1;
    for (std::size_t i = rank(); i-- > 0;) {
        auto n = static_cast<std::uint64_t>(moduli()[i]);
        auto s = a % n + b % n;
        if (s >= n) s -= n;
        result += s * place;
        place *= n;
        a /= n;
        b /= n;
    }
    return result;
}

inline std::uint64_t FinAbGroup::neg_index(std::uint64_t a) const {
    std::uint64_t result = 0, place = 1;
    for (std::size_t i = rank(); i-- > 0;) {
        auto n = static_cast<std::uint64_t>(moduli()[i]);
        auto c = a % n;
        result += (c == 0 ? 0 : n - c) * place;
        place *= n;
        a /= n;
    }
    return result;
}

/// Cayley table of index addition, for groups small enough to tabulate.
class AdditionTable {
public:
    explicit AdditionTable(const FinAbGroup& g) : n_(g.order()), table_(n_ * n_), neg_(n_) {
        for (std::uint64_t a = 0; a < n_; ++a) {
            neg_[a] = g.neg_index(a);
            for (std::uint64_t b = 0; b < n_; ++b) table_[a * n_ + b] = static_cast<std::uint32_t>(g.add_index(a, b));
        }
    }
    std::uint32_t add(std::uint64_t a, std::uint64_t b) const noexcept { return table_[a * n_ + b]; }
    std::uint64_t neg(std::uint64_t a) const noexcept { return neg_[a]; }
    std::uint64_t size() const noexcept { return n_; }

private:
    std::uint64_t n_;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint64_t> neg_;
};

}  // namespace nufact
