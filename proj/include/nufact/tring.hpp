#pragma once

/**
 * @file tring.hpp
 * @brief Ideals of the triangular order T(l) over a discrete valuation ring.
 *
 * An ideal is stored as its l x l matrix of pi-adic valuations: entry (i,j)
 * is the D-submodule (pi^a[i][j]) of the (i,j) matrix entry. T(l) itself has
 * t[i][j] = 1 above the diagonal and 0 elsewhere. Products are min-plus
 * matrix products, containment is entrywise >= on exponents, and the
 * uniformiser pi never appears explicitly.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nufact/divcalc.hpp"
#include "nufact/errors.hpp"

namespace nufact::tring {

class ExponentMatrix {
public:
    ExponentMatrix() = default;
    explicit ExponentMatrix(std::size_t l, std::int64_t fill = 0) : l_(l), a_(l * l, fill) {}
    ExponentMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) : l_(rows.size()) {
        for (const auto& r : rows) {
            if (r.size() != l_) throw DomainError("exponent matrix must be square");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static ExponentMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
        ExponentMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw DomainError("exponent matrix must be square");
            for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t size() const noexcept { return l_; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * l_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * l_ + j]; }

    std::vector<std::vector<std::int64_t>> rows() const {
        std::vector<std::vector<std::int64_t>> out(l_);
        for (std::size_t i = 0; i < l_; ++i) out[i].assign(a_.begin() + static_cast<std::ptrdiff_t>(i * l_),
                                                         a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * l_));
        return out;
    }
    const std::vector<std::int64_t>& entries() const noexcept { return a_; }

    friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;
    friend auto operator<=>(const ExponentMatrix&, const ExponentMatrix&) = default;

private:
    std::size_t l_ = 0;
    std::vector<std::int64_t> a_;
};

inline std::int64_t ring_entry(std::size_t i, std::size_t j) { return i >= j ? 0 : 1; }

inline ExponentMatrix ring_matrix(std::size_t l) {
    if (l < 2) throw DomainError("triangular order needs size l >= 2");
    ExponentMatrix t(l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) t(i, j) = ring_entry(i, j);
    return t;
}

namespace detail {
inline void same_size(const ExponentMatrix& a, const ExponentMatrix& b) {
    if (a.size() != b.size()) throw DomainError("exponent matrices have different sizes");
}
}  // namespace detail

/// Two-sided T-ideal contained in T: a >= t and closed under T-multiplication
/// on both sides.
inline bool is_ideal(const ExponentMatrix& a) {
    const auto l = a.size();
    if (l < 2) return false;
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            if (a(i, j) < ring_entry(i, j)) return false;
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            for (std::size_t k = 0; k < l; ++k) {
                if (ring_entry(i, j) + a(j, k) < a(i, k)) return false;
                if (a(i, j) + ring_entry(j, k) < a(i, k)) return false;
            }
    return true;
}

/// Min-plus product.
inline ExponentMatrix mul(const ExponentMatrix& a, const ExponentMatrix& b) {
    detail::same_size(a, b);
    const auto l = a.size();
    ExponentMatrix c(l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t k = 0; k < l; ++k) {
            auto best = std::numeric_limits<std::int64_t>::max();
            for (std::size_t j = 0; j < l; ++j) best = std::min(best, a(i, j) + b(j, k));
            c(i, k) = best;
        }
    return c;
}

/// Entrywise maximum.
inline ExponentMatrix intersect(const ExponentMatrix& a, const ExponentMatrix& b) {
    detail::same_size(a, b);
    ExponentMatrix c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = std::max(a(i, j), b(i, j));
    return c;
}

/// True iff the ideal encoded by `inner` lies inside the one encoded by `outer`.
inline bool contained_in(const ExponentMatrix& inner, const ExponentMatrix& outer) {
    detail::same_size(inner, outer);
    for (std::size_t n = 0; n < inner.entries().size(); ++n)
        if (inner.entries()[n] < outer.entries()[n]) return false;
    return true;
}

/// Left dual (T :_l A) = { x : xA in T }: x[i][j] = max_k (t[i][k] - a[j][k]).
/// Defined for fractional matrices too.
inline ExponentMatrix left_dual(const ExponentMatrix& a) {
    const auto l = a.size();
    ExponentMatrix x(l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            auto best = std::numeric_limits<std::int64_t>::min();
            for (std::size_t k = 0; k < l; ++k) best = std::max(best, ring_entry(i, k) - a(j, k));
            x(i, j) = best;
        }
    return x;
}

inline ExponentMatrix tau_ideal(const ExponentMatrix& a) { return left_dual(left_dual(a)); }

/// Smallest ideal containing every entry of m (entrywise least ideal >= m).
inline ExponentMatrix ideal_closure(ExponentMatrix m) {
    const auto l = m.size();
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) m(i, j) = std::max(m(i, j), ring_entry(i, j));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j)
                for (std::size_t k = 0; k < l; ++k) {
                    if (m(j, k) < m(i, k) - ring_entry(i, j)) {
                        m(j, k) = m(i, k) - ring_entry(i, j);
                        changed = true;
                    }
                    if (m(i, j) < m(i, k) - ring_entry(j, k)) {
                        m(i, j) = m(i, k) - ring_entry(j, k);
                        changed = true;
                    }
                }
    }
    return m;
}

/// Maximal ideals ordered along the tau-orbit, starting from the one that
/// raises the last diagonal entry.
inline std::vector<ExponentMatrix> maximal_ideals(std::size_t l) {
    auto t = ring_matrix(l);
    auto bump = [&](std::size_t d) {
        auto m = t;
        m(d, d) = 1;
        return m;
    };
    std::vector<ExponentMatrix> out{bump(l - 1)};
    for (std::size_t n = 1; n < l; ++n) out.push_back(tau_ideal(out.back()));
    if (tau_ideal(out.back()) != out.front()) throw std::logic_error("tau does not close up on maximal ideals");
    for (std::size_t d = 0; d < l; ++d)
        if (std::find(out.begin(), out.end(), bump(d)) == out.end())
            throw std::logic_error("tau orbit misses a maximal ideal");
    return out;
}

inline Label maximal_label(std::size_t index) { return "Q" + std::to_string(index + 1); }

/// One cycle Q1 > Q2 > ... > Ql, in the order of maximal_ideals(l).
inline CycleStructure cycle_structure(std::size_t l) {
    std::vector<Label> cyc;
    for (std::size_t n = 0; n < l; ++n) cyc.push_back(maximal_label(n));
    return CycleStructure({cyc});
}

inline ExponentMatrix jacobson_radical(std::size_t l) {
    auto ms = maximal_ideals(l);
    auto j = ms.front();
    for (const auto& m : ms) j = intersect(j, m);
    return j;
}

/// Ideals J with target ⊆ J ⊊ upper that are maximal with that property.
/// Every such J lies above the closure of `upper` with one entry raised by
/// one, so the covers are the minimal such closures.
inline std::vector<ExponentMatrix> covers_within(const ExponentMatrix& upper, const ExponentMatrix& target) {
    std::vector<ExponentMatrix> candidates;
    for (std::size_t i = 0; i < upper.size(); ++i)
        for (std::size_t j = 0; j < upper.size(); ++j) {
            if (target(i, j) <= upper(i, j)) continue;
            auto m = upper;
            m(i, j) += 1;
            auto c = ideal_closure(std::move(m));
            if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) candidates.push_back(std::move(c));
        }
    std::vector<ExponentMatrix> out;
    for (const auto& c : candidates) {
        bool minimal = true;
        for (const auto& other : candidates)
            if (other != c && contained_in(c, other)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Picks one of the covers; receives a non-empty sorted list.
using CoverChooser = std::function<std::size_t(const std::vector<ExponentMatrix>&)>;

struct ChainStep {
    ExponentMatrix ideal;
    std::size_t maximal;  // index into maximal_ideals(l)
};

/// Maximal chain T = I_0 ⊋ I_1 ⊋ ... ⊋ I_n = A with, for each step, the
/// unique maximal ideal P such that P I_{k-1} ⊆ I_k.
inline std::vector<ChainStep> maximal_chain(const ExponentMatrix& a, const CoverChooser& choose = {}) {
    if (!is_ideal(a)) throw DomainError("matrix is not an ideal of T(l)");
    const auto l = a.size();
    const auto ms = maximal_ideals(l);
    std::vector<ChainStep> chain;
    auto current = ring_matrix(l);
    while (current != a) {
        auto covers = covers_within(current, a);
        if (covers.empty()) throw std::logic_error("no cover found between an ideal and a smaller one");
        auto pick = choose ? choose(covers) : 0;
        const auto& next = covers.at(pick);
        std::optional<std::size_t> found;
        for (std::size_t m = 0; m < ms.size(); ++m) {
            if (!contained_in(mul(ms[m], current), next)) continue;
            if (found) throw std::logic_error("several maximal ideals annihilate one chain step");
            found = m;
        }
        if (!found) throw std::logic_error("no maximal ideal annihilates a chain step");
        chain.push_back({next, *found});
        current = next;
    }
    return chain;
}

/// Divisor of a nonzero ideal, labelled as in cycle_structure(l).
inline Divisor divisor_of(const ExponentMatrix& a, const CoverChooser& choose = {}) {
    Divisor d;
    for (const auto& step : maximal_chain(a, choose)) d.add(maximal_label(step.maximal));
    return d;
}

/// Every ideal with entries in [t[i][j], max(t[i][j], max_exp)], in
/// lexicographic order of the row-major entries.
inline std::vector<ExponentMatrix> enumerate_ideals(std::size_t l, std::int64_t max_exp, const Caps& caps = {}) {
    auto t = ring_matrix(l);
    std::vector<std::int64_t> hi(l * l);
    std::uint64_t box = 1;
    for (std::size_t n = 0; n < l * l; ++n) {
        hi[n] = std::max(t.entries()[n], max_exp);
        auto width = static_cast<std::uint64_t>(hi[n] - t.entries()[n] + 1);
        if (box > caps.ideal_box / width) throw CapExceeded("ideal enumeration box too large", box * width, caps.ideal_box);
        box *= width;
    }
    std::vector<ExponentMatrix> out;
    auto m = t;
    auto entry = [&](std::size_t n) -> std::int64_t& { return m(n / l, n % l); };
    while (true) {
        if (is_ideal(m)) out.push_back(m);
        std::size_t n = l * l;
        while (n > 0) {
            --n;
            if (entry(n) < hi[n]) {
                ++entry(n);
                break;
            }
            entry(n) = t.entries()[n];
            if (n == 0) return out;
        }
    }
}

}  // namespace nufact::tring
