#pragma once

/**
 * @file zerosum.hpp
 * @brief The monoid B(G0) of zero-sum sequences over a subset G0 of a finite
 * abelian group: atoms (minimal zero-sum sequences), factorizations, length
 * sets and the Davenport constant.
 *
 * All searches run on dense element indices and the Cayley table of G, so
 * they require |G| within Caps::group_order. Outputs are canonically sorted:
 * a sequence compares by length first, then by its expanded element list.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nufact/abelian.hpp"
#include "nufact/errors.hpp"

namespace nufact {

/// A finite multiset of group elements ("sequence" in factorization theory).
class ZSeq {
public:
    explicit ZSeq(FinAbGroup g) : group_(std::move(g)) {}

    ZSeq(FinAbGroup g, std::initializer_list<std::pair<GroupElement, std::uint64_t>> items) : group_(std::move(g)) {
        for (const auto& [e, m] : items) add(e, m);
    }

    const FinAbGroup& group() const noexcept { return group_; }
    const std::map<GroupElement, std::uint64_t>& counts() const noexcept { return counts_; }

    void add(const GroupElement& g, std::uint64_t multiplicity = 1) {
        if (!(g.group() == group_)) throw DomainError("element belongs to a different group");
        if (multiplicity == 0) return;
        counts_[g] += multiplicity;
        length_ += multiplicity;
    }

    std::uint64_t multiplicity(const GroupElement& g) const {
        auto it = counts_.find(g);
        return it == counts_.end() ? 0 : it->second;
    }
    std::uint64_t length() const noexcept { return length_; }
    bool empty() const noexcept { return length_ == 0; }

    std::vector<GroupElement> support() const {
        std::vector<GroupElement> out;
        for (const auto& [e, m] : counts_) out.push_back(e);
        return out;
    }

    /// Elements with repetition, in lexicographic order.
    std::vector<GroupElement> expanded() const {
        std::vector<GroupElement> out;
        for (const auto& [e, m] : counts_)
            for (std::uint64_t i = 0; i < m; ++i) out.push_back(e);
        return out;
    }

    friend bool operator==(const ZSeq& a, const ZSeq& b) { return a.group_ == b.group_ && a.counts_ == b.counts_; }
    friend std::weak_ordering operator<=>(const ZSeq& a, const ZSeq& b) {
        if (auto c = a.length_ <=> b.length_; c != 0) return c;
        auto ea = a.expanded(), eb = b.expanded();
        return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
    }

private:
    FinAbGroup group_;
    std::map<GroupElement, std::uint64_t> counts_;
    std::uint64_t length_ = 0;
};

/// Sorted multiset of atoms whose concatenation is the factored sequence.
using ZFactorization = std::vector<ZSeq>;

inline GroupElement sigma(const ZSeq& s) {
    const auto& g = s.group();
    auto total = g.zero();
    for (const auto& [e, m] : s.counts()) total = g.add(total, g.scale(e, static_cast<std::int64_t>(m % g.order())));
    return total;
}

inline ZSeq concat(const ZSeq& s, const ZSeq& t) {
    if (!(s.group() == t.group())) throw DomainError("cannot concatenate sequences over different groups");
    ZSeq out = s;
    for (const auto& [e, m] : t.counts()) out.add(e, m);
    return out;
}

inline bool is_zero_sum(const ZSeq& s) { return sigma(s).is_zero(); }

/// True iff S is non-empty, sums to zero, and has no non-empty proper
/// zero-sum sub-multiset. Removing one copy of any element must leave a
/// zero-sum free sequence; that is checked by a subset-sum search.
inline bool is_minimal_zero_sum(const ZSeq& s) {
    if (s.empty() || !is_zero_sum(s)) return false;
    const auto& g = s.group();
    std::unordered_set<std::uint64_t> sums;  // sums of non-empty sub-multisets of S minus one element
    bool skipped = false;
    for (auto it = s.counts().rbegin(); it != s.counts().rend(); ++it) {
        auto m = it->second;
        if (!skipped) {
            --m;
            skipped = true;
        }
        auto idx = g.index_of(it->first);
        for (std::uint64_t r = 0; r < m; ++r) {
            std::vector<std::uint64_t> next(sums.begin(), sums.end());
            for (auto x : next) sums.insert(g.add_index(x, idx));
            sums.insert(idx);
            if (sums.contains(0)) return false;
        }
    }
    return true;
}

namespace detail {

class SumSet {
public:
    explicit SumSet(std::uint64_t n) : words_((n + 63) / 64, 0) {}
    bool test(std::uint64_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::uint64_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    /// this ∪ {g} ∪ (this + g)
    SumSet extended(std::uint64_t g, const AdditionTable& t) const {
        SumSet out = *this;
        out.set(g);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto bits = words_[w];
            while (bits != 0) {
                auto b = static_cast<std::uint64_t>(__builtin_ctzll(bits));
                bits &= bits - 1;
                out.set(t.add(w * 64 + b, g));
            }
        }
        return out;
    }
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }
    friend bool operator==(const SumSet&, const SumSet&) = default;

private:
    std::vector<std::uint64_t> words_;
};

struct SumSetHash {
    std::size_t operator()(const SumSet& s) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto w : s.words()) h = (h ^ w) * 0x100000001b3ULL;
        return h;
    }
};

inline void require_small_group(const FinAbGroup& g, const Caps& caps) {
    if (g.order() > caps.group_order) throw CapExceeded("group order exceeds zero-sum search cap", g.order(), caps.group_order);
}

/// Enumerates every minimal zero-sum multiset over `universe` (sorted element
/// indices) with per-position multiplicity at most `max_mult` and length at
/// most `max_len`. Each atom is produced once, as T·g with T zero-sum free
/// and g its largest element. Callback receives counts indexed by position.
inline void for_each_minimal_zero_sum(const AdditionTable& table, std::span<const std::uint64_t> universe,
                                      std::span<const std::uint64_t> max_mult, std::uint64_t max_len,
                                      const std::function<void(const std::vector<std::uint64_t>&)>& emit) {
    const std::size_t u = universe.size();
    std::unordered_map<std::uint64_t, std::size_t> position;
    for (std::size_t p = 0; p < u; ++p) position[universe[p]] = p;
    std::vector<std::uint64_t> counts(u, 0);

    std::function<void(std::size_t, const SumSet&, std::uint64_t, std::uint64_t)> dfs =
        [&](std::size_t last, const SumSet& sums, std::uint64_t total, std::uint64_t len) {
            auto closing = table.neg(total);
            if (auto it = position.find(closing); it != position.end()) {
                auto q = it->second;
                if ((len == 0 || q >= last) && counts[q] + 1 <= max_mult[q] && len + 1 <= max_len) {
                    ++counts[q];
                    emit(counts);
                    --counts[q];
                }
            }
            if (len + 2 > max_len) return;  // T·g must still fit
            for (std::size_t p = (len == 0 ? 0 : last); p < u; ++p) {
                auto e = universe[p];
                if (e == 0 || counts[p] + 1 > max_mult[p]) continue;
                auto next = sums.extended(e, table);
                if (next.test(0)) continue;
                ++counts[p];
                dfs(p, next, table.add(total, e), len + 1);
                --counts[p];
            }
        };
    dfs(0, SumSet(table.size()), 0, 0);
}

inline std::vector<std::uint64_t> sorted_indices(const FinAbGroup& g, std::span<const GroupElement> elems) {
    std::vector<std::uint64_t> out;
    for (const auto& e : elems) out.push_back(g.index_of(e));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline ZSeq seq_from_counts(const FinAbGroup& g, std::span<const std::uint64_t> universe,
                            const std::vector<std::uint64_t>& counts) {
    ZSeq s(g);
    for (std::size_t p = 0; p < universe.size(); ++p)
        if (counts[p] > 0) s.add(g.from_index(universe[p]), counts[p]);
    return s;
}

}  // namespace detail

/// Davenport constant: 1 + the maximal length of a zero-sum free sequence,
/// found by exhaustive search memoised on the set of reachable subsums.
inline std::uint64_t davenport(const FinAbGroup& g, const Caps& caps = {}) {
    detail::require_small_group(g, caps);
    AdditionTable table(g);
    std::unordered_map<detail::SumSet, std::uint64_t, detail::SumSetHash> memo;
    std::function<std::uint64_t(const detail::SumSet&)> longest = [&](const detail::SumSet& sums) -> std::uint64_t {
        if (auto it = memo.find(sums); it != memo.end()) return it->second;
        std::uint64_t best = 0;
        for (std::uint64_t e = 1; e < g.order(); ++e) {
            auto next = sums.extended(e, table);
            if (next.test(0)) continue;
            best = std::max(best, 1 + longest(next));
        }
        memo.emplace(sums, best);
        return best;
    };
    return 1 + longest(detail::SumSet(g.order()));
}

/// All minimal zero-sum sequences over G0, canonically sorted.
inline std::vector<ZSeq> atoms(const FinAbGroup& g, std::span<const GroupElement> g0, const Caps& caps = {}) {
    detail::require_small_group(g, caps);
    auto universe = detail::sorted_indices(g, g0);
    auto bound = davenport(g, caps);
    AdditionTable table(g);
    std::vector<std::uint64_t> unbounded(universe.size(), bound);
    std::vector<ZSeq> out;
    detail::for_each_minimal_zero_sum(table, universe, unbounded, bound, [&](const std::vector<std::uint64_t>& c) {
        out.push_back(detail::seq_from_counts(g, universe, c));
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<ZSeq> atoms(const FinAbGroup& g, const Caps& caps = {}) {
    auto all = g.enumerate_elements(caps.group_elements);
    return atoms(g, all, caps);
}

namespace detail {

/// Factorization machinery over the support of one sequence: atoms are
/// count vectors over the support positions.
class SupportFactorizer {
public:
    SupportFactorizer(const FinAbGroup& g, std::vector<std::uint64_t> universe, std::vector<std::vector<std::uint64_t>> atom_counts)
        : group_(g), universe_(std::move(universe)), atoms_(std::move(atom_counts)) {
        std::sort(atoms_.begin(), atoms_.end(), [&](const auto& a, const auto& b) {
            return seq_from_counts(group_, universe_, a) < seq_from_counts(group_, universe_, b);
        });
    }

    /// Atoms dividing a sequence, restricted to its support.
    static SupportFactorizer for_sequence(const ZSeq& s, const Caps& caps) {
        const auto& g = s.group();
        require_small_group(g, caps);
        std::vector<std::uint64_t> universe, mult;
        for (const auto& [e, m] : s.counts()) {
            universe.push_back(g.index_of(e));
            mult.push_back(m);
        }
        AdditionTable table(g);
        std::vector<std::vector<std::uint64_t>> found;
        for_each_minimal_zero_sum(table, universe, mult, s.length(), [&](const auto& c) { found.push_back(c); });
        return SupportFactorizer(g, std::move(universe), std::move(found));
    }

    std::vector<std::uint64_t> counts_of(const ZSeq& s) const {
        std::vector<std::uint64_t> c(universe_.size(), 0);
        for (const auto& [e, m] : s.counts()) {
            auto idx = group_.index_of(e);
            auto it = std::lower_bound(universe_.begin(), universe_.end(), idx);
            if (it == universe_.end() || *it != idx) throw DomainError("element outside the factorization universe");
            c[static_cast<std::size_t>(it - universe_.begin())] = m;
        }
        return c;
    }

    std::vector<ZFactorization> factorizations(std::vector<std::uint64_t> rem) const {
        std::vector<ZFactorization> out;
        std::vector<std::size_t> chosen;
        enumerate(rem, universe_.size(), 0, chosen, out);
        std::sort(out.begin(), out.end(), [](const ZFactorization& a, const ZFactorization& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        return out;
    }

    const std::set<std::uint64_t>& lengths(const std::vector<std::uint64_t>& rem) {
        if (auto it = memo_.find(rem); it != memo_.end()) return it->second;
        std::set<std::uint64_t> out;
        auto x = first_nonzero(rem);
        if (x == rem.size()) {
            out.insert(0);
        } else {
            for (const auto& a : atoms_) {
                if (a[x] == 0 || !fits(a, rem)) continue;
                auto next = rem;
                for (std::size_t p = 0; p < next.size(); ++p) next[p] -= a[p];
                for (auto l : lengths(next)) out.insert(l + 1);
            }
        }
        return memo_.emplace(rem, std::move(out)).first->second;
    }

    const std::vector<std::vector<std::uint64_t>>& atom_counts() const noexcept { return atoms_; }
    const std::vector<std::uint64_t>& universe() const noexcept { return universe_; }

private:
    static std::size_t first_nonzero(const std::vector<std::uint64_t>& v) {
        for (std::size_t p = 0; p < v.size(); ++p)
            if (v[p] != 0) return p;
        return v.size();
    }
    static bool fits(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& rem) {
        for (std::size_t p = 0; p < a.size(); ++p)
            if (a[p] > rem[p]) return false;
        return true;
    }

    // The smallest remaining element must be consumed by the next atom. While
    // that element stays the same, atoms are taken in non-decreasing order, so
    // each multiset of atoms is reached along exactly one branch.
    void enumerate(std::vector<std::uint64_t>& rem, std::size_t prev_x, std::size_t prev_atom,
                   std::vector<std::size_t>& chosen, std::vector<ZFactorization>& out) const {
        auto x = first_nonzero(rem);
        if (x == rem.size()) {
            ZFactorization f;
            for (auto i : chosen) f.push_back(seq_from_counts(group_, universe_, atoms_[i]));
            std::sort(f.begin(), f.end());
            out.push_back(std::move(f));
            return;
        }
        for (std::size_t i = (x == prev_x ? prev_atom : 0); i < atoms_.size(); ++i) {
            const auto& a = atoms_[i];
            if (a[x] == 0 || !fits(a, rem)) continue;
            for (std::size_t p = 0; p < rem.size(); ++p) rem[p] -= a[p];
            chosen.push_back(i);
            enumerate(rem, x, i, chosen, out);
            chosen.pop_back();
            for (std::size_t p = 0; p < rem.size(); ++p) rem[p] += a[p];
        }
    }

    FinAbGroup group_;
    std::vector<std::uint64_t> universe_;
    std::vector<std::vector<std::uint64_t>> atoms_;
    std::map<std::vector<std::uint64_t>, std::set<std::uint64_t>> memo_;
};

inline void require_factorable(const ZSeq& s, const Caps& caps) {
    if (!is_zero_sum(s)) throw DomainError("sequence is not zero-sum");
    if (s.length() > caps.sequence_length)
        throw CapExceeded("sequence too long to factor", s.length(), caps.sequence_length);
}

}  // namespace detail

/// Every factorization of a zero-sum sequence into atoms, each exactly once.
/// Factorizations are sorted by number of parts, then by their sorted parts.
inline std::vector<ZFactorization> factorizations(const ZSeq& s, const Caps& caps = {}) {
    detail::require_factorable(s, caps);
    auto f = detail::SupportFactorizer::for_sequence(s, caps);
    return f.factorizations(f.counts_of(s));
}

inline std::set<std::uint64_t> length_set(const ZSeq& s, const Caps& caps = {}) {
    detail::require_factorable(s, caps);
    auto f = detail::SupportFactorizer::for_sequence(s, caps);
    return f.lengths(f.counts_of(s));
}

/// Shortest (then lexicographically least) zero-sum sequence over G0 of length
/// at most max_len with more than one factorization length, if any.
inline std::optional<ZSeq> half_factorial_witness(const FinAbGroup& g, std::span<const GroupElement> g0,
                                                  std::uint64_t max_len, const Caps& caps = {}) {
    detail::require_small_group(g, caps);
    if (max_len > caps.sequence_length) throw CapExceeded("witness search length", max_len, caps.sequence_length);
    auto universe = detail::sorted_indices(g, g0);
    std::vector<std::vector<std::uint64_t>> atom_counts;
    {
        auto bound = davenport(g, caps);
        AdditionTable table(g);
        std::vector<std::uint64_t> unbounded(universe.size(), bound);
        detail::for_each_minimal_zero_sum(table, universe, unbounded, bound,
                                          [&](const auto& c) { atom_counts.push_back(c); });
    }
    detail::SupportFactorizer engine(g, universe, std::move(atom_counts));
    AdditionTable table(g);

    std::vector<std::uint64_t> counts(universe.size(), 0);
    std::optional<ZSeq> found;
    std::function<void(std::size_t, std::uint64_t, std::uint64_t, std::uint64_t)> dfs =
        [&](std::size_t from, std::uint64_t total, std::uint64_t len, std::uint64_t target) {
            if (found) return;
            if (len == target) {
                if (total == 0 && engine.lengths(counts).size() > 1)
                    found = detail::seq_from_counts(g, universe, counts);
                return;
            }
            for (std::size_t p = from; p < universe.size() && !found; ++p) {
                ++counts[p];
                dfs(p, table.add(total, universe[p]), len + 1, target);
                --counts[p];
            }
        };
    for (std::uint64_t target = 1; target <= max_len && !found; ++target) dfs(0, 0, 0, target);
    return found;
}

}  // namespace nufact
