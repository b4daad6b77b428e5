#pragma once

/**
 * @file divcalc.hpp
 * @brief Divisor calculus for ideals of hereditary noetherian prime rings.
 *
 * Maximal ideals are labels partitioned into tau-cycles. A divisor D (finitely
 * supported counts) acts on Max x Z by moving (P, n) forward D(P) steps in the
 * lexicographic order of P's cycle. Composition is defined by
 * hat(D o E) = hat(E) . hat(D), i.e. D is applied first.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nufact/errors.hpp"

namespace nufact {

using Label = std::string;

class CycleStructure {
public:
    CycleStructure() = default;

    explicit CycleStructure(std::vector<std::vector<Label>> cycles) : cycles_(std::move(cycles)) {
        for (std::size_t c = 0; c < cycles_.size(); ++c) {
            if (cycles_[c].empty()) throw DomainError("cycle " + std::to_string(c) + " is empty");
            for (std::size_t p = 0; p < cycles_[c].size(); ++p) {
                const auto& label = cycles_[c][p];
                if (label.empty()) throw DomainError("empty maximal-ideal label");
                if (!where_.emplace(label, Position{c, p}).second) throw DomainError("duplicate label " + label);
                labels_.push_back(label);
            }
        }
    }

    struct Position {
        std::size_t cycle;
        std::size_t index;
    };

    const std::vector<std::vector<Label>>& cycles() const noexcept { return cycles_; }
    /// All labels, cycle by cycle in tau order.
    const std::vector<Label>& labels() const noexcept { return labels_; }
    bool contains(const Label& p) const { return where_.contains(p); }

    Position position(const Label& p) const {
        auto it = where_.find(p);
        if (it == where_.end()) throw DomainError("unknown maximal ideal " + p);
        return it->second;
    }
    std::size_t cycle_length(const Label& p) const { return cycles_[position(p).cycle].size(); }
    std::size_t label_index(const Label& p) const {
        return static_cast<std::size_t>(std::find(labels_.begin(), labels_.end(), p) - labels_.begin());
    }

    friend bool operator==(const CycleStructure& a, const CycleStructure& b) { return a.cycles_ == b.cycles_; }

private:
    std::vector<std::vector<Label>> cycles_;
    std::vector<Label> labels_;
    std::map<Label, Position> where_;
};

/// Effective divisor: zero counts are never stored.
class Divisor {
public:
    Divisor() = default;
    Divisor(std::initializer_list<std::pair<const Label, std::uint64_t>> items) {
        for (const auto& [p, n] : items) set(p, n);
    }

    std::uint64_t operator[](const Label& p) const {
        auto it = counts_.find(p);
        return it == counts_.end() ? 0 : it->second;
    }
    void set(const Label& p, std::uint64_t n) {
        if (n == 0)
            counts_.erase(p);
        else
            counts_[p] = n;
    }
    void add(const Label& p, std::uint64_t n = 1) { set(p, (*this)[p] + n); }

    const std::map<Label, std::uint64_t>& counts() const noexcept { return counts_; }
    bool is_zero() const noexcept { return counts_.empty(); }
    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [p, n] : counts_) t += n;
        return t;
    }

    static Divisor indicator(const Label& p) {
        Divisor d;
        d.set(p, 1);
        return d;
    }

    friend bool operator==(const Divisor&, const Divisor&) = default;
    friend auto operator<=>(const Divisor&, const Divisor&) = default;

private:
    std::map<Label, std::uint64_t> counts_;
};

inline void check_divisor(const CycleStructure& cs, const Divisor& d) {
    for (const auto& [p, n] : d.counts())
        if (!cs.contains(p)) throw DomainError("divisor label " + p + " is not in the cycle structure");
}

inline Label tau(const CycleStructure& cs, const Label& p) {
    auto pos = cs.position(p);
    const auto& cyc = cs.cycles()[pos.cycle];
    return cyc[(pos.index + 1) % cyc.size()];
}

struct LiftedPoint {
    Label label;
    std::int64_t level = 0;
    friend bool operator==(const LiftedPoint&, const LiftedPoint&) = default;
};

inline LiftedPoint apply_hat(const CycleStructure& cs, const Divisor& d, const LiftedPoint& pt) {
    check_divisor(cs, d);
    auto pos = cs.position(pt.label);
    const auto& cyc = cs.cycles()[pos.cycle];
    auto l = cyc.size();
    auto moved = pos.index + d[pt.label];
    return {cyc[moved % l], pt.level + static_cast<std::int64_t>(moved / l)};
}

/// (D o E)(P) = D(P) + E(Q), Q the label of hat(D)(P, 0).
inline Divisor compose(const CycleStructure& cs, const Divisor& d, const Divisor& e) {
    check_divisor(cs, d);
    check_divisor(cs, e);
    Divisor out;
    for (const auto& p : cs.labels()) out.set(p, d[p] + e[apply_hat(cs, d, {p, 0}).label]);
    return out;
}

/// D(tau P) >= D(P) - 1 for every P, i.e. hat(D) is monotone on each cycle.
inline bool is_realizable(const CycleStructure& cs, const Divisor& d) {
    check_divisor(cs, d);
    for (const auto& [p, n] : d.counts())
        if (d[tau(cs, p)] + 1 < n) return false;
    return true;
}

inline Divisor full_cycle_divisor(const CycleStructure& cs, std::size_t cycle_index) {
    if (cycle_index >= cs.cycles().size())
        throw DomainError("cycle index " + std::to_string(cycle_index) + " out of range");
    Divisor d;
    for (const auto& p : cs.cycles()[cycle_index]) d.set(p, 1);
    return d;
}

/// Left-to-right composition of indicator divisors.
inline Divisor compose_word(const CycleStructure& cs, const std::vector<Label>& word) {
    Divisor acc;
    for (const auto& p : word) acc = compose(cs, acc, Divisor::indicator(p));
    return acc;
}

/// total(D) + number of labels in the cycles D touches.
inline std::uint64_t default_max_len(const CycleStructure& cs, const Divisor& d) {
    check_divisor(cs, d);
    std::set<std::size_t> touched;
    for (const auto& [p, n] : d.counts()) touched.insert(cs.position(p).cycle);
    std::uint64_t len = d.total();
    for (auto c : touched) len += cs.cycles()[c].size();
    return len;
}

struct WordSearch {
    std::vector<std::vector<Label>> words;
    /// Words longer than max_len composing to D exist.
    bool truncated = false;
    /// Some word of maximal ideals composes to D at all. False for divisors
    /// such as that of an invertible radical, which need invertible factors.
    bool reachable = false;
};

namespace detail {

/// Divisors over a fixed cycle structure as dense count vectors.
class DenseCalculus {
public:
    explicit DenseCalculus(const CycleStructure& cs) : cs_(cs), n_(cs.labels().size()), len_(n_), base_(n_) {
        for (std::size_t k = 0; k < n_; ++k) {
            auto pos = cs.position(cs.labels()[k]);
            len_[k] = cs.cycles()[pos.cycle].size();
            base_[k] = k - pos.index;
        }
    }

    using Vec = std::vector<std::uint64_t>;

    Vec dense(const Divisor& d) const {
        Vec v(n_, 0);
        for (const auto& [p, n] : d.counts()) v[cs_.label_index(p)] = n;
        return v;
    }
    Divisor sparse(const Vec& v) const {
        Divisor d;
        for (std::size_t k = 0; k < n_; ++k) d.set(cs_.labels()[k], v[k]);
        return d;
    }
    /// (x o indicator(letter))
    Vec compose_letter(const Vec& x, std::size_t letter) const {
        Vec out(n_);
        for (std::size_t k = 0; k < n_; ++k) {
            auto idx = k - base_[k];
            auto target = base_[k] + (idx + x[k]) % len_[k];
            out[k] = x[k] + (target == letter ? 1 : 0);
        }
        return out;
    }
    std::size_t size() const noexcept { return n_; }

private:
    const CycleStructure& cs_;
    std::size_t n_;
    std::vector<std::size_t> len_, base_;
};

inline bool dominated(const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& d) {
    for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k] > d[k]) return false;
    return true;
}

}  // namespace detail

/// Every word of at most max_len labels whose left-to-right composition of
/// indicator divisors equals D. Sorted by length, then by label position.
/// Compositions only grow along a word, so prefixes exceeding D are pruned;
/// reachability of D from a partial divisor is memoised.
inline WordSearch enumerate_factorizations(const CycleStructure& cs, const Divisor& d, std::uint64_t max_len) {
    if (!is_realizable(cs, d)) throw DomainError("divisor is not realizable");
    detail::DenseCalculus calc(cs);
    auto target = calc.dense(d);
    const auto letters = calc.size();

    std::map<std::pair<std::vector<std::uint64_t>, std::uint64_t>, bool> memo;
    auto reachable = [&](auto&& self, const std::vector<std::uint64_t>& x, std::uint64_t budget) -> bool {
        if (x == target) return true;
        if (budget == 0) return false;
        auto key = std::pair{x, budget};
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool ok = false;
        for (std::size_t a = 0; a < letters && !ok; ++a) {
            auto y = calc.compose_letter(x, a);
            if (y != x && detail::dominated(y, target)) ok = self(self, y, budget - 1);
        }
        // A letter fixing x never helps reach a different target.
        memo.emplace(key, ok);
        return ok;
    };

    WordSearch out;
    std::vector<std::size_t> word;
    auto dfs = [&](auto&& self, const std::vector<std::uint64_t>& x) -> void {
        if (x == target) {
            std::vector<Label> w;
            for (auto a : word) w.push_back(cs.labels()[a]);
            out.words.push_back(std::move(w));
        }
        if (word.size() == max_len) return;
        auto budget = max_len - word.size() - 1;
        for (std::size_t a = 0; a < letters; ++a) {
            auto y = calc.compose_letter(x, a);
            if (!detail::dominated(y, target)) continue;
            if (!reachable(reachable, y, budget)) continue;
            word.push_back(a);
            self(self, y);
            word.pop_back();
        }
    };
    dfs(dfs, std::vector<std::uint64_t>(letters, 0));

    // States below the target form a finite graph; collect those that can
    // still reach it, then ask whether any of them needs more than max_len letters.
    std::set<std::vector<std::uint64_t>> states{std::vector<std::uint64_t>(letters, 0)};
    std::map<std::vector<std::uint64_t>, std::vector<std::vector<std::uint64_t>>> preds;
    std::vector<std::vector<std::uint64_t>> todo(states.begin(), states.end());
    while (!todo.empty()) {
        auto x = std::move(todo.back());
        todo.pop_back();
        for (std::size_t a = 0; a < letters; ++a) {
            auto y = calc.compose_letter(x, a);
            if (!detail::dominated(y, target)) continue;
            preds[y].push_back(x);
            if (states.insert(y).second) todo.push_back(y);
        }
    }
    std::set<std::vector<std::uint64_t>> live;
    if (states.count(target)) {
        todo = {target};
        live.insert(target);
        while (!todo.empty()) {
            auto y = std::move(todo.back());
            todo.pop_back();
            for (const auto& x : preds[y])
                if (live.insert(x).second) todo.push_back(x);
        }
    }
    std::set<std::vector<std::uint64_t>> layer;
    if (live.count(std::vector<std::uint64_t>(letters, 0))) layer.insert(std::vector<std::uint64_t>(letters, 0));
    for (std::uint64_t k = 0; k <= max_len && !layer.empty(); ++k) {
        std::set<std::vector<std::uint64_t>> next;
        for (const auto& x : layer)
            for (std::size_t a = 0; a < letters; ++a) {
                auto y = calc.compose_letter(x, a);
                if (live.count(y)) next.insert(std::move(y));
            }
        layer = std::move(next);
    }
    out.truncated = !layer.empty();
    out.reachable = !live.empty();

    std::sort(out.words.begin(), out.words.end(), [&](const auto& u, const auto& v) {
        if (u.size() != v.size()) return u.size() < v.size();
        for (std::size_t n = 0; n < u.size(); ++n) {
            auto pu = cs.label_index(u[n]), pv = cs.label_index(v[n]);
            if (pu != pv) return pu < pv;
        }
        return false;
    });
    return out;
}

}  // namespace nufact
