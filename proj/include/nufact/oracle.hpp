#pragma once

/**
 * @file oracle.hpp
 * @brief Cross-validation of the abstract divisor calculus against the exact
 * triangular-order model, over exhaustive desk-scale corpora of ideals.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nufact/divcalc.hpp"
#include "nufact/tring.hpp"

namespace nufact::oracle {

using tring::ExponentMatrix;

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::uint64_t checked = 0;
    std::string counterexample;  // empty when passed
};

struct Report {
    std::size_t l = 0;
    std::int64_t max_exp = 0;
    std::uint64_t seed = 0;
    std::uint64_t corpus_size = 0;
    std::vector<PropertyResult> properties;

    bool all_passed() const {
        for (const auto& p : properties)
            if (!p.passed) return false;
        return true;
    }
};

using ComposeFn = std::function<Divisor(const CycleStructure&, const Divisor&, const Divisor&)>;

inline Divisor default_compose(const CycleStructure& cs, const Divisor& d, const Divisor& e) { return compose(cs, d, e); }

namespace detail {

inline std::string show(const ExponentMatrix& m) {
    std::ostringstream os;
    os << '[';
    auto rows = m.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < rows[i].size(); ++j) os << (j ? "," : "") << rows[i][j];
        os << ']';
    }
    os << ']';
    return os.str();
}

inline std::string show(const CycleStructure& cs, const Divisor& d) {
    std::ostringstream os;
    bool first = true;
    for (const auto& p : cs.labels()) {
        auto n = d[p];
        if (n == 0) continue;
        if (!first) os << '+';
        first = false;
        if (n != 1) os << n;
        os << p;
    }
    if (first) os << '0';
    return os.str();
}

/// Portable bounded draw from a 64-bit engine.
inline std::size_t draw(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

}  // namespace detail

/// Caches divisor_of over the default (lexicographically least) chains.
class DivisorCache {
public:
    const Divisor& operator()(const ExponentMatrix& a) {
        auto it = cache_.find(a);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(a, tring::divisor_of(a)).first->second;
    }

private:
    std::map<ExponentMatrix, Divisor> cache_;
};

inline PropertyResult check_homomorphism(std::size_t l, const std::vector<ExponentMatrix>& corpus, DivisorCache& div,
                                         const ComposeFn& compose_fn = default_compose) {
    PropertyResult r{"homomorphism", true, 0, {}};
    auto cs = tring::cycle_structure(l);
    for (const auto& a : corpus)
        for (const auto& b : corpus) {
            ++r.checked;
            const auto& da = div(a);
            const auto& db = div(b);
            auto lhs = div(tring::mul(a, b));
            auto rhs = compose_fn(cs, da, db);
            if (lhs != rhs) {
                r.passed = false;
                r.counterexample = "A=" + detail::show(a) + " B=" + detail::show(b) + " div(AB)=" + detail::show(cs, lhs) +
                                   " div(A)o div(B)=" + detail::show(cs, rhs);
                return r;
            }
        }
    return r;
}

inline PropertyResult check_injectivity(std::size_t l, const std::vector<ExponentMatrix>& corpus, DivisorCache& div) {
    PropertyResult r{"injectivity", true, 0, {}};
    auto cs = tring::cycle_structure(l);
    std::map<Divisor, ExponentMatrix> seen;
    for (const auto& a : corpus) {
        ++r.checked;
        auto [it, fresh] = seen.emplace(div(a), a);
        if (!fresh) {
            r.passed = false;
            r.counterexample = "A=" + detail::show(it->second) + " B=" + detail::show(a) +
                               " share divisor " + detail::show(cs, it->first);
            return r;
        }
    }
    return r;
}

/// Every divisor of a corpus ideal is realizable, and every realizable
/// divisor with all counts <= count_bound is the divisor of a corpus ideal.
inline PropertyResult check_realizability_image(std::size_t l, const std::vector<ExponentMatrix>& corpus,
                                                DivisorCache& div, std::uint64_t count_bound) {
    PropertyResult r{"realizability_image", true, 0, {}};
    auto cs = tring::cycle_structure(l);
    std::vector<Divisor> image;
    for (const auto& a : corpus) {
        ++r.checked;
        const auto& d = div(a);
        if (!is_realizable(cs, d)) {
            r.passed = false;
            r.counterexample = "A=" + detail::show(a) + " has non-realizable divisor " + detail::show(cs, d);
            return r;
        }
        image.push_back(d);
    }
    std::sort(image.begin(), image.end());
    std::vector<std::uint64_t> counts(l, 0);
    while (true) {
        Divisor d;
        for (std::size_t n = 0; n < l; ++n) d.set(tring::maximal_label(n), counts[n]);
        if (is_realizable(cs, d)) {
            ++r.checked;
            if (!std::binary_search(image.begin(), image.end(), d)) {
                r.passed = false;
                r.counterexample = "realizable divisor " + detail::show(cs, d) + " not attained in corpus";
                return r;
            }
        }
        std::size_t n = 0;
        while (n < l && counts[n] == count_bound) counts[n++] = 0;
        if (n == l) break;
        ++counts[n];
    }
    return r;
}

/// Random alternative maximal chains give the same divisor as the default chain.
inline PropertyResult check_chain_independence(const std::vector<ExponentMatrix>& corpus, DivisorCache& div,
                                               std::uint64_t samples, std::uint64_t chains_per_ideal,
                                               std::uint64_t seed) {
    PropertyResult r{"chain_independence", true, 0, {}};
    if (corpus.empty()) return r;
    std::mt19937_64 rng(seed);
    tring::CoverChooser random_choice = [&](const std::vector<ExponentMatrix>& covers) {
        return detail::draw(rng, covers.size());
    };
    for (std::uint64_t s = 0; s < samples; ++s) {
        const auto& a = corpus[detail::draw(rng, corpus.size())];
        const auto& expected = div(a);
        for (std::uint64_t c = 0; c < chains_per_ideal; ++c) {
            ++r.checked;
            auto got = tring::divisor_of(a, random_choice);
            if (got != expected) {
                auto cs = tring::cycle_structure(a.size());
                r.passed = false;
                r.counterexample = "A=" + detail::show(a) + " default chain " + detail::show(cs, expected) +
                                   " random chain " + detail::show(cs, got);
                return r;
            }
        }
    }
    return r;
}

/// tau on the maximal ideals is the cyclic successor Q1 -> Q2 -> ... -> Q1,
/// agreeing with the divisor-calculus tau of cycle_structure(l).
inline PropertyResult check_tau_cycle(std::size_t l) {
    PropertyResult r{"tau_cycle", true, 0, {}};
    auto ms = tring::maximal_ideals(l);
    auto cs = tring::cycle_structure(l);
    for (std::size_t n = 0; n < l; ++n) {
        ++r.checked;
        auto image = tring::tau_ideal(ms[n]);
        auto expected = cs.position(tau(cs, tring::maximal_label(n))).index;
        if (image != ms[expected]) {
            r.passed = false;
            r.counterexample = "tau(" + tring::maximal_label(n) + ")=" + detail::show(image) + " expected " +
                               detail::show(ms[expected]);
            return r;
        }
    }
    return r;
}

struct OracleOptions {
    std::size_t l = 3;
    std::int64_t max_exp = 2;
    std::uint64_t seed = 1;
    std::uint64_t chain_samples = 100;
    std::uint64_t chains_per_ideal = 4;
    Caps caps{};
};

/// Full cross-validation. The realizability image is checked for counts up to
/// max_exp - 1: an ideal whose divisor has counts <= c contains pi^c T, whose
/// exponents are at most c + 1.
inline Report run(const OracleOptions& opt, const ComposeFn& compose_fn = default_compose) {
    Report rep;
    rep.l = opt.l;
    rep.max_exp = opt.max_exp;
    rep.seed = opt.seed;
    auto corpus = tring::enumerate_ideals(opt.l, opt.max_exp, opt.caps);
    rep.corpus_size = corpus.size();
    DivisorCache div;
    rep.properties.push_back(check_homomorphism(opt.l, corpus, div, compose_fn));
    rep.properties.push_back(check_injectivity(opt.l, corpus, div));
    auto bound = opt.max_exp >= 1 ? static_cast<std::uint64_t>(opt.max_exp - 1) : 0;
    rep.properties.push_back(check_realizability_image(opt.l, corpus, div, bound));
    rep.properties.push_back(check_chain_independence(corpus, div, opt.chain_samples, opt.chains_per_ideal, opt.seed));
    rep.properties.push_back(check_tau_cycle(opt.l));
    return rep;
}

}  // namespace nufact::oracle
