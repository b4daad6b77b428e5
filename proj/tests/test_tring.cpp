#include <gtest/gtest.h>

#include <random>
#include <set>

#include "nufact/text.hpp"
#include "nufact/tring.hpp"

using namespace nufact;
using namespace nufact::tring;

namespace {

// Two-sided ideal inside T: T*A and A*T stay inside A.
bool brute_ideal(const ExponentMatrix& a) {
    auto t = ring_matrix(a.size());
    return contained_in(a, t) && contained_in(mul(t, a), a) && contained_in(mul(a, t), a);
}

// Every matrix in the box [lo, hi] that passes brute_ideal.
std::vector<ExponentMatrix> box_ideals(const ExponentMatrix& lo, const ExponentMatrix& hi) {
    std::vector<ExponentMatrix> out;
    auto m = lo;
    const auto l = lo.size();
    while (true) {
        if (brute_ideal(m)) out.push_back(m);
        std::size_t n = l * l;
        while (true) {
            if (n == 0) return out;
            --n;
            auto i = n / l, j = n % l;
            if (m(i, j) < hi(i, j)) {
                ++m(i, j);
                break;
            }
            m(i, j) = lo(i, j);
        }
    }
}

// Covers by box enumeration: the ideals strictly below `upper` and above `target`
// that are maximal for inclusion.
std::vector<ExponentMatrix> box_covers(const ExponentMatrix& upper, const ExponentMatrix& target) {
    std::vector<ExponentMatrix> inside;
    for (auto& j : box_ideals(upper, target))
        if (j != upper) inside.push_back(j);
    std::vector<ExponentMatrix> out;
    for (const auto& j : inside) {
        bool maximal = true;
        for (const auto& k : inside)
            if (k != j && contained_in(j, k)) maximal = false;
        if (maximal) out.push_back(j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ExponentMatrix m(const char* s, std::size_t l = 3) { return text::parse_matrix(s, l); }

}  // namespace

TEST(TRing, RingMatrix) {
    EXPECT_EQ(ring_matrix(3), (ExponentMatrix{{0, 1, 1}, {0, 0, 1}, {0, 0, 0}}));
    EXPECT_THROW(ring_matrix(1), DomainError);
    EXPECT_TRUE(is_ideal(ring_matrix(4)));
}

TEST(TRing, MaximalIdealsAreDiagonalBumps) {
    auto ms = maximal_ideals(3);
    ASSERT_EQ(ms.size(), 3u);
    auto t = ring_matrix(3);
    for (std::size_t n = 0; n < 3; ++n) {
        auto bumped = t;
        bumped(2 - n, 2 - n) = 1;
        EXPECT_EQ(ms[n], bumped) << maximal_label(n);
        EXPECT_EQ(mul(ms[n], ms[n]), ms[n]);
        EXPECT_TRUE(is_ideal(ms[n]));
    }
    auto two = maximal_ideals(2);
    ASSERT_EQ(two.size(), 2u);
    for (const auto& q : two) EXPECT_EQ(mul(q, q), q);
}

TEST(TRing, TauOnMaximalIdeals) {
    auto ms = maximal_ideals(3);
    EXPECT_EQ(tau_ideal(ms[0]), ms[1]);
    EXPECT_EQ(tau_ideal(ms[1]), ms[2]);
    EXPECT_EQ(tau_ideal(ms[2]), ms[0]);
    for (std::size_t l = 2; l <= 6; ++l) {
        auto qs = maximal_ideals(l);
        std::set<ExponentMatrix> images;
        for (std::size_t n = 0; n < l; ++n) {
            EXPECT_EQ(tau_ideal(qs[n]), qs[(n + 1) % l]) << "l=" << l;
            images.insert(tau_ideal(qs[n]));
        }
        EXPECT_EQ(images.size(), l);
    }
}

TEST(TRing, LeftDualOfRadical) {
    auto j = jacobson_radical(3);
    EXPECT_EQ(j, (ExponentMatrix{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}));
    auto dual = left_dual(j);
    EXPECT_TRUE(contained_in(ring_matrix(3), dual));
    EXPECT_NE(dual, ring_matrix(3));
    EXPECT_EQ(tau_ideal(j), j);
    EXPECT_TRUE(contained_in(ring_matrix(3), left_dual(ring_matrix(3))));
    // double dual of Q1 is integral even though the single dual is not
    auto q1 = maximal_ideals(3)[0];
    EXPECT_FALSE(contained_in(left_dual(q1), ring_matrix(3)));
    EXPECT_TRUE(is_ideal(tau_ideal(q1)));
}

TEST(TRing, RadicalPowers) {
    ExponentMatrix pi_t(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k) pi_t(i, k) = ring_entry(i, k) + 1;
    auto j = jacobson_radical(3);
    EXPECT_EQ(mul(mul(j, j), j), pi_t);
}

TEST(TRing, ProductsOfMaximalIdeals) {
    EXPECT_EQ(m("Q1*Q2"), (ExponentMatrix{{0, 1, 1}, {0, 1, 1}, {0, 1, 1}}));
    EXPECT_EQ(m("Q1*Q2*Q1"), m("Q1*Q2"));
    EXPECT_EQ(divisor_of(m("Q1*Q2")), (Divisor{{"Q1", 2}, {"Q2", 1}}));
    EXPECT_EQ(divisor_of(m("Q2*Q1")), (Divisor{{"Q1", 1}, {"Q2", 1}}));
    EXPECT_EQ(divisor_of(m("Q1*Q2*Q3")), (Divisor{{"Q1", 3}, {"Q2", 2}, {"Q3", 1}}));
}

TEST(TRing, DivisorsOfNamedIdeals) {
    EXPECT_TRUE(divisor_of(ring_matrix(3)).is_zero());
    auto ms = maximal_ideals(3);
    for (std::size_t n = 0; n < 3; ++n) EXPECT_EQ(divisor_of(ms[n]), Divisor::indicator(maximal_label(n)));
    EXPECT_EQ(divisor_of(jacobson_radical(3)), (Divisor{{"Q1", 1}, {"Q2", 1}, {"Q3", 1}}));
    EXPECT_THROW(divisor_of(ExponentMatrix{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}), DomainError);
}

TEST(TRing, RadicalIsNotAProductOfMaximalIdeals) {
    auto ms = maximal_ideals(3);
    auto j = jacobson_radical(3);
    std::vector<ExponentMatrix> layer{ring_matrix(3)};
    for (int len = 1; len <= 6; ++len) {
        std::vector<ExponentMatrix> next;
        for (const auto& a : layer)
            for (const auto& q : ms) next.push_back(mul(a, q));
        for (const auto& p : next) EXPECT_NE(p, j);
        layer = std::move(next);
    }
}

TEST(TRing, IsIdealMatchesDefinition) {
    for (std::size_t l : {2u, 3u}) {
        // every matrix with entries in [-1, 2], filtered both ways
        auto all = box_ideals(ExponentMatrix(l, -1), ExponentMatrix(l, 2));
        auto m0 = ExponentMatrix(l, -1);
        std::vector<ExponentMatrix> via_is_ideal;
        std::function<void(std::size_t)> rec = [&](std::size_t n) {
            if (n == l * l) {
                if (is_ideal(m0)) via_is_ideal.push_back(m0);
                return;
            }
            for (std::int64_t v = -1; v <= 2; ++v) {
                m0(n / l, n % l) = v;
                rec(n + 1);
            }
        };
        rec(0);
        EXPECT_EQ(via_is_ideal, all) << "l=" << l;
        EXPECT_FALSE(all.empty());
    }
}

TEST(TRing, EnumerateIdealsMatchesBox) {
    for (std::size_t l : {2u, 3u})
        for (std::int64_t e : {1, 2}) {
            auto t = ring_matrix(l);
            ExponentMatrix hi(l);
            for (std::size_t i = 0; i < l; ++i)
                for (std::size_t k = 0; k < l; ++k) hi(i, k) = std::max(t(i, k), e);
            EXPECT_EQ(enumerate_ideals(l, e), box_ideals(t, hi)) << "l=" << l << " e=" << e;
        }
    EXPECT_EQ(enumerate_ideals(3, 0), (std::vector<ExponentMatrix>{ring_matrix(3)}));
    Caps caps;
    caps.ideal_box = 100;
    EXPECT_THROW(enumerate_ideals(3, 3, caps), CapExceeded);
}

TEST(TRing, SmallCorpora) {
    auto two = enumerate_ideals(2, 1);
    std::set<ExponentMatrix> s(two.begin(), two.end());
    EXPECT_EQ(s.size(), two.size());
    EXPECT_TRUE(s.count(ring_matrix(2)));
    for (const auto& q : maximal_ideals(2)) EXPECT_TRUE(s.count(q));
    EXPECT_TRUE(s.count(jacobson_radical(2)));
    auto three = enumerate_ideals(3, 1);
    std::set<ExponentMatrix> s3(three.begin(), three.end());
    for (const char* name : {"T", "Q1", "Q2", "Q3", "J", "Q1*Q2", "Q2*Q1", "Q2*Q3", "Q3*Q2", "Q1*Q3"}) EXPECT_TRUE(s3.count(m(name))) << name;
    // Q3*Q1 has a corner exponent 2
    EXPECT_FALSE(s3.count(m("Q3*Q1")));
}

TEST(TRing, MulIsAssociativeAndMonotone) {
    auto corpus = enumerate_ideals(3, 1);
    for (const auto& a : corpus)
        for (const auto& b : corpus) {
            auto ab = mul(a, b);
            EXPECT_TRUE(is_ideal(ab));
            EXPECT_TRUE(contained_in(ab, a));
            EXPECT_TRUE(contained_in(ab, b));
            for (const auto& c : corpus) ASSERT_EQ(mul(ab, c), mul(a, mul(b, c)));
        }
}

TEST(TRing, IntersectionIsEntrywiseMax) {
    auto ms = maximal_ideals(3);
    auto i12 = intersect(ms[0], ms[1]);
    EXPECT_TRUE(contained_in(i12, ms[0]));
    EXPECT_TRUE(contained_in(i12, ms[1]));
    EXPECT_TRUE(is_ideal(i12));
}

TEST(TRing, CoversMatchBoxEnumeration) {
    auto corpus = enumerate_ideals(3, 2);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 60; ++trial) {
        const auto& target = corpus[rng() % corpus.size()];
        auto upper = ring_matrix(3);
        while (upper != target) {
            auto fast = covers_within(upper, target);
            ASSERT_EQ(fast, box_covers(upper, target));
            upper = fast[rng() % fast.size()];
        }
    }
}

TEST(TRing, ChainsEndAtTheIdeal) {
    for (const auto& a : enumerate_ideals(3, 2)) {
        auto chain = maximal_chain(a);
        if (a == ring_matrix(3)) {
            EXPECT_TRUE(chain.empty());
            continue;
        }
        EXPECT_EQ(chain.back().ideal, a);
        auto prev = ring_matrix(3);
        for (const auto& step : chain) {
            EXPECT_TRUE(contained_in(step.ideal, prev));
            EXPECT_NE(step.ideal, prev);
            EXPECT_TRUE(contained_in(mul(maximal_ideals(3)[step.maximal], prev), step.ideal));
            prev = step.ideal;
        }
    }
}

TEST(TRing, Validation) {
    EXPECT_THROW(mul(ring_matrix(2), ring_matrix(3)), DomainError);
    EXPECT_THROW((ExponentMatrix{{0, 1}, {0}}), DomainError);
    EXPECT_FALSE(is_ideal(ExponentMatrix{{0, 0}, {0, 0}}));
}
