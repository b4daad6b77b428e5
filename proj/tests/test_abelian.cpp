#include <gtest/gtest.h>

#include <numeric>

#include "nufact/abelian.hpp"

using namespace nufact;

namespace {

std::vector<FinAbGroup> small_groups() {
    return {make_group({1}), make_group({2}), make_group({5}), make_group({6}), make_group({2, 2}),
            make_group({2, 4}), make_group({3, 3}), make_group({2, 2, 2})};
}

}  // namespace

TEST(Abelian, OrderAndRank) {
    auto g = make_group({2, 4});
    EXPECT_EQ(g.order(), 8u);
    EXPECT_EQ(g.rank(), 2u);
    EXPECT_FALSE(g.is_cyclic());
    EXPECT_TRUE(make_group({7}).is_cyclic());
    EXPECT_EQ(make_group({}).order(), 1u);
}

TEST(Abelian, RejectsBadModuli) {
    EXPECT_THROW(make_group({0}), DomainError);
    EXPECT_THROW(make_group({3, -2}), DomainError);
}

TEST(Abelian, ElementReducesCoordinates) {
    auto g = make_group({3, 4});
    EXPECT_EQ(g.element({-1, 9}).coords(), (std::vector<std::int64_t>{2, 1}));
    EXPECT_THROW(g.element({1}), DomainError);
}

TEST(Abelian, GroupAxiomsExhaustive) {
    for (const auto& g : small_groups()) {
        auto all = g.enumerate_elements();
        ASSERT_EQ(all.size(), g.order());
        for (const auto& a : all) {
            EXPECT_EQ(a + g.zero(), a);
            EXPECT_TRUE((a + (-a)).is_zero());
            for (const auto& b : all) {
                EXPECT_EQ(a + b, b + a);
                for (const auto& c : all) EXPECT_EQ((a + b) + c, a + (b + c));
            }
        }
    }
}

TEST(Abelian, IndexRoundTripIsLexicographic) {
    for (const auto& g : small_groups()) {
        auto all = g.enumerate_elements();
        EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
        for (std::uint64_t n = 0; n < g.order(); ++n) {
            EXPECT_EQ(g.index_of(g.from_index(n)), n);
            EXPECT_EQ(all[n], g.from_index(n));
        }
    }
}

TEST(Abelian, IndexArithmeticMatchesElements) {
    for (const auto& g : small_groups()) {
        AdditionTable table(g);
        for (std::uint64_t a = 0; a < g.order(); ++a) {
            EXPECT_EQ(g.neg_index(a), g.index_of(-g.from_index(a)));
            EXPECT_EQ(table.neg(static_cast<std::uint32_t>(a)), g.neg_index(a));
            for (std::uint64_t b = 0; b < g.order(); ++b) {
                auto expect = g.index_of(g.from_index(a) + g.from_index(b));
                EXPECT_EQ(g.add_index(a, b), expect);
                EXPECT_EQ(table.add(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)), expect);
            }
        }
    }
}

TEST(Abelian, ElementOrderByRepeatedAddition) {
    for (const auto& g : small_groups()) {
        for (const auto& a : g.enumerate_elements()) {
            std::uint64_t k = 1;
            auto acc = a;
            while (!acc.is_zero()) {
                acc = acc + a;
                ++k;
            }
            EXPECT_EQ(g.element_order(a), k);
            EXPECT_EQ(g.order() % k, 0u);
            EXPECT_TRUE(g.scale(a, static_cast<std::int64_t>(k)).is_zero());
            EXPECT_EQ(g.scale(a, -1), -a);
        }
    }
}

TEST(Abelian, EnumerationCap) {
    EXPECT_THROW(make_group({1000, 1000}).enumerate_elements(1000), CapExceeded);
}
