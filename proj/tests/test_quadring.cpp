#include <gtest/gtest.h>

#include <random>
#include <set>

#include "nufact/quadring.hpp"
#include "nufact/text.hpp"
#include "nufact/zerosum.hpp"

using namespace nufact;

namespace {

// Brute-force scan of a coordinate box, independent of the 4N decomposition.
std::vector<QuadInt> scan_norm(std::int64_t n) {
    std::vector<QuadInt> out;
    for (std::int64_t b = -50; b <= 50; ++b)
        for (std::int64_t a = -200; a <= 200; ++a)
            if (a * a + a * b + 6 * b * b == n) out.push_back({a, b});
    std::sort(out.begin(), out.end());
    return out;
}

// Atom test by trying every non-unit y in a box with N(y) < N(x).
bool brute_atom(const QuadInt& x) {
    auto n = norm(x);
    for (std::int64_t b = -20; b <= 20; ++b)
        for (std::int64_t a = -60; a <= 60; ++a) {
            QuadInt y{a, b};
            auto m = a * a + a * b + 6 * b * b;
            if (m <= 1 || m >= n || n % m != 0) continue;
            if (divides(y, x)) return false;
        }
    return true;
}

QuadInt product(const QuadFactorization& f) {
    QuadInt acc{1, 0};
    for (const auto& y : f) acc = acc * y;
    return acc;
}

}  // namespace

TEST(QuadRing, Multiplication) {
    QuadInt w{0, 1};
    EXPECT_EQ(w * w, (QuadInt{-6, 1}));
    EXPECT_EQ((QuadInt{1, 1}) * (QuadInt{2, -1}), (QuadInt{8, 0}));
    EXPECT_EQ((QuadInt{2, 0}) * (QuadInt{3, 0}), (QuadInt{6, 0}));
    EXPECT_EQ((QuadInt{1, 0}) * (QuadInt{5, -3}), (QuadInt{5, -3}));
}

TEST(QuadRing, Norms) {
    EXPECT_EQ(norm({2, 0}), 4);
    EXPECT_EQ(norm({1, 1}), 8);
    EXPECT_EQ(norm({2, -1}), 8);
    EXPECT_EQ(norm({0, 1}), 6);
    EXPECT_EQ(norm({8, 0}), 64);
    EXPECT_EQ(norm({1, 0}), 1);
}

TEST(QuadRing, NormIsConjugateProduct) {
    for (std::int64_t a = -10; a <= 10; ++a)
        for (std::int64_t b = -10; b <= 10; ++b) {
            QuadInt x{a, b};
            EXPECT_EQ(x * conjugate(x), (QuadInt{norm(x), 0}));
        }
}

TEST(QuadRing, NormIsMultiplicative) {
    for (std::int64_t a = -4; a <= 4; ++a)
        for (std::int64_t b = -4; b <= 4; ++b)
            for (std::int64_t c = -4; c <= 4; ++c)
                for (std::int64_t d = -4; d <= 4; ++d) {
                    QuadInt x{a, b}, y{c, d};
                    EXPECT_EQ(norm(x * y), norm(x) * norm(y));
                }
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> coord(-1000, 1000);
    for (int n = 0; n < 1000; ++n) {
        QuadInt x{coord(rng), coord(rng)}, y{coord(rng), coord(rng)};
        EXPECT_EQ(norm(x * y), norm(x) * norm(y));
    }
}

TEST(QuadRing, UnitsArePlusMinusOne) {
    EXPECT_EQ(elements_of_norm(1), (std::vector<QuadInt>{{-1, 0}, {1, 0}}));
    EXPECT_TRUE(is_unit({-1, 0}));
    EXPECT_FALSE(is_unit({0, 1}));
}

TEST(QuadRing, ElementsOfNormAgainstScan) {
    EXPECT_TRUE(elements_of_norm(2).empty());
    EXPECT_EQ(elements_of_norm(4), (std::vector<QuadInt>{{-2, 0}, {2, 0}}));
    for (std::int64_t n = 0; n <= 200; ++n) EXPECT_EQ(elements_of_norm(n), scan_norm(n)) << n;
    EXPECT_THROW(elements_of_norm(-1), DomainError);
    Caps caps;
    caps.norm = 100;
    EXPECT_THROW(elements_of_norm(101, caps), CapExceeded);
}

TEST(QuadRing, CanonicalAssociate) {
    EXPECT_EQ(canonical_associate({-2, 0}), (QuadInt{2, 0}));
    EXPECT_EQ(canonical_associate({-1, -1}), (QuadInt{1, 1}));
    EXPECT_EQ(canonical_associate({-2, 1}), (QuadInt{2, -1}));
    EXPECT_EQ(canonical_associate({0, -1}), (QuadInt{0, 1}));
    EXPECT_EQ(canonical_associate({3, -1}), (QuadInt{3, -1}));
}

TEST(QuadRing, Division) {
    EXPECT_EQ(divides({1, 1}, {8, 0}), (QuadInt{2, -1}));
    EXPECT_FALSE(divides({1, 1}, {4, 0}).has_value());
    EXPECT_FALSE(divides({2, -1}, {4, 0}).has_value());
    EXPECT_THROW(divides({0, 0}, {4, 0}), DomainError);
}

TEST(QuadRing, AtomsAgainstBruteForce) {
    EXPECT_TRUE(is_atom({2, 0}));
    EXPECT_TRUE(is_atom({1, 1}));
    EXPECT_TRUE(is_atom({2, -1}));
    EXPECT_FALSE(is_atom({8, 0}));
    EXPECT_FALSE(is_atom({4, 0}));
    for (std::int64_t a = -8; a <= 8; ++a)
        for (std::int64_t b = -4; b <= 4; ++b) {
            QuadInt x{a, b};
            if (x.is_zero() || is_unit(x)) continue;
            EXPECT_EQ(is_atom(x), brute_atom(x)) << text::format_quad(x);
        }
    EXPECT_THROW(is_atom({1, 0}), DomainError);
}

TEST(QuadRing, FactorizationsOfEight) {
    auto fs = element_factorizations({8, 0});
    ASSERT_EQ(fs.size(), 2u);
    EXPECT_EQ(fs[0], (QuadFactorization{{1, 1}, {2, -1}}));
    EXPECT_EQ(fs[1], (QuadFactorization{{2, 0}, {2, 0}, {2, 0}}));
    for (const auto& f : fs)
        for (const auto& y : f) EXPECT_TRUE(is_atom(y));
}

TEST(QuadRing, FactorizationEdgeCases) {
    auto four = element_factorizations({4, 0});
    ASSERT_EQ(four.size(), 1u);
    EXPECT_EQ(four[0], (QuadFactorization{{2, 0}, {2, 0}}));
    auto atom = element_factorizations({1, 1});
    ASSERT_EQ(atom.size(), 1u);
    EXPECT_EQ(atom[0], (QuadFactorization{{1, 1}}));
    auto unit = element_factorizations({-1, 0});
    ASSERT_EQ(unit.size(), 1u);
    EXPECT_TRUE(unit[0].empty());
    EXPECT_THROW(element_factorizations({0, 0}), DomainError);
}

TEST(QuadRing, FactorizationsMultiplyBack) {
    for (std::int64_t a = -12; a <= 12; ++a)
        for (std::int64_t b = -3; b <= 3; ++b) {
            QuadInt x{a, b};
            if (x.is_zero()) continue;
            auto fs = element_factorizations(x);
            ASSERT_FALSE(fs.empty());
            std::set<QuadFactorization> distinct(fs.begin(), fs.end());
            EXPECT_EQ(distinct.size(), fs.size());
            for (const auto& f : fs) {
                auto p = product(f);
                EXPECT_TRUE(p == x || p == -x) << text::format_quad(x);
                for (const auto& y : f) {
                    EXPECT_EQ(canonical_associate(y), y);
                    EXPECT_TRUE(brute_atom(y));
                }
            }
        }
}

TEST(QuadRing, LengthSetOfEightMatchesZeroSumModel) {
    std::set<std::uint64_t> lengths;
    for (const auto& f : element_factorizations({8, 0})) lengths.insert(f.size());
    auto g = make_group({3});
    EXPECT_EQ(lengths, length_set(text::parse_sequence(g, "1^3 2^3")));
}

TEST(QuadRing, AtomsUpToNorm) {
    auto list = atoms_up_to_norm(8);
    EXPECT_EQ(list, (std::vector<QuadInt>{{2, 0}, {0, 1}, {1, -1}, {1, 1}, {2, -1}}));
}

TEST(QuadRing, OverflowIsReported) {
    QuadInt big{std::int64_t{1} << 40, 0};
    EXPECT_THROW(big * big, DomainError);
    EXPECT_THROW(norm(big), DomainError);
}
