#include <gtest/gtest.h>

#include "nufact/json_io.hpp"
#include "nufact/oracle.hpp"

using namespace nufact;

namespace {

// Swaps the arguments: wrong in general since composition is not commutative.
Divisor swapped_compose(const CycleStructure& cs, const Divisor& d, const Divisor& e) { return compose(cs, e, d); }

void expect_all_pass(const oracle::Report& rep) {
    for (const auto& p : rep.properties) {
        EXPECT_TRUE(p.passed) << p.name << ": " << p.counterexample;
        EXPECT_GT(p.checked, 0u) << p.name;
    }
    EXPECT_TRUE(rep.all_passed());
}

}  // namespace

TEST(Oracle, DefaultCorpusPasses) {
    auto rep = oracle::run({});
    EXPECT_EQ(rep.l, 3u);
    EXPECT_EQ(rep.max_exp, 2);
    ASSERT_EQ(rep.properties.size(), 5u);
    EXPECT_EQ(rep.properties[0].name, "homomorphism");
    EXPECT_EQ(rep.properties[1].name, "injectivity");
    EXPECT_EQ(rep.properties[2].name, "realizability_image");
    EXPECT_EQ(rep.properties[3].name, "chain_independence");
    EXPECT_EQ(rep.properties[4].name, "tau_cycle");
    expect_all_pass(rep);
}

TEST(Oracle, SmallCorpusPasses) {
    oracle::OracleOptions opt;
    opt.l = 2;
    opt.max_exp = 1;
    expect_all_pass(oracle::run(opt));
}

TEST(Oracle, OtherSizesPass) {
    for (std::size_t l : {2u, 4u}) {
        oracle::OracleOptions opt;
        opt.l = l;
        opt.max_exp = l == 2 ? 3 : 1;
        opt.chain_samples = 30;
        expect_all_pass(oracle::run(opt));
    }
}

TEST(Oracle, CorruptedComposeIsCaught) {
    auto rep = oracle::run({}, swapped_compose);
    EXPECT_FALSE(rep.properties[0].passed);
    EXPECT_FALSE(rep.properties[0].counterexample.empty());
    EXPECT_FALSE(rep.all_passed());
    for (std::size_t n = 1; n < rep.properties.size(); ++n) EXPECT_TRUE(rep.properties[n].passed);
}

TEST(Oracle, ReportsAreDeterministic) {
    oracle::OracleOptions opt;
    opt.seed = 99;
    auto a = json::encode(oracle::run(opt)).dump();
    auto b = json::encode(oracle::run(opt)).dump();
    EXPECT_EQ(a, b);
}

TEST(Oracle, RealizabilityImageDetectsGaps) {
    // A corpus missing Q2 cannot attain the realizable divisor Q2.
    auto corpus = tring::enumerate_ideals(3, 2);
    auto q2 = tring::maximal_ideals(3)[1];
    corpus.erase(std::find(corpus.begin(), corpus.end(), q2));
    oracle::DivisorCache div;
    auto r = oracle::check_realizability_image(3, corpus, div, 1);
    EXPECT_FALSE(r.passed);
    EXPECT_NE(r.counterexample.find("Q2"), std::string::npos);
}

TEST(Oracle, InjectivityDetectsCollisions) {
    auto corpus = tring::enumerate_ideals(3, 1);
    corpus.push_back(corpus.front());
    oracle::DivisorCache div;
    EXPECT_FALSE(oracle::check_injectivity(3, corpus, div).passed);
}
