#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mgs/subgroups.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace mgs;
using namespace testutil;

namespace {

std::vector<std::vector<BitVec>> element_lists(const std::vector<IsotropicSubspace>& subs) {
    std::vector<std::vector<BitVec>> out;
    for (const auto& s : subs) {
        auto el = s.elements();
        std::sort(el.begin(), el.end());
        out.push_back(el);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BitVec> span_of(std::initializer_list<const char*> gens) {
    std::vector<BitVec> g;
    for (auto s : gens) g.push_back(vec_from_string(s));
    auto el = span_elements(g);
    std::sort(el.begin(), el.end());
    return el;
}

MixedGraph four_node() { return graph("nodes 4\nedge 0 -> 1\nedge 0 -> 2\nedge 0 -> 3\nedge 2 -> 1\nedge 2 -- 3\n"); }

}  // namespace

TEST(Subgroups, ChiValues) {
    EXPECT_EQ(chi(0), 1u);
    EXPECT_EQ(chi(1), 3u);
    EXPECT_EQ(chi(2), 15u);
    EXPECT_EQ(chi(3), 135u);
    EXPECT_EQ(chi(4), 135u * 17u);
}

TEST(Subgroups, TriangleReduction) {
    auto red = reduce_gamma(triangle().skeleton());
    EXPECT_EQ(red.kept, (std::vector<unsigned>{0, 1}));
    EXPECT_EQ(red.removed, (std::vector<unsigned>{2}));
    EXPECT_EQ(red.e(), 1u);
    EXPECT_EQ(red.t(), 1u);
    ASSERT_EQ(red.kernel_basis.size(), 1u);
    EXPECT_EQ(vec_to_string(red.kernel_basis[0], 3), "111");
    EXPECT_EQ(red.gamma_tilde, BinMatrix::parse({"01", "10"}));
}

TEST(Subgroups, TriangleSubspaces) {
    auto subs = enumerate_max_isotropic(reduce_gamma(triangle().skeleton()));
    ASSERT_EQ(subs.size(), 3u);
    std::vector<std::vector<BitVec>> want = {span_of({"100", "111"}), span_of({"010", "111"}),
                                             span_of({"110", "111"})};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(element_lists(subs), want);
}

TEST(Subgroups, FourNodeCountAndListedSpans) {
    auto subs = enumerate_max_isotropic(reduce_gamma(four_node().skeleton()));
    EXPECT_EQ(subs.size(), 15u);
    auto lists = element_lists(subs);
    EXPECT_TRUE(std::count(lists.begin(), lists.end(), span_of({"1100", "1001"})) == 1);
    EXPECT_TRUE(std::count(lists.begin(), lists.end(), span_of({"1011", "0111"})) == 1);
    EXPECT_EQ(membership_count(subs, vec_from_string("1100")), 3u);
}

TEST(Subgroups, KernelElementsLieInEverySubspace) {
    auto subs = enumerate_max_isotropic(reduce_gamma(triangle().skeleton()));
    EXPECT_EQ(membership_count(subs, vec_from_string("111")), 3u);
    EXPECT_EQ(membership_count(subs, vec_from_string("000")), 3u);
    EXPECT_EQ(membership_count(subs, vec_from_string("100")), 1u);
}

TEST(Subgroups, NonzeroMembershipIsChiOfSmallerRank) {
    auto subs = enumerate_max_isotropic(reduce_gamma(four_node().skeleton()));
    for (BitVec v = 1; v < 16; v++) EXPECT_EQ(membership_count(subs, v), chi(1)) << vec_to_string(v, 4);
}

TEST(Subgroups, FullRankZeroGivesOneSubspace) {
    auto subs = enumerate_max_isotropic(reduce_gamma(graph("nodes 3\n").skeleton()));
    ASSERT_EQ(subs.size(), 1u);
    EXPECT_EQ(subs[0].elements().size(), 8u);
}

TEST(Subgroups, CommutesViaGamma) {
    auto gamma = BinMatrix::parse({"01001", "10101", "01010", "00101", "11010"});
    EXPECT_TRUE(commutes_via_gamma(gamma, vec_from_string("11001"), vec_from_string("00110")));
    EXPECT_FALSE(commutes_via_gamma(gamma, vec_from_string("10000"), vec_from_string("01000")));
}

TEST(Subgroups, CommutesViaGammaMatchesDualRows) {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; iter++) {
        unsigned n = 2 + rng() % 5;
        auto g = random_graph(rng, n);
        auto dual = dual_stabilizer(g);
        BitVec k = rng() & low_mask(n), j = rng() & low_mask(n);
        bool want = commutes(ordered_product(dual, k), ordered_product(dual, j));
        EXPECT_EQ(commutes_via_gamma(g.skeleton(), k, j), want);
    }
}

TEST(Subgroups, GammaOrder) {
    EXPECT_EQ(gamma_order(BinMatrix::parse({"01", "10"})), 2u);
    EXPECT_EQ(gamma_order(four_node().skeleton()), 4u);
    EXPECT_THROW(gamma_order(BinMatrix::parse({"11", "11"})), std::invalid_argument);
}

TEST(Subgroups, GammaOrderIsEven) {
    std::mt19937_64 rng(11);
    int seen = 0;
    for (int iter = 0; iter < 300; iter++) {
        auto red = reduce_gamma(random_graph(rng, 2 + rng() % 7).skeleton());
        if (red.e() == 0) continue;
        seen++;
        EXPECT_EQ(gamma_order(red.gamma_tilde) % 2, 0u);
    }
    EXPECT_GT(seen, 100);
}

TEST(Subgroups, NoGramFactorForAlternatingForms) {
    EXPECT_FALSE(gram_factor_search(BinMatrix::parse({"01", "10"})).has_value());
    EXPECT_FALSE(gram_factor_search(four_node().skeleton()).has_value());
    auto id = gram_factor_search(BinMatrix::identity(3));
    ASSERT_TRUE(id.has_value());
    EXPECT_EQ((*id) * id->transpose(), BinMatrix::identity(3));
}

TEST(Subgroups, IsomorphismTriangleToStar) {
    auto star = graph("nodes 3\nedge 0 -> 1\nedge 0 -> 2\n");
    auto f = subgroup_isomorphism(triangle(), star);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(preserves_form(triangle().skeleton(), star.skeleton(), *f));
    EXPECT_EQ(*f, (GeneratorMap{mask_of({0}), mask_of({1}), mask_of({0, 2})}));
}

TEST(Subgroups, LineToCliqueListedMapIsNotAnIsometry) {
    auto line = graph("nodes 4\nedge 0 -> 1\nedge 1 -> 2\nedge 2 -> 3\n");
    auto k4 = graph("nodes 4\nedge 0 -> 1\nedge 0 -> 2\nedge 0 -> 3\nedge 1 -> 2\nedge 1 -> 3\nedge 2 -> 3\n");
    EXPECT_EQ(line.skeleton(), BinMatrix::parse({"0100", "1010", "0101", "0010"}));
    GeneratorMap listed{mask_of({0, 2, 3}), mask_of({0, 2}), mask_of({1, 3}), mask_of({0, 1, 3})};
    EXPECT_FALSE(preserves_form(line.skeleton(), k4.skeleton(), listed));
    auto f = subgroup_isomorphism(line, k4);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(preserves_form(line.skeleton(), k4.skeleton(), *f));
}

TEST(Subgroups, IsomorphismToSelfIsIdentity) {
    auto g = four_node();
    auto f = subgroup_isomorphism(g, g);
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(*f, (GeneratorMap{1, 2, 4, 8}));
}

TEST(Subgroups, IsomorphismRejectsDifferentRank) {
    EXPECT_FALSE(subgroup_isomorphism(triangle(), graph("nodes 3\n")).has_value());
    EXPECT_FALSE(subgroup_isomorphism(triangle(), four_node()).has_value());
}

TEST(Subgroups, RandomIsomorphismsAreIsometries) {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 300; iter++) {
        unsigned n = 2 + rng() % 6;
        auto g = random_graph(rng, n), h = random_graph(rng, n);
        auto f = subgroup_isomorphism(g, h);
        EXPECT_EQ(f.has_value(), mixed_rank(g).e == mixed_rank(h).e);
        if (!f) continue;
        EXPECT_TRUE(preserves_form(g.skeleton(), h.skeleton(), *f));
        EXPECT_EQ(rank_of(*f), n);
    }
}

TEST(Subgroups, EnumerationMatchesOracle) {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 150; iter++) {
        unsigned n = 1 + rng() % 6;
        auto g = random_graph(rng, n);
        auto red = reduce_gamma(g.skeleton());
        auto subs = enumerate_max_isotropic(red);
        EXPECT_EQ(subs.size(), chi(red.e()));
        EXPECT_EQ(element_lists(subs), oracle::isotropic_spaces(g.skeleton().row_vecs(), n))
            << serialize_graph(g);
        for (const auto& s : subs) {
            EXPECT_EQ(s.lifted.size(), red.e() + red.t());
            for (BitVec a : s.lifted)
                for (BitVec b : s.lifted) EXPECT_FALSE(bilinear(a, g.skeleton(), b));
        }
    }
}
