#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mgs/children.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace mgs;
using namespace testutil;

namespace {

std::vector<std::string> term_strs(const std::vector<SignedTerm>& terms, unsigned n) {
    std::vector<std::string> out;
    for (const auto& t : terms) out.push_back(vec_to_string(t.j, n) + "=" + t.coefficient().str());
    return out;
}

/// 2^n rho from the signed words, summed as dense Kronecker products.
oracle::Mat dense_sum(const std::vector<SignedTerm>& terms, unsigned n) {
    oracle::Mat acc(size_t{1} << n);
    for (const auto& t : terms) acc = oracle::add(acc, oracle::pauli(t.signed_word().str()));
    return acc;
}

std::string matrix_key(const GaussianMatrix& m) {
    std::string s;
    auto r = m.reduced();
    for (const auto& e : r.entries()) s += e.str() + ",";
    return s + std::to_string(r.denom_log2());
}

void expect_valid_child(const ChildResult& c, const std::string& ctx) {
    unsigned n = c.parent.n;
    EXPECT_TRUE(c.rho.trace_is_one()) << ctx;
    EXPECT_TRUE(c.rho.is_hermitian()) << ctx;
    EXPECT_EQ(c.terms.size(), size_t{1} << (n - c.parent.e)) << ctx;
    EXPECT_TRUE(oracle::same(dense_sum(c.terms, n), n, c.rho)) << ctx;
    EXPECT_EQ(c.rho, child_by_partial_trace(c.parent)) << ctx;
    // tr(rho^2) = 2^-e.
    auto sq = c.rho * c.rho;
    EXPECT_EQ(sq.trace_numerator(), Gaussian(std::int64_t{1} << (sq.denom_log2() - c.parent.e))) << ctx;
    for (const auto& t : c.terms) {
        EXPECT_TRUE(is_hermitian(t.signed_word())) << ctx;
        auto w = to_dense(t.signed_word());
        EXPECT_EQ(w * c.rho, c.rho) << ctx << " " << t.signed_word().str();
    }
}

}  // namespace

TEST(Children, TriangleFirstChildTerms) {
    auto p = parent_from_phase(triangle(), PhaseFunction::parse("2(x0x2+x1x2+x1x3+x2x3)+x2", 4));
    auto c = child_from_pauli_sum(p);
    EXPECT_EQ(term_strs(c.terms, 3), (std::vector<std::string>{"000=1", "011=-i", "100=1", "111=-i"}));
    EXPECT_EQ(c.terms[1].word.str(), "-iZYX");
    EXPECT_EQ(c.terms[3].word.str(), "-iYYY");
    expect_valid_child(c, "first child");
}

TEST(Children, ColumnChoiceSetsCoefficients) {
    auto parents = extend_e1(triangle());
    EXPECT_EQ(term_strs(child_from_pauli_sum(parents[0]).terms, 3),
              (std::vector<std::string>{"000=1", "011=i", "100=1", "111=i"}));
    EXPECT_EQ(term_strs(child_from_pauli_sum(parents[1]).terms, 3),
              (std::vector<std::string>{"000=1", "011=-i", "100=1", "111=-i"}));
}

TEST(Children, BinaryLinearTermFlipsSigns) {
    auto base = child_from_pauli_sum(
        parent_from_phase(triangle(), PhaseFunction::parse("2(x0x2+x1x2+x1x3+x2x3)+x2", 4)));
    auto flipped = child_from_pauli_sum(
        parent_from_phase(triangle(), PhaseFunction::parse("2(x0x2+x1x2+x1x3+x2x3+x0)+x2", 4)));
    EXPECT_EQ(term_strs(flipped.terms, 3), (std::vector<std::string>{"000=1", "011=-i", "100=-1", "111=i"}));
    EXPECT_EQ(flipped.rho, conjugate_by_z(base.rho, 3, unit(0)));
}

TEST(Children, LabSignPatternsAreZConjugates) {
    for (const char* name : {"triangle", "four_node"}) {
        auto g = std::string(name) == "triangle" ? triangle() : fixture(name);
        unsigned n = g.n();
        auto subs = enumerate_max_isotropic(reduce_gamma(g.skeleton()));
        auto base = extend_for_subgroup(g, subs[0]);
        ASSERT_TRUE(base.has_value());
        auto rho0 = child_from_pauli_sum(*base).rho;
        std::set<std::string> distinct;
        for (BitVec k = 0; k < (BitVec{1} << n); k++) {
            auto p = *base;
            p.lab_signs ^= k;
            auto rho = child_from_pauli_sum(p).rho;
            EXPECT_EQ(rho, conjugate_by_z(rho0, n, k)) << name << " " << k;
            distinct.insert(matrix_key(rho));
        }
        EXPECT_EQ(distinct.size(), size_t{1} << (n - base->e)) << name;
    }
}

TEST(Children, FindZPattern) {
    auto parents = extend_e1(triangle());
    auto a = child_from_pauli_sum(parents[0]).rho;
    auto b = conjugate_by_z(a, 3, vec_from_string("110"));
    auto k = find_z_pattern(a, b, 3, 0);
    ASSERT_TRUE(k.has_value());
    EXPECT_EQ(conjugate_by_z(a, 3, *k), b);
    auto other = child_from_pauli_sum(parents[2]).rho;
    EXPECT_FALSE(find_z_pattern(a, other, 3, 0).has_value());
}

TEST(Children, TriangleFamily) {
    auto fam = children_family_e1(triangle());
    ASSERT_EQ(fam.children.size(), 6u);
    EXPECT_EQ(fam.class_count, 3u);
    EXPECT_EQ(fam.class_of, (std::vector<size_t>{0, 0, 1, 2, 1, 2}));
    EXPECT_EQ(fam.pairs.size(), 3u);
    for (const auto& pr : fam.pairs) {
        EXPECT_EQ(conjugate_by_z(fam.children[pr.a].rho, 3, pr.k), fam.children[pr.b].rho);
        EXPECT_EQ(fam.class_of[pr.a], fam.class_of[pr.b]);
    }
    for (size_t i = 0; i < 6; i++) expect_valid_child(fam.children[i], "family " + std::to_string(i));
}

TEST(Children, FamilyClassesMatchSubgroups) {
    std::mt19937_64 rng(21);
    int seen = 0;
    for (int iter = 0; iter < 400 && seen < 40; iter++) {
        auto g = random_graph(rng, 2 + rng() % 5);
        if (mixed_rank(g).e != 1) continue;
        seen++;
        auto fam = children_family_e1(g);
        EXPECT_EQ(fam.children.size(), 6u);
        EXPECT_EQ(fam.class_count, 3u) << serialize_graph(g);
        std::set<std::vector<BitVec>> js;
        for (const auto& c : fam.children) js.insert(rref(c.parent.G.row_vecs()));
        EXPECT_EQ(js.size(), 3u);
    }
    EXPECT_GE(seen, 20);
}

TEST(Children, PureGraphChildIsProjector) {
    auto g = graph("nodes 3\nedge 0 -- 1\nedge 1 -- 2\n");
    auto subs = enumerate_max_isotropic(reduce_gamma(g.skeleton()));
    auto c = child_from_pauli_sum(*extend_for_subgroup(g, subs[0]));
    EXPECT_EQ(c.terms.size(), 8u);
    auto v = oracle::state({{{0, 1}, 2}, {{1, 2}, 2}}, 3);
    oracle::Mat proj(8);
    for (size_t r = 0; r < 8; r++)
        for (size_t col = 0; col < 8; col++) proj.at(r, col) = v[r] * v[col].conj();
    EXPECT_TRUE(oracle::same(proj, 3, c.rho));
    EXPECT_EQ(c.rho * c.rho, c.rho);
}

TEST(Children, RandomGraphsAllSubgroups) {
    std::mt19937_64 rng(8);
    for (int iter = 0; iter < 40; iter++) {
        auto g = random_graph(rng, 2 + rng() % 4);
        for (const auto& s : enumerate_max_isotropic(reduce_gamma(g.skeleton()))) {
            auto p = extend_for_subgroup(g, s);
            ASSERT_TRUE(p.has_value());
            auto c = child_from_pauli_sum(*p);
            expect_valid_child(c, serialize_graph(g));
            std::vector<BitVec> js;
            for (const auto& t : c.terms) js.push_back(t.j);
            std::sort(js.begin(), js.end());
            auto want = s.elements();
            std::sort(want.begin(), want.end());
            EXPECT_EQ(js, want);
            for (const auto& t : c.terms) EXPECT_EQ(t.word, ordered_product(dual_stabilizer(g), t.j));
        }
    }
}

TEST(Children, BoundIsEnforced) {
    auto g = fixture("clique6");
    auto subs = enumerate_max_isotropic(reduce_gamma(g.skeleton()));
    auto p = extend_for_subgroup(g, subs[0]);
    ASSERT_TRUE(p.has_value());
    EXPECT_THROW(child_by_partial_trace(*p, 8), BoundExceeded);
    EXPECT_THROW(child_from_pauli_sum(*p, 5), BoundExceeded);
}
