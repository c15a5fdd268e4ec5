#include <gtest/gtest.h>

#include <random>

#include "mgs/graph.hpp"
#include "mgs/states.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace mgs;
using namespace testutil;

namespace {

oracle::Poly poly_of(const PhaseFunction& p) {
    oracle::Poly out;
    for (auto [j, k] : p.quadratic) out.push_back({{j, k}, 2});
    for (unsigned j : members(p.z4_linear)) out.push_back({{j}, 1});
    for (unsigned j : members(p.binary_linear)) out.push_back({{j}, 2});
    return out;
}

PhaseFunction random_phase(std::mt19937_64& rng, unsigned n) {
    PhaseFunction p;
    p.n_total = n;
    for (unsigned j = 0; j < n; j++) {
        for (unsigned k = j + 1; k < n; k++)
            if (rng() % 2) p.add_quadratic(j, k);
        p.add_linear(j, static_cast<unsigned>(rng() % 4));
    }
    return p;
}

oracle::Mat dense_state_projector(const std::vector<oracle::Cx>& v) {
    oracle::Mat m(v.size());
    for (size_t r = 0; r < v.size(); r++)
        for (size_t c = 0; c < v.size(); c++) m.at(r, c) = v[r] * v[c].conj();
    return m;
}

}  // namespace

TEST(Phase, ParseAndPrint) {
    auto p = PhaseFunction::parse("2(x0x2+x1x2+x1x3+x2x3)+x2", 4);
    EXPECT_EQ(p.quadratic.size(), 4u);
    EXPECT_EQ(p.z4_linear, unit(2));
    EXPECT_EQ(p.binary_linear, 0u);
    EXPECT_EQ(p.str(), "2(x0x2+x1x2+x1x3+x2x3)+x2");
    EXPECT_EQ(PhaseFunction::parse(p.str(), 4), p);
}

TEST(Phase, CoefficientsReduceModFour) {
    auto p = PhaseFunction::parse("2(x0x1+x2)+x2+x0", 3);
    EXPECT_EQ(p.z4_linear, unit(0) | unit(2));
    EXPECT_EQ(p.binary_linear, unit(2));
    EXPECT_EQ(p.eval(vec_from_string("001")), 3u);
    EXPECT_EQ(p.eval(vec_from_string("111")), (2 + 1 + 2 + 1) % 4);
    EXPECT_EQ(PhaseFunction::parse("3x1", 2).eval(vec_from_string("01")), 3u);
    EXPECT_EQ(PhaseFunction::parse("0", 2).str(), "0");
}

TEST(Phase, ParseErrors) {
    EXPECT_THROW(PhaseFunction::parse("x0x1", 2), std::invalid_argument);
    EXPECT_THROW(PhaseFunction::parse("2(x0x1x2)", 3), std::invalid_argument);
    EXPECT_THROW(PhaseFunction::parse("2(x0x5)", 3), std::invalid_argument);
    EXPECT_THROW(PhaseFunction::parse("2(x0+", 3), std::invalid_argument);
    EXPECT_THROW(PhaseFunction::parse("y0", 3), std::invalid_argument);
}

TEST(Phase, RandomRoundTrip) {
    std::mt19937_64 rng(2);
    for (int iter = 0; iter < 200; iter++) {
        auto p = random_phase(rng, 1 + rng() % 7);
        EXPECT_EQ(PhaseFunction::parse(p.str(), p.n_total), p);
    }
}

TEST(States, AmplitudesMatchOracle) {
    std::mt19937_64 rng(4);
    for (int iter = 0; iter < 100; iter++) {
        auto p = random_phase(rng, 1 + rng() % 6);
        auto psi = state_from_phase(p);
        auto want = oracle::state(poly_of(p), p.n_total);
        EXPECT_EQ(psi.norm_log2sqrt(), p.n_total);
        for (BitVec x = 0; x < want.size(); x++) {
            auto got = psi.numerator(x);
            EXPECT_EQ(got.re, want[x].re);
            EXPECT_EQ(got.im, want[x].im);
        }
    }
}

TEST(States, BoundIsEnforced) {
    PhaseFunction p;
    p.n_total = 13;
    EXPECT_THROW(state_from_phase(p, 12), BoundExceeded);
    EXPECT_NO_THROW(state_from_phase(p, 13));
}

TEST(States, GraphStateIsStabilized) {
    auto g = graph("nodes 4\nedge 0 -- 1\nedge 0 -- 3\nedge 1 -- 2\n");
    auto psi = state_from_phase(PhaseFunction::parse("2(x0x1+x0x3+x1x2)", 4));
    for (const auto& w : stabilizer_matrix(g)) EXPECT_TRUE(stabilizes(w, psi)) << w.str();
    EXPECT_FALSE(stabilizes(PauliWord::parse("XIII"), psi));
    EXPECT_FALSE(stabilizes(PauliWord::parse("-XZIZ"), psi));
}

TEST(States, PartialTraceMatchesOracle) {
    std::mt19937_64 rng(6);
    for (int iter = 0; iter < 100; iter++) {
        unsigned n = 2 + rng() % 5;
        unsigned env = 1 + rng() % (n - 1);
        auto p = random_phase(rng, n);
        auto rho = partial_trace_env(state_from_phase(p), low_mask(n) & ~low_mask(n - env));
        auto want = oracle::partial_trace_last(oracle::state(poly_of(p), n), n, env);
        EXPECT_TRUE(oracle::same(want, n - env, rho)) << p.str();
        EXPECT_TRUE(rho.trace_is_one());
        EXPECT_TRUE(rho.is_hermitian());
    }
}

TEST(States, EmptyEnvironmentGivesPureProjector) {
    auto p = PhaseFunction::parse("2(x0x1)+x1", 2);
    auto rho = partial_trace_env(state_from_phase(p), 0);
    EXPECT_TRUE(oracle::same(dense_state_projector(oracle::state(poly_of(p), 2)), 2, rho));
}

TEST(States, BranchSumIsTwiceTraceForOneEnvQubit) {
    auto psi = state_from_phase(PhaseFunction::parse("2(x0x1+x0x3+x1x2)", 4));
    BitVec env = unit(3);
    auto branch = branch_projector_sum(psi, env);
    EXPECT_EQ(branch, partial_trace_env(psi, env).scaled(2));
    EXPECT_EQ(branch.trace_numerator(), Gaussian(std::int64_t{2} << branch.denom_log2()));
}

TEST(States, ReverseQubitsIsInvolution) {
    auto psi = state_from_phase(PhaseFunction::parse("2(x0x1+x1x2)+x0", 3));
    auto rho = partial_trace_env(psi, 0);
    EXPECT_EQ(reverse_qubits(reverse_qubits(rho)), rho);
    auto rev = state_from_phase(PhaseFunction::parse("2(x2x1+x1x0)+x2", 3));
    EXPECT_EQ(reverse_qubits(rho), partial_trace_env(rev, 0));
}

TEST(States, StabilizedByAndConjugation) {
    auto g = triangle();
    auto psi = state_from_phase(PhaseFunction::parse("2(x0x1+x0x2+x1x2)", 3));
    auto rho = partial_trace_env(psi, 0);
    auto undirected = graph("nodes 3\nedge 0 -- 1\nedge 0 -- 2\nedge 1 -- 2\n");
    EXPECT_TRUE(stabilized_by(rho, stabilizer_matrix(undirected)));
    EXPECT_FALSE(stabilized_by(rho, {PauliWord::parse("XII")}));
    for (auto w : {"XYZ", "-iXZ", "YYI"}) {
        auto pw = PauliWord::parse(w);
        if (pw.n() != 3) pw = pw.tensor(PauliWord::parse("I"));
        auto d = to_dense(pw);
        EXPECT_EQ(conjugate_by(rho, pw), d * rho * d.adjoint()) << w;
    }
}

TEST(States, ConvexCombination) {
    auto a = partial_trace_env(state_from_phase(PhaseFunction::parse("2(x0x1)", 2)), 0);
    auto b = partial_trace_env(state_from_phase(PhaseFunction::parse("x0", 2)), 0);
    auto mix = convex_combine({a, b}, {Rational(1, 3), Rational(2, 3)});
    EXPECT_EQ(mix.trace(), Rational(1, 1));
    EXPECT_EQ(mix.weight_den, 3);
    EXPECT_EQ(mix.scaled, a + b.scaled(2));
    EXPECT_THROW(convex_combine({a, b}, {Rational(1, 2), Rational(1, 3)}), std::invalid_argument);
    EXPECT_THROW(convex_combine({a}, {Rational(1, 2), Rational(1, 2)}), std::invalid_argument);
}

TEST(States, DisjointSupportHasOrthogonalBranches) {
    auto psi = state_from_phase(PhaseFunction::parse("2(x0x2+x1x3)", 4));
    auto rho = partial_trace_env(psi, unit(2) | unit(3));
    for (size_t r = 0; r < 4; r++)
        for (size_t c = 0; c < 4; c++) EXPECT_EQ(rho.at(r, c).is_zero(), r != c);
}
