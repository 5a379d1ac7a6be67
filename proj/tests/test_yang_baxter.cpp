#include "prenov/yang_baxter.hpp"
#include "support/examples.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace prenov;
using namespace prenov::examples;

namespace {

oracle::T3 flat(const Tensor3& t) {
    oracle::T3 out;
    for (const auto& x : t.data()) out.push_back(x.raw());
    return out;
}

oracle::V flat(const Tensor2& t) {
    oracle::V out;
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) out.push_back(t(i, j).raw());
    return out;
}

bool oracle_ybe_zero(const PreNovikovAlgebra& a, const Tensor2& r) {
    return oracle::zero(oracle::ybe(oracle::Tab(a.lhd), oracle::Tab(a.rhd), gen::rows(r)));
}

std::vector<Scalar> values(std::initializer_list<long> xs) {
    std::vector<Scalar> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST(Ybe, ExampleSolution) {
    EXPECT_TRUE(ybe_residual(ex2_B(), ex2_r()).is_zero());
    EXPECT_TRUE(ybe_holds(ex2_B(), ex2_r()));
    EXPECT_TRUE(ybe_residual(ex1_algebra(), Tensor2(2, 2)).is_zero());
}

TEST(Ybe, RankOneOnEx1) {
    // r = e1⊗e1: r12∘r13 = e1⊗e1⊗e1 and the other two terms vanish
    Tensor3 expected(2);
    expected(0, 0, 0) = 1;
    EXPECT_EQ(ybe_residual(ex1_algebra(), Tensor2::basis(2, 0, 0)), expected);
    EXPECT_FALSE(ybe_holds(ex1_algebra(), Tensor2::basis(2, 0, 0)));
}

TEST(Ybe, ResidualMatchesOracle) {
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = trial % 2 ? ex2_B() : ex1_algebra();
        const std::size_t n = a.dim();
        Tensor2 r = trial % 3 ? gen::symmetric(n, -2, 2) : gen::any_tensor(n, -2, 2);
        Tensor3 res = ybe_residual(a, r);
        ASSERT_EQ(flat(res), oracle::ybe(oracle::Tab(a.lhd), oracle::Tab(a.rhd), gen::rows(r)));
        ASSERT_EQ(ybe_holds(a, r), res.is_zero());
    }
}

TEST(Ybe, ClosedUnderScaling) {
    // The residual is homogeneous quadratic in r.
    for (int trial = 0; trial < 20; ++trial) {
        Tensor2 r = gen::symmetric(4, -1, 1);
        Tensor3 res = ybe_residual(ex2_B(), r);
        EXPECT_EQ(ybe_residual(ex2_B(), -r), res);
        EXPECT_EQ(ybe_residual(ex2_B(), Scalar(3) * r), Scalar(9) * res);
    }
}

TEST(Coboundary, Ex2) {
    PreNovikovCoalgebra co = coboundary_maps(ex2_B(), ex2_r());
    PreNovikovCoalgebra expected = PreNovikovCoalgebra::zero(4);
    expected.alpha[3](2, 2) = 2;
    EXPECT_EQ(co, expected);
    EXPECT_TRUE(check_bialgebra(ex2_B(), co).passed());
    EXPECT_EQ(coboundary_maps(ex2_B(), Tensor2(4, 4)), PreNovikovCoalgebra::zero(4));
}

TEST(Coboundary, MatchesOracle) {
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = trial % 2 ? ex2_B() : ex1_algebra();
        const std::size_t n = a.dim();
        Tensor2 r = gen::any_tensor(n, -2, 2);
        PreNovikovCoalgebra co = coboundary_maps(a, r);
        auto [al, be] = oracle::coboundary(oracle::Tab(a.lhd), oracle::Tab(a.rhd), gen::rows(r));
        for (std::size_t k = 0; k < n; ++k) {
            ASSERT_EQ(flat(co.alpha[k]), al[k]);
            ASSERT_EQ(flat(co.beta[k]), be[k]);
        }
    }
}

TEST(BialgebraFromR, Ex2) {
    CoboundaryBialgebra cb = bialgebra_from_r(ex2_B(), ex2_r());
    EXPECT_TRUE(cb.report.passed());
    EXPECT_EQ(cb.bialgebra.algebra, ex2_B());
}

TEST(BialgebraFromR, Refusals) {
    try {
        bialgebra_from_r(ex2_B(), Tensor2::basis(4, 1, 2));
        FAIL() << "expected refusal";
    } catch (const Refused& e) {
        EXPECT_FALSE(e.report().find("ybe.symmetric").empty());
    }
    EXPECT_THROW(bialgebra_from_r(ex1_algebra(), Tensor2::basis(2, 0, 0)), Refused);
}

TEST(BialgebraFromR, EverySymmetricSolutionGivesBialgebra) {
    for (const auto& a : {ex1_algebra(), ex2_B()})
        for (const Tensor2& r : search_symmetric_ybe(a, values({-1, 0, 1}))) {
            CoboundaryBialgebra cb;
            ASSERT_NO_THROW(cb = bialgebra_from_r(a, r));
            EXPECT_TRUE(cb.report.passed());
        }
}

TEST(Co2, Examples) {
    EXPECT_EQ(co2_equivalence(ex2_B(), ex2_r()), (Co2Verdicts{true, true, true}));
    EXPECT_EQ(co2_equivalence(ex1_algebra(), Tensor2::basis(2, 0, 0)), (Co2Verdicts{false, false, false}));
    EXPECT_THROW(co2_equivalence(ex2_B(), Tensor2::basis(4, 1, 2)), Refused);
}

TEST(Co2, VerdictsAgreeOnRandomSymmetric) {
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = trial % 2 ? ex2_B() : ex1_algebra();
        Tensor2 r = gen::symmetric(a.dim(), -1, 1);
        Co2Verdicts v = co2_equivalence(a, r);
        ASSERT_TRUE(v.agree());
        ASSERT_EQ(v.ybe, oracle_ybe_zero(a, r));
    }
}

TEST(TR, Entries) {
    Tensor2 r = gen::any_tensor(3, -2, 2);
    Matrix t = t_r_from_tensor(r);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(t(i, j), r(i, j));
}

TEST(OOperator, Ex2) {
    const auto a = ex1_algebra();
    const PreNovikovRep adj = adjoint_reps(a).pre_novikov;
    EXPECT_TRUE(check_o_operator_pre_novikov(a, adj, ex2_T()).passed());
    EXPECT_TRUE(check_o_operator_novikov(a.circ(), adjoint_reps(a).novikov, ex2_T()).passed());
    EXPECT_FALSE(check_o_operator_pre_novikov(a, adj, Matrix::identity(2)).passed());
    // identity is an O-operator for (L▷, R◁): both sides are u▷v + u◁v
    EXPECT_TRUE(check_o_operator_novikov(a.circ(), adjoint_reps(a).novikov, Matrix::identity(2)).passed());
    // but not for (L∘, R∘), where the right side doubles
    EXPECT_FALSE(check_o_operator_novikov(a.circ(), adjoint_novikov_rep(a.circ()), Matrix::identity(2)).passed());
    EXPECT_TRUE(check_o_operator_pre_novikov(a, adj, Matrix(2, 2)).passed());
}

TEST(OOperator, NovikovMatchesOracle) {
    const auto a = ex1_algebra();
    const NovikovRep adj = adjoint_reps(a).novikov;
    for (int trial = 0; trial < 200; ++trial) {
        Matrix t = gen::any_tensor(2, -1, 1).coeffs();
        ASSERT_EQ(check_o_operator_novikov(a.circ(), adj, t).passed(),
                  oracle::is_o_operator(oracle::Tab(a.circ()), gen::rows(adj.l), gen::rows(adj.r), gen::rows(t)));
    }
}

TEST(OOperator, PreNovikovFromO) {
    const auto a = ex1_algebra();
    PreNovikovAlgebra p = pre_novikov_from_o(a.circ(), adjoint_reps(a).novikov, ex2_T());
    PreNovikovAlgebra expected = PreNovikovAlgebra::zero(2);
    expected.lhd(0, 0, 1) = 1;  // e1◁e1 = e1◁T(e1) = e2
    EXPECT_EQ(p, expected);
    EXPECT_TRUE(check_pre_novikov(p).passed());
    EXPECT_EQ(pre_novikov_from_o(a.circ(), adjoint_reps(a).novikov, Matrix::identity(2)), a);
    EXPECT_EQ(pre_novikov_from_o(ex2_B().circ(), adjoint_reps(ex2_B()).novikov, Matrix::identity(4)), ex2_B());
    EXPECT_THROW(pre_novikov_from_o(a.circ(), adjoint_novikov_rep(a.circ()), Matrix::identity(2)), Refused);
}

TEST(Lift, ReproducesExampleTwo) {
    const auto a = ex1_algebra();
    OperatorLift lift = lift_o_operator(a, adjoint_reps(a).pre_novikov, ex2_T());
    EXPECT_EQ(lift.semidirect, ex2_B());
    EXPECT_EQ(lift.r, ex2_r());
    EXPECT_TRUE(lift.ybe);
    EXPECT_TRUE(lift.o_operator);
}

TEST(Lift, VerdictsAgree) {
    const auto a = ex1_algebra();
    const PreNovikovRep adj = adjoint_reps(a).pre_novikov;
    OperatorLift id = lift_o_operator(a, adj, Matrix::identity(2));
    EXPECT_FALSE(id.ybe);
    EXPECT_FALSE(id.o_operator);
    for (int trial = 0; trial < 50; ++trial) {
        OperatorLift l;
        ASSERT_NO_THROW(l = lift_o_operator(a, adj, gen::any_tensor(2, -1, 1).coeffs()));
        EXPECT_EQ(l.ybe, l.o_operator);
        EXPECT_TRUE(l.r.is_symmetric());
    }
}

TEST(Search, SpaceSize) {
    EXPECT_EQ(search_space_size(2, 3), 27u);
    EXPECT_EQ(search_space_size(4, 3), 59049u);
    EXPECT_EQ(search_space_size(3, 1), 1u);
}

TEST(Search, ZeroValueOnly) {
    auto hits = search_symmetric_ybe(ex1_algebra(), values({0}));
    ASSERT_EQ(hits.size(), 1u);
    EXPECT_TRUE(hits[0].is_zero());
}

TEST(Search, MatchesOracleFilter) {
    const auto a = ex1_algebra();
    auto hits = search_symmetric_ybe(a, values({1, 0, -1, 0}));
    std::vector<Tensor2> expected;
    for (long x : {-1, 0, 1})
        for (long y : {-1, 0, 1})
            for (long z : {-1, 0, 1}) {
                Tensor2 r(2, 2);
                r(0, 0) = x;
                r(0, 1) = r(1, 0) = y;
                r(1, 1) = z;
                if (oracle_ybe_zero(a, r)) expected.push_back(r);
            }
    EXPECT_EQ(hits, expected);
    EXPECT_EQ(hits.size(), 3u);
}

TEST(Search, Ex2ContainsKnownSolution) {
    auto hits = search_symmetric_ybe(ex2_B(), values({0, 1}));
    EXPECT_NE(std::find(hits.begin(), hits.end(), ex2_r()), hits.end());
    for (const auto& r : hits) EXPECT_TRUE(oracle_ybe_zero(ex2_B(), r));
    EXPECT_EQ(search_symmetric_ybe(ex2_B(), values({-1, 0, 1})).size(), 51u);
}

TEST(Search, RationalValues) {
    auto hits = search_symmetric_ybe(ex1_algebra(), {Scalar::parse("1/2"), Scalar(0)});
    for (const auto& r : hits) EXPECT_TRUE(oracle_ybe_zero(ex1_algebra(), r));
    EXPECT_FALSE(hits.empty());
}

TEST(Search, Budget) {
    EXPECT_THROW(search_symmetric_ybe(ex2_B(), values({-1, 0, 1}), {.budget = 100}), InputError);
}

TEST(Search, WorkersAreDeterministic) {
    auto one = search_symmetric_ybe(ex2_B(), values({-1, 0, 1}), {.workers = 1});
    auto three = search_symmetric_ybe(ex2_B(), values({-1, 0, 1}), {.workers = 3});
    EXPECT_EQ(one, three);
    ::setenv("PRENOV_WORKERS", "2", 1);
    auto env = search_symmetric_ybe(ex2_B(), values({-1, 0, 1}));
    ::unsetenv("PRENOV_WORKERS");
    EXPECT_EQ(one, env);
}

TEST(Diagnostics, ZeroForSymmetricSolutions) {
    for (const auto& a : {ex1_algebra(), ex2_B()})
        for (const Tensor2& r : search_symmetric_ybe(a, values({-1, 0, 1}))) {
            CoboundaryDiagnostics d = coboundary_diagnostics(a, r);
            EXPECT_TRUE(d.conditions.passed());
            EXPECT_TRUE(d.coalgebra_conditions.passed());
        }
}

TEST(Diagnostics, CoalgebraConditionsMatchChecker) {
    // Every symmetric candidate on ex1: the per-element conditions hold exactly
    // when the coboundary maps form a coalgebra.
    for (long x : {-1, 0, 1})
        for (long y : {-1, 0, 1})
            for (long z : {-1, 0, 1}) {
                Tensor2 r(2, 2);
                r(0, 0) = x;
                r(0, 1) = r(1, 0) = y;
                r(1, 1) = z;
                ASSERT_EQ(coboundary_diagnostics(ex1_algebra(), r).coalgebra_conditions.passed(),
                          check_coalgebra(coboundary_maps(ex1_algebra(), r)).passed());
            }
}

TEST(Diagnostics, NamedTensors) {
    CoboundaryDiagnostics d = coboundary_diagnostics(ex2_B(), ex2_r());
    for (const char* name : {"R11", "R12", "R13", "R21", "R22", "R31", "R41"})
        EXPECT_EQ(d.r_tensor(name).dim(), 4u);
    EXPECT_ANY_THROW(d.r_tensor("R99"));
}
