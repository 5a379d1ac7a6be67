#include "prenov/tensor.hpp"
#include "support/examples.hpp"
#include "support/gen.hpp"

#include <gtest/gtest.h>

using namespace prenov;
using namespace prenov::examples;

namespace {

Vec v(std::initializer_list<long> xs) {
    Vec out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

Tensor3 random3(std::size_t n) {
    Tensor3 t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) t(i, j, k) = Scalar(gen::pick(-3, 3));
    return t;
}

}  // namespace

TEST(Scalar, ParseCanonicalizes) {
    EXPECT_EQ(Scalar::parse("2/4").str(), "1/2");
    EXPECT_EQ(Scalar::parse("-6/3").str(), "-2");
    EXPECT_EQ(Scalar::parse("0/5").str(), "0");
    EXPECT_THROW(Scalar::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Scalar::parse("1.5"), std::invalid_argument);
    EXPECT_THROW(Scalar::parse(""), std::invalid_argument);
}

TEST(Linalg, DeterminantAndInverse) {
    Matrix m = Matrix::from_rows({{2, 1}, {7, 4}});
    EXPECT_EQ(determinant(m), Scalar(1));
    auto inv = inverse(m);
    ASSERT_TRUE(inv);
    EXPECT_EQ(m * *inv, Matrix::identity(2));
    EXPECT_FALSE(inverse(Matrix::from_rows({{1, 2}, {2, 4}})));
}

TEST(Linalg, InverseProperty) {
    for (int trial = 0; trial < 50; ++trial) {
        Matrix m = gen::invertible(3);
        auto inv = inverse(m);
        ASSERT_TRUE(inv);
        EXPECT_EQ(*inv * m, Matrix::identity(3));
        EXPECT_EQ(determinant(m) * determinant(*inv), Scalar(1));
    }
}

TEST(ApplyOp, Ex1Values) {
    const auto a = ex1_algebra();
    EXPECT_EQ(apply_op(a.lhd, unit_vec(2, 0), unit_vec(2, 1)), unit_vec(2, 1));
    EXPECT_EQ(apply_op(StructureConstants(2), unit_vec(2, 0), unit_vec(2, 0)), zero_vec(2));
    EXPECT_EQ(apply_op(a.circ(), unit_vec(2, 1), unit_vec(2, 1)), zero_vec(2));
}

TEST(ApplyOp, Bilinear) {
    const auto b = ex2_B();
    for (int trial = 0; trial < 20; ++trial) {
        Vec x = v({gen::pick(-3, 3), gen::pick(-3, 3), gen::pick(-3, 3), gen::pick(-3, 3)});
        Vec y = v({gen::pick(-3, 3), gen::pick(-3, 3), gen::pick(-3, 3), gen::pick(-3, 3)});
        Vec z = v({gen::pick(-3, 3), gen::pick(-3, 3), gen::pick(-3, 3), gen::pick(-3, 3)});
        Scalar s(gen::pick(-3, 3));
        EXPECT_EQ(apply_op(b.lhd, x + s * y, z), apply_op(b.lhd, x, z) + s * apply_op(b.lhd, y, z));
        EXPECT_EQ(apply_op(b.rhd, z, x + s * y), apply_op(b.rhd, z, x) + s * apply_op(b.rhd, z, y));
    }
}

TEST(MultMatrix, Ex1) {
    const auto a = ex1_algebra();
    EXPECT_EQ(mult_matrix(a.circ(), unit_vec(2, 0), Side::left), Matrix::identity(2));
    EXPECT_TRUE(mult_matrix(a.lhd, zero_vec(2), Side::left).is_zero());
    EXPECT_TRUE(mult_matrix(a.lhd, zero_vec(2), Side::right).is_zero());
    // R◁(e2): e1 ↦ e1◁e2 = e2, e2 ↦ 0
    EXPECT_EQ(mult_matrix(a.lhd, unit_vec(2, 1), Side::right), Matrix::from_rows({{0, 0}, {1, 0}}));
}

TEST(MultMatrix, ColumnsAreProducts) {
    const auto b = ex2_B();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            EXPECT_EQ(mult_matrix(b.rhd, i, Side::left).column(j), b.rhd.product(i, j));
            EXPECT_EQ(mult_matrix(b.rhd, i, Side::right).column(j), b.rhd.product(j, i));
        }
}

TEST(Flip, Examples) {
    EXPECT_EQ(flip(Tensor2::basis(4, 1, 2)), Tensor2::basis(4, 2, 1));
    EXPECT_EQ(flip(ex2_r()), ex2_r());
    Tensor2 s = Tensor2::basis(2, 0, 1) + Tensor2::basis(2, 1, 0);
    EXPECT_EQ(flip(s), s);
    Tensor2 t = gen::any_tensor(3, -2, 2);
    EXPECT_EQ(flip(flip(t)), t);
}

TEST(Permute3, IdentityAndTransposition) {
    Tensor3 t = random3(3);
    EXPECT_EQ(permute3(t, identity_perm), t);
    Tensor3 e(3);
    e(0, 1, 2) = 1;
    Tensor3 moved = permute3(e, {0, 2, 1});
    EXPECT_EQ(moved(0, 2, 1), Scalar(1));
    EXPECT_EQ(moved(0, 1, 2), Scalar(0));
}

TEST(Permute3, ActionLaw) {
    const std::vector<Perm3> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    for (int trial = 0; trial < 5; ++trial) {
        Tensor3 t = random3(3);
        for (const auto& p : perms)
            for (const auto& q : perms) EXPECT_EQ(permute3(permute3(t, q), p), permute3(t, compose(p, q)));
    }
}

TEST(PlacedProduct, RankOneFormulas) {
    const auto a = ex2_B();
    const auto circ = a.circ();
    const auto star = derived_ops(a).star;
    for (int trial = 0; trial < 10; ++trial) {
        Vec x = v({gen::pick(-2, 2), gen::pick(-2, 2), gen::pick(-2, 2), gen::pick(-2, 2)});
        Vec y = v({gen::pick(-2, 2), gen::pick(-2, 2), gen::pick(-2, 2), gen::pick(-2, 2)});
        Vec x2 = v({gen::pick(-2, 2), gen::pick(-2, 2), gen::pick(-2, 2), gen::pick(-2, 2)});
        Vec y2 = v({gen::pick(-2, 2), gen::pick(-2, 2), gen::pick(-2, 2), gen::pick(-2, 2)});
        Tensor2 r = Tensor2::outer(x, y), r2 = Tensor2::outer(x2, y2);
        // r12 * r'13 = (x∘x')⊗y⊗y'
        EXPECT_EQ(placed_product(r, r2, circ, {{1, 2}, {1, 3}}), Tensor3::outer(apply_op(circ, x, x2), Tensor2::outer(y, y2)));
        // r23 * r'13 = x'⊗x⊗(y★y')
        EXPECT_EQ(placed_product(r, r2, star, {{2, 3}, {1, 3}}), Tensor3::outer(Tensor2::outer(x2, x), apply_op(star, y, y2)));
    }
    EXPECT_TRUE(placed_product(Tensor2(4, 4), ex2_r(), circ, {{1, 2}, {1, 3}}).is_zero());
    EXPECT_TRUE(placed_product(ex2_r(), Tensor2(4, 4), circ, {{1, 2}, {2, 3}}).is_zero());
}

TEST(PlacedProduct, RejectsBadSlots) {
    const auto a = ex1_algebra();
    EXPECT_THROW(placed_product(ex1_coalgebra().alpha[0], ex1_coalgebra().alpha[0], a.lhd, {{1, 1}, {1, 3}}), InputError);
    EXPECT_THROW(placed_product(ex1_coalgebra().alpha[0], ex1_coalgebra().alpha[0], a.lhd, {{1, 2}, {1, 2}}), InputError);
}

TEST(DualMap, Conventions) {
    EXPECT_EQ(dual_map(Matrix::identity(3), DualMode::rep), -Matrix::identity(3));
    EXPECT_EQ(dual_map(Matrix::identity(3), DualMode::pairing), Matrix::identity(3));
    const auto m = mult_matrix(ex1_algebra().circ(), unit_vec(2, 0), Side::left);
    EXPECT_EQ(dual_map(m, DualMode::rep), -Matrix::identity(2));
}

TEST(DualMap, PairingIdentity) {
    // ⟨M*f, v⟩ = ⟨f, Mv⟩ and ⟨ρ*f, v⟩ = −⟨f, ρv⟩ on basis pairs
    Matrix m = gen::any_tensor(3, -3, 3).coeffs();
    Matrix p = dual_map(m, DualMode::pairing), r = dual_map(m, DualMode::rep);
    for (std::size_t f = 0; f < 3; ++f)
        for (std::size_t x = 0; x < 3; ++x) {
            EXPECT_EQ(p(x, f), m(f, x));
            EXPECT_EQ(r(x, f), -m(f, x));
        }
}

TEST(TensorOp, LegsAndComposition) {
    Matrix a = gen::any_tensor(3, -2, 2).coeffs(), b = gen::any_tensor(3, -2, 2).coeffs();
    Tensor2 t = gen::any_tensor(3, -2, 2);
    // (A⊗id)t has coefficient matrix A·t, (id⊗B)t has t·Bᵀ
    EXPECT_EQ(TensorOp::on_left(a)(t).coeffs(), a * t.coeffs());
    EXPECT_EQ(TensorOp::on_right(b)(t).coeffs(), t.coeffs() * b.transpose());
    EXPECT_EQ((TensorOp::on_left(a) * TensorOp::on_right(b))(t), TensorOp(a, b)(t));
    EXPECT_EQ((TensorOp::on_left(a) + TensorOp::on_right(b))(t), TensorOp::on_left(a)(t) + TensorOp::on_right(b)(t));
}

TEST(ApplyOnLeg, MatchesOuterProducts) {
    Vec x = v({1, -1, 2}), y = v({0, 3, 1}), z = v({2, 2, -1});
    Matrix m = gen::any_tensor(3, -2, 2).coeffs();
    Tensor3 t = Tensor3::outer(x, Tensor2::outer(y, z));
    EXPECT_EQ(apply_on_leg(t, m, 0), Tensor3::outer(m * x, Tensor2::outer(y, z)));
    EXPECT_EQ(apply_on_leg(t, m, 1), Tensor3::outer(x, Tensor2::outer(m * y, z)));
    EXPECT_EQ(apply_on_leg(t, m, 2), Tensor3::outer(x, Tensor2::outer(y, m * z)));
}

TEST(ChangeBasis, IdentityIsNoop) {
    const auto b = ex2_B();
    EXPECT_EQ(change_basis(b.lhd, Matrix::identity(4)), b.lhd);
}
