#pragma once

#include "prenov/linalg.hpp"

#include <array>
#include <utility>
#include <vector>

namespace prenov {

/// Element of V ⊗ W in coordinates: entry (i, j) is the coefficient of
/// e_i ⊗ e_j. Shares the coefficient layout of a matrix.
class Tensor2 {
public:
    Tensor2() = default;
    Tensor2(std::size_t rows, std::size_t cols) : m_(rows, cols) {}
    explicit Tensor2(Matrix coeffs) : m_(std::move(coeffs)) {}

    static Tensor2 square(std::size_t n) { return Tensor2(n, n); }
    /// e_i ⊗ e_j in an n-dimensional space.
    static Tensor2 basis(std::size_t n, std::size_t i, std::size_t j);
    static Tensor2 outer(const Vec& x, const Vec& y);

    std::size_t rows() const { return m_.rows(); }
    std::size_t cols() const { return m_.cols(); }
    bool square() const { return m_.square(); }

    Scalar& operator()(std::size_t i, std::size_t j) { return m_(i, j); }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    const Matrix& coeffs() const { return m_; }
    bool is_zero() const { return m_.is_zero(); }
    bool is_symmetric() const;

    Tensor2& operator+=(const Tensor2& o) { m_ += o.m_; return *this; }
    Tensor2& operator-=(const Tensor2& o) { m_ -= o.m_; return *this; }
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
    friend Tensor2 operator-(Tensor2 a) { return Tensor2(-a.m_); }
    friend Tensor2 operator*(const Scalar& s, Tensor2 a) { return Tensor2(s * a.m_); }
    friend bool operator==(const Tensor2&, const Tensor2&) = default;

private:
    Matrix m_;
};

/// Element of A ⊗ A ⊗ A for an n-dimensional A; entry (i, j, k) is the
/// coefficient of e_i ⊗ e_j ⊗ e_k.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(std::size_t n) : n_(n), a_(n * n * n) {}

    static Tensor3 outer(const Vec& x, const Tensor2& t);
    static Tensor3 outer(const Tensor2& t, const Vec& z);

    std::size_t dim() const { return n_; }
    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return a_[(i * n_ + j) * n_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return a_[(i * n_ + j) * n_ + k]; }

    const std::vector<Scalar>& data() const { return a_; }
    bool is_zero() const;

    Tensor3& operator+=(const Tensor3& o);
    Tensor3& operator-=(const Tensor3& o);
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    friend Tensor3 operator*(const Scalar& s, Tensor3 a);
    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Scalar> a_;
};

/// Bilinear product on an n-dimensional based space:
/// e_i · e_j = Σ_k c(i, j, k) e_k.
class StructureConstants {
public:
    StructureConstants() = default;
    explicit StructureConstants(std::size_t n) : n_(n), c_(n * n * n) {}

    std::size_t dim() const { return n_; }
    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

    /// e_i · e_j as a coordinate vector.
    Vec product(std::size_t i, std::size_t j) const;
    const std::vector<Scalar>& data() const { return c_; }
    bool is_zero() const;

    StructureConstants& operator+=(const StructureConstants& o);
    StructureConstants& operator-=(const StructureConstants& o);
    friend StructureConstants operator+(StructureConstants a, const StructureConstants& b) { return a += b; }
    friend StructureConstants operator-(StructureConstants a, const StructureConstants& b) { return a -= b; }
    friend StructureConstants operator*(const Scalar& s, StructureConstants a);
    friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Scalar> c_;
};

/// The table of (a, b) ↦ b · a.
StructureConstants opposite(const StructureConstants& op);

/// Rewrites the table in the basis given by the columns of `p`
/// (new basis vector f_j = Σ_i p(i, j) e_i).
StructureConstants change_basis(const StructureConstants& op, const Matrix& p);

Vec apply_op(const StructureConstants& op, const Vec& a, const Vec& b);

enum class Side { left, right };

/// left: matrix of b ↦ a · b; right: matrix of b ↦ b · a.
Matrix mult_matrix(const StructureConstants& op, const Vec& a, Side side);
Matrix mult_matrix(const StructureConstants& op, std::size_t basis_index, Side side);

/// The flip τ(x ⊗ y) = y ⊗ x.
Tensor2 flip(const Tensor2& t);

/// perm[k] is the slot (0-based) that the factor in slot k moves to.
using Perm3 = std::array<int, 3>;
inline constexpr Perm3 identity_perm{0, 1, 2};
Perm3 compose(const Perm3& outer, const Perm3& inner);
Tensor3 permute3(const Tensor3& t, const Perm3& perm);

/// Apply a linear map to one tensor leg (0, 1 or 2) of a Tensor3.
Tensor3 apply_on_leg(const Tensor3& t, const Matrix& m, int leg);

/// Slots (1-based) receiving the two components of r = Σ x ⊗ y: x goes to
/// `first`, y to `second`. {1, 2} is r_12, {2, 1} is r_21, ...
struct SlotPair {
    int first;
    int second;
};

struct Placement {
    SlotPair left;
    SlotPair right;
};

/// The placed product r_pq * r'_st: the components of r and r' land in
/// their slots; the slot shared by both receives (component of r) * (component of r').
Tensor3 placed_product(const Tensor2& r, const Tensor2& r2, const StructureConstants& op, Placement slots);

enum class DualMode { pairing, rep };

/// pairing: the transpose (⟨M*f, v⟩ = ⟨f, Mv⟩).
/// rep: the negated transpose (⟨ρ*(a)f, v⟩ = -⟨f, ρ(a)v⟩).
Matrix dual_map(const Matrix& m, DualMode mode);

/// Σ_k A_k ⊗ B_k acting on V ⊗ W. Composition multiplies term by term, so
/// nested expressions such as (X ⊗ id)(Y ⊗ id + id ⊗ Z) are built literally.
class TensorOp {
public:
    TensorOp() = default;
    TensorOp(Matrix left, Matrix right) { terms_.emplace_back(std::move(left), std::move(right)); }

    /// A ⊗ id on an n-dimensional second leg.
    static TensorOp on_left(const Matrix& a);
    /// id ⊗ B on an n-dimensional first leg.
    static TensorOp on_right(const Matrix& b);

    Tensor2 operator()(const Tensor2& t) const;

    TensorOp& operator+=(const TensorOp& o);
    TensorOp& operator-=(const TensorOp& o);
    friend TensorOp operator+(TensorOp a, const TensorOp& b) { return a += b; }
    friend TensorOp operator-(TensorOp a, const TensorOp& b) { return a -= b; }
    friend TensorOp operator*(const Scalar& s, TensorOp a);
    friend TensorOp operator*(const TensorOp& a, const TensorOp& b);

private:
    std::vector<std::pair<Matrix, Matrix>> terms_;
};

}  // namespace prenov
