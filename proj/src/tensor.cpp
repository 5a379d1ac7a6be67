#include "prenov/tensor.hpp"

#include "prenov/report.hpp"

#include <string>

namespace prenov {

Tensor2 Tensor2::basis(std::size_t n, std::size_t i, std::size_t j) {
    Tensor2 t(n, n);
    t(i, j) = 1;
    return t;
}

Tensor2 Tensor2::outer(const Vec& x, const Vec& y) {
    Tensor2 t(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j) t(i, j) = x[i] * y[j];
    }
    return t;
}

bool Tensor2::is_symmetric() const { return square() && m_ == m_.transpose(); }

Tensor3 Tensor3::outer(const Vec& x, const Tensor2& t) {
    if (!t.square() || t.rows() != x.size()) throw InputError("outer product dimension mismatch");
    const std::size_t n = x.size();
    Tensor3 out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out(i, j, k) = x[i] * t(j, k);
    }
    return out;
}

Tensor3 Tensor3::outer(const Tensor2& t, const Vec& z) {
    if (!t.square() || t.rows() != z.size()) throw InputError("outer product dimension mismatch");
    const std::size_t n = z.size();
    Tensor3 out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (t(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) out(i, j, k) = t(i, j) * z[k];
        }
    return out;
}

bool Tensor3::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
    if (n_ != o.n_) throw InputError("Tensor3 dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
    return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
    if (n_ != o.n_) throw InputError("Tensor3 dimension mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
    return *this;
}

Tensor3 operator*(const Scalar& s, Tensor3 a) {
    for (auto& x : a.a_) x *= s;
    return a;
}

Vec StructureConstants::product(std::size_t i, std::size_t j) const {
    Vec v(n_);
    for (std::size_t k = 0; k < n_; ++k) v[k] = (*this)(i, j, k);
    return v;
}

bool StructureConstants::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

StructureConstants& StructureConstants::operator+=(const StructureConstants& o) {
    if (n_ != o.n_) throw InputError("structure constant dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    return *this;
}

StructureConstants& StructureConstants::operator-=(const StructureConstants& o) {
    if (n_ != o.n_) throw InputError("structure constant dimension mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
    return *this;
}

StructureConstants operator*(const Scalar& s, StructureConstants a) {
    for (auto& x : a.c_) x *= s;
    return a;
}

StructureConstants opposite(const StructureConstants& op) {
    const std::size_t n = op.dim();
    StructureConstants out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out(i, j, k) = op(j, i, k);
    return out;
}

StructureConstants change_basis(const StructureConstants& op, const Matrix& p) {
    const std::size_t n = op.dim();
    if (p.rows() != n || p.cols() != n) throw InputError("change of basis matrix has wrong shape");
    auto pinv = inverse(p);
    if (!pinv) throw InputError("change of basis matrix is singular");
    StructureConstants out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec prod = *pinv * apply_op(op, p.column(i), p.column(j));
            for (std::size_t k = 0; k < n; ++k) out(i, j, k) = prod[k];
        }
    return out;
}

Vec apply_op(const StructureConstants& op, const Vec& a, const Vec& b) {
    const std::size_t n = op.dim();
    if (a.size() != n || b.size() != n) throw InputError("apply_op: dimension mismatch");
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            Scalar ab = a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k) out[k].add_product(ab, op(i, j, k));
        }
    }
    return out;
}

Matrix mult_matrix(const StructureConstants& op, const Vec& a, Side side) {
    const std::size_t n = op.dim();
    if (a.size() != n) throw InputError("mult_matrix: dimension mismatch");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = side == Side::left ? op(i, j, k) : op(j, i, k);
                m(k, j).add_product(a[i], c);
            }
    }
    return m;
}

Matrix mult_matrix(const StructureConstants& op, std::size_t basis_index, Side side) {
    return mult_matrix(op, unit_vec(op.dim(), basis_index), side);
}

Tensor2 flip(const Tensor2& t) {
    if (!t.square()) throw InputError("flip requires a square tensor");
    return Tensor2(t.coeffs().transpose());
}

Perm3 compose(const Perm3& outer, const Perm3& inner) {
    Perm3 out{};
    for (int k = 0; k < 3; ++k) out[k] = outer[inner[k]];
    return out;
}

Tensor3 permute3(const Tensor3& t, const Perm3& perm) {
    bool seen[3] = {false, false, false};
    for (int p : perm) {
        if (p < 0 || p > 2 || seen[p]) throw InputError("permute3: not a permutation");
        seen[p] = true;
    }
    const std::size_t n = t.dim();
    Tensor3 out(n);
    std::array<std::size_t, 3> src{}, dst{};
    for (src[0] = 0; src[0] < n; ++src[0])
        for (src[1] = 0; src[1] < n; ++src[1])
            for (src[2] = 0; src[2] < n; ++src[2]) {
                for (int k = 0; k < 3; ++k) dst[perm[k]] = src[k];
                out(dst[0], dst[1], dst[2]) = t(src[0], src[1], src[2]);
            }
    return out;
}

Tensor3 apply_on_leg(const Tensor3& t, const Matrix& m, int leg) {
    const std::size_t n = t.dim();
    if (m.rows() != n || m.cols() != n) throw InputError("apply_on_leg: dimension mismatch");
    if (leg < 0 || leg > 2) throw InputError("apply_on_leg: leg must be 0, 1 or 2");
    Tensor3 out(n);
    std::array<std::size_t, 3> idx{};
    for (idx[0] = 0; idx[0] < n; ++idx[0])
        for (idx[1] = 0; idx[1] < n; ++idx[1])
            for (idx[2] = 0; idx[2] < n; ++idx[2]) {
                const Scalar& v = t(idx[0], idx[1], idx[2]);
                if (v.is_zero()) continue;
                auto dst = idx;
                for (std::size_t a = 0; a < n; ++a) {
                    dst[leg] = a;
                    out(dst[0], dst[1], dst[2]).add_product(m(a, idx[leg]), v);
                }
            }
    return out;
}

namespace {

void validate_placement(const Placement& s) {
    auto ok = [](int x) { return x >= 1 && x <= 3; };
    if (!ok(s.left.first) || !ok(s.left.second) || !ok(s.right.first) || !ok(s.right.second))
        throw InputError("placed_product: slots must lie in {1,2,3}");
    if (s.left.first == s.left.second || s.right.first == s.right.second)
        throw InputError("placed_product: a tensor cannot occupy one slot twice");
    int shared = 0;
    for (int a : {s.left.first, s.left.second})
        for (int b : {s.right.first, s.right.second})
            if (a == b) ++shared;
    if (shared != 1) throw InputError("placed_product: the two tensors must share exactly one slot");
}

}  // namespace

Tensor3 placed_product(const Tensor2& r, const Tensor2& r2, const StructureConstants& op, Placement slots) {
    validate_placement(slots);
    const std::size_t n = op.dim();
    if (r.rows() != n || r.cols() != n || r2.rows() != n || r2.cols() != n)
        throw InputError("placed_product: dimension mismatch");

    const int shared = (slots.left.first == slots.right.first || slots.left.first == slots.right.second)
                           ? slots.left.first
                           : slots.left.second;
    const bool r_x_shared = slots.left.first == shared;
    const bool r2_x_shared = slots.right.first == shared;
    const int r_other = (r_x_shared ? slots.left.second : slots.left.first) - 1;
    const int r2_other = (r2_x_shared ? slots.right.second : slots.right.first) - 1;
    const int h = shared - 1;

    Tensor3 out(n);
    std::array<std::size_t, 3> idx{};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (r(i, j).is_zero()) continue;
            const std::size_t u = r_x_shared ? i : j;
            idx[r_other] = r_x_shared ? j : i;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    if (r2(k, l).is_zero()) continue;
                    const std::size_t v = r2_x_shared ? k : l;
                    idx[r2_other] = r2_x_shared ? l : k;
                    Scalar coef = r(i, j) * r2(k, l);
                    for (std::size_t w = 0; w < n; ++w) {
                        const Scalar& c = op(u, v, w);
                        if (c.is_zero()) continue;
                        idx[h] = w;
                        out(idx[0], idx[1], idx[2]).add_product(coef, c);
                    }
                }
        }
    return out;
}

Matrix dual_map(const Matrix& m, DualMode mode) {
    Matrix t = m.transpose();
    if (mode == DualMode::rep) t *= Scalar(-1);
    return t;
}

TensorOp TensorOp::on_left(const Matrix& a) { return TensorOp(a, Matrix::identity(a.rows())); }

TensorOp TensorOp::on_right(const Matrix& b) { return TensorOp(Matrix::identity(b.rows()), b); }

Tensor2 TensorOp::operator()(const Tensor2& t) const {
    Tensor2 out(t.rows(), t.cols());
    for (const auto& [a, b] : terms_) out += Tensor2(a * t.coeffs() * b.transpose());
    return out;
}

TensorOp& TensorOp::operator+=(const TensorOp& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

TensorOp& TensorOp::operator-=(const TensorOp& o) {
    for (const auto& [a, b] : o.terms_) terms_.emplace_back(-a, b);
    return *this;
}

TensorOp operator*(const Scalar& s, TensorOp a) {
    for (auto& term : a.terms_) term.first *= s;
    return a;
}

TensorOp operator*(const TensorOp& a, const TensorOp& b) {
    TensorOp out;
    for (const auto& [a1, b1] : a.terms_)
        for (const auto& [a2, b2] : b.terms_) out.terms_.emplace_back(a1 * a2, b1 * b2);
    return out;
}

}  // namespace prenov
