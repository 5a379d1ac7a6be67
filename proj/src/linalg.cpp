#include "prenov/linalg.hpp"

#include "prenov/report.hpp"

#include <utility>

namespace prenov {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec& operator+=(Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vector dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] += b[i];
    return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("vector dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] -= b[i];
    return a;
}

Vec operator+(Vec a, const Vec& b) { return a += b; }
Vec operator-(Vec a, const Vec& b) { return a -= b; }

Vec operator-(Vec a) {
    for (auto& x : a) x = -x;
    return a;
}

Vec operator*(const Scalar& s, Vec v) {
    for (auto& x : v) x *= s;
    return v;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw InputError("ragged matrix rows");
        std::size_t j = 0;
        for (const auto& x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw InputError("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j).add_product(aik, b(k, j));
        }
    return c;
}

Vec operator*(const Matrix& a, const Vec& v) {
    if (a.cols_ != v.size()) throw InputError("matrix-vector shape mismatch");
    Vec out(a.rows_);
    for (std::size_t j = 0; j < a.cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < a.rows_; ++i) out[i].add_product(a(i, j), v[j]);
    }
    return out;
}

Scalar determinant(const Matrix& m) {
    if (!m.square()) throw InputError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Scalar(1);

    // Clear denominators row by row so elimination runs over the integers.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpq_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class v = m(i, j).raw() * l;
            a[i][j] = v.get_num();
        }
    }

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return Scalar(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    mpq_class det(a[n - 1][n - 1] * sign);
    det /= scale;
    return Scalar(det);
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.square()) throw InputError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a(p, col).is_zero()) ++p;
        if (p == n) return std::nullopt;
        if (p != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(col, j));
                std::swap(inv(p, j), inv(col, j));
            }
        Scalar piv = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= piv;
            inv(col, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            Scalar f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace prenov
