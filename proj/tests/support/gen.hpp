#pragma once

// Seeded random inputs for the property tests.

#include "prenov/representations.hpp"
#include "oracle.hpp"

#include <random>

namespace gen {

using namespace prenov;

inline std::mt19937& rng() {
    static std::mt19937 g(20240611u);
    return g;
}

inline long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Tensor2 symmetric(std::size_t n, long lo, long hi) {
    Tensor2 r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) r(i, j) = r(j, i) = Scalar(pick(lo, hi));
    return r;
}

inline Tensor2 any_tensor(std::size_t n, long lo, long hi) {
    Tensor2 r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = Scalar(pick(lo, hi));
    return r;
}

/// Random invertible matrix with small integer entries.
inline Matrix invertible(std::size_t n) {
    for (;;) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(pick(-2, 2));
        if (!determinant(m).is_zero()) return m;
    }
}

/// p⁻¹ ρ(a) p for every map: the same representation in another module basis.
inline RepMaps conjugate(const RepMaps& maps, const Matrix& p, const Matrix& pinv) {
    RepMaps out;
    for (const auto& m : maps) out.push_back(pinv * m * p);
    return out;
}

/// ρ ⊕ 0 on V ⊕ k^extra.
inline RepMaps pad(const RepMaps& maps, std::size_t extra) {
    RepMaps out;
    for (const auto& m : maps) {
        Matrix b(m.rows() + extra, m.cols() + extra);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = m(i, j);
        out.push_back(b);
    }
    return out;
}

inline std::vector<std::vector<oracle::Q>> rows(const Matrix& m) {
    std::vector<std::vector<oracle::Q>> out(m.rows(), std::vector<oracle::Q>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).raw();
    return out;
}

inline std::vector<std::vector<std::vector<oracle::Q>>> rows(const RepMaps& ms) {
    std::vector<std::vector<std::vector<oracle::Q>>> out;
    for (const auto& m : ms) out.push_back(rows(m));
    return out;
}

inline std::vector<std::vector<oracle::Q>> rows(const Tensor2& t) { return rows(t.coeffs()); }

}  // namespace gen
