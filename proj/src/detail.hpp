#pragma once

// Helpers shared by the verifiers. Not installed.

#include "prenov/report.hpp"
#include "prenov/tensor.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

namespace prenov::detail {

inline std::string basis_name(const char* prefix, std::size_t i) { return prefix + std::to_string(i + 1); }

inline std::string elem(std::size_t i) { return basis_name("e", i); }

inline void record(Report& rep, const std::string& id, std::vector<std::string> witness, const Vec& residual) {
    if (is_zero(residual)) return;
    rep.violations.push_back({id, std::move(witness), residual});
}

inline void record(Report& rep, const std::string& id, std::vector<std::string> witness, const Scalar& residual) {
    if (residual.is_zero()) return;
    rep.violations.push_back({id, std::move(witness), {residual}});
}

inline void record(Report& rep, const std::string& id, std::vector<std::string> witness, const Tensor2& residual) {
    if (residual.is_zero()) return;
    Vec flat;
    flat.reserve(residual.rows() * residual.cols());
    for (std::size_t i = 0; i < residual.rows(); ++i)
        for (std::size_t j = 0; j < residual.cols(); ++j) flat.push_back(residual(i, j));
    rep.violations.push_back({id, std::move(witness), std::move(flat)});
}

inline void record(Report& rep, const std::string& id, std::vector<std::string> witness, const Tensor3& residual) {
    if (residual.is_zero()) return;
    rep.violations.push_back({id, std::move(witness), residual.data()});
}

inline void require_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
}

/// Σ_i a_i M_i for a family of matrices indexed by basis elements.
inline Matrix combine(const std::vector<Matrix>& maps, const Vec& a, std::size_t rows, std::size_t cols) {
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) out += a[i] * maps[i];
    return out;
}

/// Stable regrouping of violations in the order of rep.identities.
inline void group_by_identity(Report& rep) {
    auto pos = [&](const std::string& id) {
        return std::find(rep.identities.begin(), rep.identities.end(), id) - rep.identities.begin();
    };
    std::stable_sort(rep.violations.begin(), rep.violations.end(),
                     [&](const Violation& x, const Violation& y) { return pos(x.identity) < pos(y.identity); });
}

}  // namespace prenov::detail
