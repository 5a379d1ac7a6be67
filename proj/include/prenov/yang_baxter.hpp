#pragma once

#include "prenov/bialgebra.hpp"
#include "prenov/representations.hpp"

#include <string>
#include <utility>
#include <vector>

namespace prenov {

/// r12∘r13 + r23⊙r13 − r12◁r23, built from placed products.
Tensor3 ybe_residual(const PreNovikovAlgebra& alg, const Tensor2& r);

/// Same zero test evaluated coefficient by coefficient, stopping at the
/// first nonzero one.
bool ybe_holds(const PreNovikovAlgebra& alg, const Tensor2& r);

/// α(a) = (L∘(a)⊗id + id⊗(L▷+R◁)(a)) τr,  β(a) = −(L▷(a)⊗id + id⊗(L∘+R∘)(a)) r.
PreNovikovCoalgebra coboundary_maps(const PreNovikovAlgebra& alg, const Tensor2& r);

struct CoboundaryBialgebra {
    PreNovikovBialgebra bialgebra;
    Report report;  // check_bialgebra on the result
};

/// Refuses unless r is symmetric and solves the YBE; the refusal report
/// names the failed precondition. Throws InternalError if the resulting
/// bialgebra check fails.
CoboundaryBialgebra bialgebra_from_r(const PreNovikovAlgebra& alg, const Tensor2& r);

struct NamedTensor {
    std::string name;
    Tensor3 value;
};

struct CoboundaryDiagnostics {
    Report conditions;             // four conditions on (τr − r), per basis pair
    std::vector<NamedTensor> rs;   // R11, R12, R13, R21, R22, R31, R41
    Report coalgebra_conditions;   // four co-identity conditions, per basis element

    const Tensor3& r_tensor(const std::string& name) const;
};

CoboundaryDiagnostics coboundary_diagnostics(const PreNovikovAlgebra& alg, const Tensor2& r);

/// ⟨f⊗g, r⟩ = ⟨f, T_r(g)⟩: the matrix entry (i, j) equals r(i, j).
Matrix t_r_from_tensor(const Tensor2& r);

/// T(u)∘T(v) = T(l(T(u))v) + T(r(T(v))u) on module basis pairs. T is
/// dim(A) × dim(V).
Report check_o_operator_novikov(const StructureConstants& op, const NovikovRep& rep, const Matrix& t);

/// The ▷ and ◁ versions of the same identity.
Report check_o_operator_pre_novikov(const PreNovikovAlgebra& alg, const PreNovikovRep& rep, const Matrix& t);

/// u▷v = l(T(u))v, u◁v = r(T(v))u on V. Refuses unless T is an O-operator.
PreNovikovAlgebra pre_novikov_from_o(const StructureConstants& op, const NovikovRep& rep, const Matrix& t);

struct Co2Verdicts {
    bool ybe;
    bool novikov_o_operator;
    bool pre_novikov_o_operator;

    bool agree() const { return ybe == novikov_o_operator && ybe == pre_novikov_o_operator; }
    friend bool operator==(const Co2Verdicts&, const Co2Verdicts&) = default;
};

/// Three verdicts computed separately: the YBE, T_r as an O-operator on
/// (A, ∘) for (A*, L▷*+R◁*, −R◁*), and T_r as an O-operator on (A, ◁, ▷)
/// for the dual adjoint representation. Refuses unless r is symmetric.
Co2Verdicts co2_equivalence(const PreNovikovAlgebra& alg, const Tensor2& r);

struct OperatorLift {
    PreNovikovAlgebra semidirect;  // A ⋉ V* with the dual representation
    Tensor2 r;                     // r_T + τ(r_T)
    bool ybe;
    bool o_operator;
};

/// Builds A ⋉ V* and r = Σ T(v_i)⊗v*_i + v*_i⊗T(v_i). T need not be an
/// O-operator; the YBE verdict and the O-operator verdict must agree,
/// otherwise InternalError. Refuses unless rep is a representation.
OperatorLift lift_o_operator(const PreNovikovAlgebra& alg, const PreNovikovRep& rep, const Matrix& t);

struct SearchOptions {
    /// Largest number of candidates enumerated before refusing.
    std::size_t budget = 2'000'000;
    /// 0 reads PRENOV_WORKERS, falling back to 1.
    unsigned workers = 0;
};

/// Number of symmetric tensors with entries from `values` at dimension n.
std::size_t search_space_size(std::size_t n, std::size_t value_count);

/// Every symmetric r with entries in `values` that solves the YBE, in
/// lexicographic order of the upper-triangle entries (values ascending).
/// Throws InputError if the space exceeds the budget.
std::vector<Tensor2> search_symmetric_ybe(const PreNovikovAlgebra& alg, std::vector<Scalar> values,
                                          const SearchOptions& opts = {});

}  // namespace prenov
