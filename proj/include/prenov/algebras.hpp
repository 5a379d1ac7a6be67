#pragma once

#include "prenov/report.hpp"
#include "prenov/tensor.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace prenov {

/// A pair of products (◁, ▷) on one based space. Nothing is assumed about
/// them; check_pre_novikov decides whether they form a pre-Novikov algebra.
struct PreNovikovAlgebra {
    StructureConstants lhd;
    StructureConstants rhd;

    PreNovikovAlgebra() = default;
    PreNovikovAlgebra(StructureConstants l, StructureConstants r);
    static PreNovikovAlgebra zero(std::size_t n) { return {StructureConstants(n), StructureConstants(n)}; }

    std::size_t dim() const { return lhd.dim(); }
    /// a∘b = a◁b + a▷b
    StructureConstants circ() const { return lhd + rhd; }

    friend bool operator==(const PreNovikovAlgebra&, const PreNovikovAlgebra&) = default;
};

/// ω(e_i, e_j) in entry (i, j).
using FormMatrix = Matrix;

Report check_novikov(const StructureConstants& op);
Report check_pre_novikov(const StructureConstants& lhd, const StructureConstants& rhd);
Report check_pre_novikov(const PreNovikovAlgebra& alg);

/// Yes/no pre-Novikov test on small integer tables (row-major n×n×n). Runs
/// the same identities as check_pre_novikov in exact int64 arithmetic and
/// stops at the first violation; meant for bulk enumeration.
bool is_pre_novikov_int(std::size_t n, const std::vector<std::int64_t>& lhd, const std::vector<std::int64_t>& rhd);
bool is_novikov_int(std::size_t n, const std::vector<std::int64_t>& op);

/// ∘ = ◁ + ▷. Refuses with the failing report when the input is not pre-Novikov.
StructureConstants associated_novikov(const PreNovikovAlgebra& alg);

struct DerivedOps {
    StructureConstants odot;  // a⊙b = a▷b + b◁a
    StructureConstants star;  // a★b = a∘b + b∘a
};
DerivedOps derived_ops(const PreNovikovAlgebra& alg);

/// Skewsymmetry, nondegeneracy and the cocycle-like identity
/// ω(a∘b,c) − ω(a∘c+c∘a,b) + ω(c∘b,a) = 0.
Report check_quasi_frobenius(const StructureConstants& op, const FormMatrix& w);

/// ω(x, y) = xᵀ w y.
Scalar form_value(const FormMatrix& w, const Vec& x, const Vec& y);

/// The map T: A* → A with ω(T(f), a) = ⟨f, a⟩. Throws InputError when w is
/// degenerate.
Matrix form_iso(const FormMatrix& w);

/// The compatible pre-Novikov structure of a quasi-Frobenius Novikov algebra:
/// ω(a▷b, c) = ω(a∘c + c∘a, b), ω(a◁b, c) = ω(a, c∘b). Solved directly and
/// through the dual algebra; the two must agree. Refuses when (op, w) is not
/// quasi-Frobenius.
PreNovikovAlgebra pre_novikov_from_qf(const StructureConstants& op, const FormMatrix& w);

/// The two routes used above, exposed for cross-checking. Neither verifies
/// its input.
PreNovikovAlgebra qf_structure_direct(const StructureConstants& op, const FormMatrix& w);
PreNovikovAlgebra qf_structure_dual(const StructureConstants& op, const FormMatrix& w);

/// Both tables rewritten in the basis given by the columns of p.
PreNovikovAlgebra change_basis(const PreNovikovAlgebra& alg, const Matrix& p);

}  // namespace prenov
