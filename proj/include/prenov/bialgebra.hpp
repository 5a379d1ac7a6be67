#pragma once

#include "prenov/algebras.hpp"

#include <vector>

namespace prenov {

/// Co-operations α, β: A → A⊗A, one Tensor2 per basis element.
struct PreNovikovCoalgebra {
    std::vector<Tensor2> alpha;
    std::vector<Tensor2> beta;

    std::size_t dim() const { return alpha.size(); }
    static PreNovikovCoalgebra zero(std::size_t n);

    /// α(a), β(a) for a general element.
    Tensor2 alpha_of(const Vec& a) const;
    Tensor2 beta_of(const Vec& a) const;

    friend bool operator==(const PreNovikovCoalgebra&, const PreNovikovCoalgebra&) = default;
};

struct PreNovikovBialgebra {
    PreNovikovAlgebra algebra;
    PreNovikovCoalgebra coalgebra;

    friend bool operator==(const PreNovikovBialgebra&, const PreNovikovBialgebra&) = default;
};

/// The products on A* in the dual basis: ⟨f ◁* g, a⟩ = ⟨f⊗g, α(a)⟩ and
/// ⟨f ▷* g, a⟩ = ⟨f⊗g, β(a)⟩.
PreNovikovAlgebra coalgebra_to_dual_algebra(const PreNovikovCoalgebra& co);

/// Inverse of the above.
PreNovikovCoalgebra coalgebra_from_dual_algebra(const PreNovikovAlgebra& dual);

/// The four co-identities on every basis element. The dual algebra is
/// checked as a child report; if the two verdicts differ, InternalError.
Report check_coalgebra(const PreNovikovCoalgebra& co);

/// The eight compatibility identities on every basis pair (a, b).
Report check_compatibility(const PreNovikovAlgebra& alg, const PreNovikovCoalgebra& co);

/// pre-Novikov + coalgebra + compatibility, nested as children.
Report check_bialgebra(const PreNovikovAlgebra& alg, const PreNovikovCoalgebra& co);
inline Report check_bialgebra(const PreNovikovBialgebra& b) { return check_bialgebra(b.algebra, b.coalgebra); }

}  // namespace prenov
