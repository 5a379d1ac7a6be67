#pragma once

#include "prenov/bialgebra.hpp"
#include "prenov/representations.hpp"

namespace prenov {

/// Two Novikov algebras acting on each other. l_a, r_a: A acting on B (one
/// m×m matrix per basis element of A); l_b, r_b: B acting on A.
struct MatchedPair {
    StructureConstants a_op;
    StructureConstants b_op;
    RepMaps l_a, r_a;
    RepMaps l_b, r_b;

    friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

/// Novikov checks on both algebras and both representations as children,
/// and the eight mixed identities on every (e_a, e_b, f_x) / (e_a, f_x, f_y).
Report check_matched_pair(const MatchedPair& mp);

/// The product on A⊕B, basis (e_1..e_n, f_1..f_m):
/// (a+x)(b+y) = (a∘b + l_B(x)b + r_B(y)a) + (x•y + l_A(a)y + r_A(b)x).
/// Refuses unless check_matched_pair passes.
StructureConstants direct_sum_algebra(const MatchedPair& mp);
StructureConstants direct_sum_algebra_unchecked(const MatchedPair& mp);

/// ω(a+f, b+g) = ⟨f, b⟩ − ⟨g, a⟩ on basis (e_1..e_n, e*_1..e*_n).
FormMatrix standard_form(std::size_t n);

/// (A, A*, L▷*+R◁*, −R◁*, L▷*_*+R◁*_*, −R◁*_*) with A* carrying the dual
/// algebra of the coalgebra. No checks.
MatchedPair induced_matched_pair(const PreNovikovAlgebra& alg, const PreNovikovCoalgebra& co);

struct DoubleConstruction {
    StructureConstants algebra;  // on A⊕A*
    FormMatrix form;
    std::size_t split_dim = 0;
    PreNovikovAlgebra structure;  // the compatible pre-Novikov structure of (algebra, form)

    friend bool operator==(const DoubleConstruction&, const DoubleConstruction&) = default;
};

/// Verdict on whether A⊕A* with the induced product and the standard form is
/// a double construction for (A, ◁, ▷) and the dual algebra of co. Children:
/// both pre-Novikov checks, Novikov and quasi-Frobenius checks of the sum,
/// and block closure of the compatible structure.
Report check_double_construction(const PreNovikovAlgebra& alg, const PreNovikovCoalgebra& co);

/// Refuses unless check_bialgebra passes; re-verifies what it builds and
/// throws InternalError if a built invariant fails.
DoubleConstruction double_from_bialgebra(const PreNovikovBialgebra& b);

/// The (A, A*) blocks of a pre-Novikov structure on A⊕A*.
PreNovikovAlgebra block(const PreNovikovAlgebra& alg, std::size_t offset, std::size_t n);

}  // namespace prenov
