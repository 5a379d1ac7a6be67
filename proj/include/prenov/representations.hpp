#pragma once

#include "prenov/algebras.hpp"

#include <vector>

namespace prenov {

/// One m×m matrix per algebra basis element; extended linearly.
using RepMaps = std::vector<Matrix>;

/// The operator of a RepMaps family at a general element a.
Matrix act(const RepMaps& maps, const Vec& a);

struct NovikovRep {
    RepMaps l;
    RepMaps r;

    std::size_t algebra_dim() const { return l.size(); }
    std::size_t module_dim() const { return l.empty() ? 0 : l.front().rows(); }
    static NovikovRep zero(std::size_t algebra_dim, std::size_t module_dim);

    friend bool operator==(const NovikovRep&, const NovikovRep&) = default;
};

/// Actions (l▷, r▷, l◁, r◁), in that order.
struct PreNovikovRep {
    RepMaps l_rhd;
    RepMaps r_rhd;
    RepMaps l_lhd;
    RepMaps r_lhd;

    std::size_t algebra_dim() const { return l_rhd.size(); }
    std::size_t module_dim() const { return l_rhd.empty() ? 0 : l_rhd.front().rows(); }
    static PreNovikovRep zero(std::size_t algebra_dim, std::size_t module_dim);

    friend bool operator==(const PreNovikovRep&, const PreNovikovRep&) = default;
};

Report check_novikov_rep(const StructureConstants& op, const NovikovRep& rep);
Report check_pre_novikov_rep(const PreNovikovAlgebra& alg, const PreNovikovRep& rep);

/// (V*, l* + r*, −r*). Refuses unless rep is a representation of op.
NovikovRep dual_novikov_rep(const StructureConstants& op, const NovikovRep& rep);
/// The same formula without the precondition check.
NovikovRep dual_novikov_rep_unchecked(const NovikovRep& rep);

/// (V*, l▷* + l◁* + r▷* + r◁*, r▷*, −(r▷* + l◁*), −(r▷* + r◁*)). Refuses
/// unless rep is a representation of alg.
PreNovikovRep dual_pre_novikov_rep(const PreNovikovAlgebra& alg, const PreNovikovRep& rep);
PreNovikovRep dual_pre_novikov_rep_unchecked(const PreNovikovRep& rep);

struct AdjointReps {
    NovikovRep novikov;         // (L▷, R◁) over the associated Novikov algebra
    PreNovikovRep pre_novikov;  // (L▷, R▷, L◁, R◁)
};
AdjointReps adjoint_reps(const PreNovikovAlgebra& alg);

/// The adjoint (L∘, R∘) of a Novikov product.
NovikovRep adjoint_novikov_rep(const StructureConstants& op);

/// A ⋉ V on basis (e_1..e_n, v_1..v_m):
/// (a+u)◁(b+v) = a◁b + l◁(a)v + r◁(b)u, and likewise for ▷.
/// Refuses unless rep is a representation of alg.
PreNovikovAlgebra semidirect_pre_novikov(const PreNovikovAlgebra& alg, const PreNovikovRep& rep);
PreNovikovAlgebra semidirect_pre_novikov_unchecked(const PreNovikovAlgebra& alg, const PreNovikovRep& rep);

}  // namespace prenov
