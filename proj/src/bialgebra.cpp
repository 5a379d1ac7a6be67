#include "prenov/bialgebra.hpp"

#include "detail.hpp"

#include <string>

namespace prenov {

using detail::elem;
using detail::record;

namespace {

using Family = std::vector<Tensor2>;

constexpr Perm3 kSwap12{1, 0, 2};  // τ ⊗ id
constexpr Perm3 kSwap23{0, 2, 1};  // id ⊗ τ

void require_coalgebra(const PreNovikovCoalgebra& co, const char* what) {
    const std::size_t n = co.alpha.size();
    if (co.beta.size() != n) throw InputError(std::string(what) + ": α and β have different dimensions");
    for (const auto* fam : {&co.alpha, &co.beta})
        for (const auto& t : *fam)
            if (t.rows() != n || t.cols() != n) throw InputError(std::string(what) + ": co-operation values must be n×n");
}

Tensor2 eval(const Family& phi, const Vec& a) {
    const std::size_t n = phi.size();
    Tensor2 out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        if (!a[i].is_zero()) out += a[i] * phi[i];
    return out;
}

Family plus(const Family& x, const Family& y) {
    Family out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
    return out;
}

// (φ ⊗ id) t
Tensor3 on_first(const Family& phi, const Tensor2& t) {
    const std::size_t n = phi.size();
    Tensor3 out(n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (t(p, q).is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) out(i, j, q).add_product(t(p, q), phi[p](i, j));
        }
    return out;
}

// (id ⊗ φ) t
Tensor3 on_second(const Family& phi, const Tensor2& t) {
    const std::size_t n = phi.size();
    Tensor3 out(n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (t(p, q).is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) out(p, i, j).add_product(t(p, q), phi[q](i, j));
        }
    return out;
}

}  // namespace

PreNovikovCoalgebra PreNovikovCoalgebra::zero(std::size_t n) { return {Family(n, Tensor2(n, n)), Family(n, Tensor2(n, n))}; }

Tensor2 PreNovikovCoalgebra::alpha_of(const Vec& a) const {
    detail::require_dim(a.size(), dim(), "alpha_of");
    return eval(alpha, a);
}

Tensor2 PreNovikovCoalgebra::beta_of(const Vec& a) const {
    detail::require_dim(a.size(), dim(), "beta_of");
    return eval(beta, a);
}

PreNovikovAlgebra coalgebra_to_dual_algebra(const PreNovikovCoalgebra& co) {
    require_coalgebra(co, "coalgebra_to_dual_algebra");
    const std::size_t n = co.dim();
    PreNovikovAlgebra out = PreNovikovAlgebra::zero(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                out.lhd(i, j, k) = co.alpha[k](i, j);
                out.rhd(i, j, k) = co.beta[k](i, j);
            }
    return out;
}

PreNovikovCoalgebra coalgebra_from_dual_algebra(const PreNovikovAlgebra& dual) {
    const std::size_t n = dual.dim();
    PreNovikovCoalgebra out = PreNovikovCoalgebra::zero(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                out.alpha[k](i, j) = dual.lhd(i, j, k);
                out.beta[k](i, j) = dual.rhd(i, j, k);
            }
    return out;
}

Report check_coalgebra(const PreNovikovCoalgebra& co) {
    require_coalgebra(co, "check_coalgebra");
    const std::size_t n = co.dim();
    const Family& al = co.alpha;
    const Family& be = co.beta;
    const Family ab = plus(al, be);

    Report out;
    out.subject = "coalgebra";
    out.identities = {"coalgebra.c1", "coalgebra.c2", "coalgebra.c3", "coalgebra.c4"};
    for (int id = 0; id < 4; ++id)
        for (std::size_t a = 0; a < n; ++a) {
            const Tensor2& x = al[a];
            const Tensor2& y = be[a];
            Tensor3 res;
            switch (id) {
                case 0:
                    // (α⊗id)α + (τ⊗id)(id⊗α)β − (id⊗(α+β))α − (τ⊗id)(β⊗id)α
                    res = on_first(al, x) + permute3(on_second(al, y), kSwap12) - on_second(ab, x) -
                          permute3(on_first(be, x), kSwap12);
                    break;
                case 1:
                    // (id⊗β)β + (τ⊗id)((α+β)⊗id)β − ((α+β)⊗id)β − (τ⊗id)(id⊗β)β
                    res = on_second(be, y) + permute3(on_first(ab, y), kSwap12) - on_first(ab, y) -
                          permute3(on_second(be, y), kSwap12);
                    break;
                case 2:
                    // (id⊗τ)(β⊗id)α − ((α+β)⊗id)β
                    res = permute3(on_first(be, x), kSwap23) - on_first(ab, y);
                    break;
                default:
                    // (id⊗τ)(α⊗id)α − (α⊗id)α
                    res = permute3(on_first(al, x), kSwap23) - on_first(al, x);
                    break;
            }
            record(out, out.identities[id], {elem(a)}, res);
        }

    Report dual = check_pre_novikov(coalgebra_to_dual_algebra(co));
    dual.subject = "coalgebra.dual_algebra";
    for (auto& v : dual.violations)
        for (auto& w : v.witness) w += "*";
    if (out.violations.empty() != dual.passed())
        throw InternalError("check_coalgebra: direct and dual-algebra verdicts disagree");
    out.children.push_back(std::move(dual));
    return out;
}

Report check_compatibility(const PreNovikovAlgebra& alg, const PreNovikovCoalgebra& co) {
    require_coalgebra(co, "check_compatibility");
    const std::size_t n = alg.dim();
    detail::require_dim(n, co.dim(), "check_compatibility");
    const StructureConstants circ = alg.circ();

    Report out;
    out.subject = "compatibility";
    for (int k = 1; k <= 8; ++k) out.identities.push_back("compatibility.b" + std::to_string(k));

    auto L = [&](const StructureConstants& op, const Vec& x) { return mult_matrix(op, x, Side::left); };
    auto R = [&](const StructureConstants& op, const Vec& x) { return mult_matrix(op, x, Side::right); };
    auto left = [](const Matrix& m) { return TensorOp::on_left(m); };
    auto right = [](const Matrix& m) { return TensorOp::on_right(m); };
    const Scalar two(2);

    for (std::size_t ia = 0; ia < n; ++ia)
        for (std::size_t ib = 0; ib < n; ++ib) {
            const Vec a = unit_vec(n, ia), b = unit_vec(n, ib);
            const Vec a_circ_b = circ.product(ia, ib), b_circ_a = circ.product(ib, ia);
            const Vec b_lhd_a = alg.lhd.product(ib, ia);
            const Vec a_rhd_b = alg.rhd.product(ia, ib);

            auto al = [&](const Vec& x) { return co.alpha_of(x); };
            auto be = [&](const Vec& x) { return co.beta_of(x); };
            auto tal = [&](const Vec& x) { return flip(co.alpha_of(x)); };
            auto tbe = [&](const Vec& x) { return flip(co.beta_of(x)); };

            const Matrix Lr_a = L(alg.rhd, a), Lr_b = L(alg.rhd, b);
            const Matrix Rl_a = R(alg.lhd, a), Rl_b = R(alg.lhd, b);
            const Matrix Ll_b = L(alg.lhd, b);
            const Matrix Rr_b = R(alg.rhd, b);
            const Matrix Lc_a = L(circ, a), Lc_b = L(circ, b);
            const Matrix Rc_a = R(circ, a), Rc_b = R(circ, b);

            Tensor2 res[8];
            // (τα+β)(a∘b) = ((L▷+2R◁)(a)⊗id + id⊗L∘(a))(τα+β)(b)
            //   + (id⊗R∘(b))(2τα+β)(a) − (R◁(b)⊗id)τα(a)
            res[0] = (tal(a_circ_b) + be(a_circ_b)) -
                     ((left(Lr_a + two * Rl_a) + right(Lc_a))(tal(b) + be(b)) +
                      right(Rc_b)(two * tal(a) + be(a)) - left(Rl_b)(tal(a)));
            // τα(a∘b − b∘a) = ((L▷+R◁)(a)⊗id + id⊗L∘(a))τα(b) − ((L▷+R◁)(b)⊗id + id⊗L∘(b))τα(a)
            res[1] = tal(a_circ_b - b_circ_a) -
                     ((left(Lr_a + Rl_a) + right(Lc_a))(tal(b)) - (left(Lr_b + Rl_b) + right(Lc_b))(tal(a)));
            // (α+β)(a▷b + b◁a) = (id⊗(R▷+L◁)(b))(2τα+β)(a) − (L◁(b)⊗id)α(a)
            //   + ((L▷+2R◁)(a)⊗id + id⊗(L▷+R◁)(a))(α+β)(b)
            {
                const Vec x = a_rhd_b + b_lhd_a;
                res[2] = (al(x) + be(x)) - (right(Rr_b + Ll_b)(two * tal(a) + be(a)) - left(Ll_b)(al(a)) +
                                            (left(Lr_a + two * Rl_a) + right(Lr_a + Rl_a))(al(b) + be(b)));
            }
            // (α+β−τα−τβ)(b◁a) = (id⊗L◁(b))(τα+β)(a) − (L◁(b)⊗id)(α+τβ)(a)
            //   + (id⊗R◁(a))(α+β)(b) − (R◁(a)⊗id)(τα+τβ)(b)
            res[3] = (al(b_lhd_a) + be(b_lhd_a) - tal(b_lhd_a) - tbe(b_lhd_a)) -
                     (right(Ll_b)(tal(a) + be(a)) - left(Ll_b)(al(a) + tbe(a)) + right(Rl_a)(al(b) + be(b)) -
                      left(Rl_a)(tal(b) + tbe(b)));
            // (id⊗R∘(b) − R◁(b)⊗id)(τα+β)(a) = (id⊗R∘(a) − R◁(a)⊗id)(τα+β)(b)
            res[4] = (right(Rc_b) - left(Rl_b))(tal(a) + be(a)) - (right(Rc_a) - left(Rl_a))(tal(b) + be(b));
            // τα(a∘b) = (id⊗R∘(b))τα(a) + ((L▷+R◁)(a)⊗id)(τα+β)(b)
            res[5] = tal(a_circ_b) - (right(Rc_b)(tal(a)) + left(Lr_a + Rl_a)(tal(b) + be(b)));
            // (id⊗(R▷+L◁)(b))τα(a) = ((R▷+L◁)(b)⊗id)α(a) + (id⊗(L▷+R◁)(a))(τα+τβ)(b)
            //   − ((L▷+R◁)(a)⊗id)(α+β)(b)
            res[6] = right(Rr_b + Ll_b)(tal(a)) - (left(Rr_b + Ll_b)(al(a)) + right(Lr_a + Rl_a)(tal(b) + tbe(b)) -
                                                   left(Lr_a + Rl_a)(al(b) + be(b)));
            // (α+β)(b◁a) = (id⊗(R▷+L◁)(b))(τα+β)(a) + (R◁(a)⊗id)(α+β)(b)
            res[7] = (al(b_lhd_a) + be(b_lhd_a)) - (right(Rr_b + Ll_b)(tal(a) + be(a)) + left(Rl_a)(al(b) + be(b)));

            for (int k = 0; k < 8; ++k) record(out, out.identities[k], {elem(ia), elem(ib)}, res[k]);
        }
    detail::group_by_identity(out);
    return out;
}

Report check_bialgebra(const PreNovikovAlgebra& alg, const PreNovikovCoalgebra& co) {
    detail::require_dim(alg.dim(), co.dim(), "check_bialgebra");
    Report out;
    out.subject = "bialgebra";
    out.children.push_back(check_pre_novikov(alg));
    out.children.push_back(check_coalgebra(co));
    out.children.push_back(check_compatibility(alg, co));
    return out;
}

}  // namespace prenov
