#include "prenov/matched_double.hpp"

#include "detail.hpp"

#include <string>

namespace prenov {

using detail::elem;
using detail::record;

namespace {

std::string other(std::size_t i) { return detail::basis_name("f", i); }
std::string dual_elem(std::size_t i) { return elem(i) + "*"; }

void require_pair(const MatchedPair& mp) {
    const std::size_t n = mp.a_op.dim(), m = mp.b_op.dim();
    auto fam = [](const RepMaps& maps, std::size_t count, std::size_t size, const char* what) {
        if (maps.size() != count) throw InputError(std::string("matched pair: ") + what + " has the wrong number of matrices");
        for (const auto& x : maps)
            if (x.rows() != size || x.cols() != size) throw InputError(std::string("matched pair: ") + what + " has the wrong shape");
    };
    fam(mp.l_a, n, m, "l_A");
    fam(mp.r_a, n, m, "r_A");
    fam(mp.l_b, m, n, "l_B");
    fam(mp.r_b, m, n, "r_B");
}

Report with_subject(Report r, std::string subject) {
    r.subject = std::move(subject);
    return r;
}

}  // namespace

Report check_matched_pair(const MatchedPair& mp) {
    require_pair(mp);
    const std::size_t n = mp.a_op.dim(), m = mp.b_op.dim();
    const auto& A = mp.a_op;
    const auto& B = mp.b_op;
    const auto& lA = mp.l_a;
    const auto& rA = mp.r_a;
    const auto& lB = mp.l_b;
    const auto& rB = mp.r_b;

    Report out;
    out.subject = "matched_pair";
    for (int k = 1; k <= 8; ++k) out.identities.push_back("matched_pair.m" + std::to_string(k));
    out.children.push_back(with_subject(check_novikov(A), "matched_pair.a"));
    out.children.push_back(with_subject(check_novikov(B), "matched_pair.b"));
    out.children.push_back(with_subject(check_novikov_rep(A, {lA, rA}), "matched_pair.a_on_b"));
    out.children.push_back(with_subject(check_novikov_rep(B, {lB, rB}), "matched_pair.b_on_a"));

    auto inA = [&](const Vec& u, const Vec& v) { return apply_op(A, u, v); };
    auto inB = [&](const Vec& u, const Vec& v) { return apply_op(B, u, v); };

    // Identities with values in A: witnesses (e_a, e_b, f_x).
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t x = 0; x < m; ++x) {
                const Vec a = unit_vec(n, i), b = unit_vec(n, j);
                const Vec ab = A.product(i, j), ba = A.product(j, i);
                const std::vector<std::string> w{elem(i), elem(j), other(x)};
                // l_B(x)(a∘b) = −l_B(l_A(a)x − r_A(a)x)b + (l_B(x)a − r_B(x)a)∘b + r_B(r_A(b)x)a + a∘(l_B(x)b)
                record(out, "matched_pair.m1", w,
                       lB[x] * ab - (-(act(lB, (lA[i] - rA[i]).column(x)).column(j)) +
                                     inA((lB[x] - rB[x]).column(i), b) + act(rB, rA[j].column(x)).column(i) +
                                     inA(a, lB[x].column(j))));
                // r_B(x)(a∘b − b∘a) = r_B(l_A(b)x)a − r_B(l_A(a)x)b + a∘(r_B(x)b) − b∘(r_B(x)a)
                record(out, "matched_pair.m2", w,
                       rB[x] * (ab - ba) - (act(rB, lA[j].column(x)).column(i) - act(rB, lA[i].column(x)).column(j) +
                                            inA(a, rB[x].column(j)) - inA(b, rB[x].column(i))));
                // (l_B(x)a)∘b + l_B(r_A(a)x)b = (l_B(x)b)∘a + l_B(r_A(b)x)a
                record(out, "matched_pair.m5", w,
                       inA(lB[x].column(i), b) + act(lB, rA[i].column(x)).column(j) -
                           (inA(lB[x].column(j), a) + act(lB, rA[j].column(x)).column(i)));
                // (r_B(x)a)∘b + l_B(l_A(a)x)b = r_B(x)(a∘b)
                record(out, "matched_pair.m6", w,
                       inA(rB[x].column(i), b) + act(lB, lA[i].column(x)).column(j) - rB[x] * ab);
            }

    // Identities with values in B: witnesses (e_a, f_x, f_y).
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = 0; y < m; ++y) {
                const Vec fx = unit_vec(m, x), fy = unit_vec(m, y);
                const Vec xy = B.product(x, y), yx = B.product(y, x);
                const std::vector<std::string> w{elem(i), other(x), other(y)};
                // l_A(a)(x•y) = −l_A(l_B(x)a − r_B(x)a)y + (l_A(a)x − r_A(a)x)•y + r_A(r_B(y)a)x + x•(l_A(a)y)
                record(out, "matched_pair.m3", w,
                       lA[i] * xy - (-(act(lA, (lB[x] - rB[x]).column(i)).column(y)) +
                                     inB((lA[i] - rA[i]).column(x), fy) + act(rA, rB[y].column(i)).column(x) +
                                     inB(fx, lA[i].column(y))));
                // r_A(a)(x•y − y•x) = r_A(l_B(y)a)x − r_A(l_B(x)a)y + x•(r_A(a)y) − y•(r_A(a)x)
                record(out, "matched_pair.m4", w,
                       rA[i] * (xy - yx) - (act(rA, lB[y].column(i)).column(x) - act(rA, lB[x].column(i)).column(y) +
                                            inB(fx, rA[i].column(y)) - inB(fy, rA[i].column(x))));
                // l_A(r_B(x)a)y + (l_A(a)x)•y = l_A(r_B(y)a)x + (l_A(a)y)•x
                record(out, "matched_pair.m7", w,
                       act(lA, rB[x].column(i)).column(y) + inB(lA[i].column(x), fy) -
                           (act(lA, rB[y].column(i)).column(x) + inB(lA[i].column(y), fx)));
                // l_A(l_B(x)a)y + (r_A(a)x)•y = r_A(a)(x•y)
                record(out, "matched_pair.m8", w,
                       act(lA, lB[x].column(i)).column(y) + inB(rA[i].column(x), fy) - rA[i] * xy);
            }
    detail::group_by_identity(out);
    return out;
}

StructureConstants direct_sum_algebra_unchecked(const MatchedPair& mp) {
    require_pair(mp);
    const std::size_t n = mp.a_op.dim(), m = mp.b_op.dim();
    StructureConstants out(n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out(i, j, k) = mp.a_op(i, j, k);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t p = 0; p < m; ++p) out(n + x, n + y, n + p) = mp.b_op(x, y, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < m; ++x) {
            // e_i · f_x = r_B(f_x) e_i + l_A(e_i) f_x
            for (std::size_t k = 0; k < n; ++k) out(i, n + x, k) = mp.r_b[x](k, i);
            for (std::size_t p = 0; p < m; ++p) out(i, n + x, n + p) = mp.l_a[i](p, x);
            // f_x · e_i = l_B(f_x) e_i + r_A(e_i) f_x
            for (std::size_t k = 0; k < n; ++k) out(n + x, i, k) = mp.l_b[x](k, i);
            for (std::size_t p = 0; p < m; ++p) out(n + x, i, n + p) = mp.r_a[i](p, x);
        }
    return out;
}

StructureConstants direct_sum_algebra(const MatchedPair& mp) {
    Report r = check_matched_pair(mp);
    if (!r.passed()) throw Refused("direct_sum_algebra: not a matched pair", r);
    return direct_sum_algebra_unchecked(mp);
}

FormMatrix standard_form(std::size_t n) {
    FormMatrix w(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        w(i, n + i) = -1;
        w(n + i, i) = 1;
    }
    return w;
}

MatchedPair induced_matched_pair(const PreNovikovAlgebra& alg, const PreNovikovCoalgebra& co) {
    detail::require_dim(alg.dim(), co.dim(), "induced_matched_pair");
    PreNovikovAlgebra dual = coalgebra_to_dual_algebra(co);
    NovikovRep on_dual = dual_novikov_rep_unchecked(adjoint_reps(alg).novikov);
    NovikovRep on_alg = dual_novikov_rep_unchecked(adjoint_reps(dual).novikov);
    return {alg.circ(), dual.circ(), on_dual.l, on_dual.r, on_alg.l, on_alg.r};
}

PreNovikovAlgebra block(const PreNovikovAlgebra& alg, std::size_t offset, std::size_t n) {
    if (offset + n > alg.dim()) throw InputError("block: out of range");
    PreNovikovAlgebra out = PreNovikovAlgebra::zero(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                out.lhd(i, j, k) = alg.lhd(offset + i, offset + j, offset + k);
                out.rhd(i, j, k) = alg.rhd(offset + i, offset + j, offset + k);
            }
    return out;
}

Report check_double_construction(const PreNovikovAlgebra& alg, const PreNovikovCoalgebra& co) {
    const std::size_t n = alg.dim();
    detail::require_dim(n, co.dim(), "check_double_construction");
    const PreNovikovAlgebra dual = coalgebra_to_dual_algebra(co);
    const StructureConstants sum = direct_sum_algebra_unchecked(induced_matched_pair(alg, co));
    const FormMatrix w = standard_form(n);

    Report out;
    out.subject = "double";
    out.identities = {"double.a_lhd", "double.a_rhd", "double.dual_lhd", "double.dual_rhd"};
    out.children.push_back(with_subject(check_pre_novikov(alg), "double.a"));
    out.children.push_back(with_subject(check_pre_novikov(dual), "double.dual"));
    Report nov = with_subject(check_novikov(sum), "double.sum");
    Report qf = check_quasi_frobenius(sum, w);
    const bool solvable = nov.passed() && qf.passed();
    out.children.push_back(std::move(nov));
    out.children.push_back(std::move(qf));
    if (!solvable) return out;

    // The A and A* blocks of the compatible structure must be closed and equal
    // to the given tables; the residual is the full 2n-vector difference.
    const PreNovikovAlgebra s = qf_structure_direct(sum, w);
    auto compare = [&](const char* id, const StructureConstants& big, const StructureConstants& small,
                       std::size_t offset, bool dual_names) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec res = big.product(offset + i, offset + j);
                for (std::size_t k = 0; k < n; ++k) res[offset + k] -= small(i, j, k);
                record(out, id, {dual_names ? dual_elem(i) : elem(i), dual_names ? dual_elem(j) : elem(j)}, res);
            }
    };
    compare("double.a_lhd", s.lhd, alg.lhd, 0, false);
    compare("double.a_rhd", s.rhd, alg.rhd, 0, false);
    compare("double.dual_lhd", s.lhd, dual.lhd, n, true);
    compare("double.dual_rhd", s.rhd, dual.rhd, n, true);
    return out;
}

DoubleConstruction double_from_bialgebra(const PreNovikovBialgebra& b) {
    Report r = check_bialgebra(b);
    if (!r.passed()) throw Refused("double_from_bialgebra: not a pre-Novikov bialgebra", r);
    const std::size_t n = b.algebra.dim();
    Report d = check_double_construction(b.algebra, b.coalgebra);
    if (!d.passed()) throw InternalError("double_from_bialgebra: the built double fails its own checks");
    DoubleConstruction out;
    out.algebra = direct_sum_algebra_unchecked(induced_matched_pair(b.algebra, b.coalgebra));
    out.form = standard_form(n);
    out.split_dim = n;
    out.structure = pre_novikov_from_qf(out.algebra, out.form);
    return out;
}

}  // namespace prenov
