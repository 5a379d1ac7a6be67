#include "prenov/algebras.hpp"

#include "detail.hpp"
#include "identities.hpp"

namespace prenov {

using detail::elem;
using detail::record;

namespace {

const char* const kNovikovIds[] = {"novikov.associator", "novikov.right_commutative"};
const char* const kPreNovikovIds[] = {"pre_novikov.rhd_rhd", "pre_novikov.rhd_lhd", "pre_novikov.circ_rhd",
                                      "pre_novikov.lhd_lhd"};

detail::Table<Scalar> view(const StructureConstants& c) { return {c.dim(), c.data().data()}; }

}  // namespace

PreNovikovAlgebra::PreNovikovAlgebra(StructureConstants l, StructureConstants r) : lhd(std::move(l)), rhd(std::move(r)) {
    detail::require_dim(lhd.dim(), rhd.dim(), "pre-Novikov algebra");
}

Report check_novikov(const StructureConstants& op) {
    Report rep;
    rep.subject = "novikov";
    rep.identities = {kNovikovIds[0], kNovikovIds[1]};
    detail::eval_novikov(view(op), [&](int id, std::size_t i, std::size_t j, std::size_t k, const Vec& res) {
        record(rep, kNovikovIds[id], {elem(i), elem(j), elem(k)}, res);
        return true;
    });
    return rep;
}

Report check_pre_novikov(const StructureConstants& lhd, const StructureConstants& rhd) {
    detail::require_dim(lhd.dim(), rhd.dim(), "check_pre_novikov");
    Report rep;
    rep.subject = "pre_novikov";
    rep.identities.assign(std::begin(kPreNovikovIds), std::end(kPreNovikovIds));
    StructureConstants circ = lhd + rhd;
    detail::eval_pre_novikov(view(lhd), view(rhd), view(circ),
                             [&](int id, std::size_t i, std::size_t j, std::size_t k, const Vec& res) {
                                 record(rep, kPreNovikovIds[id], {elem(i), elem(j), elem(k)}, res);
                                 return true;
                             });
    return rep;
}

Report check_pre_novikov(const PreNovikovAlgebra& alg) { return check_pre_novikov(alg.lhd, alg.rhd); }

bool is_pre_novikov_int(std::size_t n, const std::vector<std::int64_t>& lhd, const std::vector<std::int64_t>& rhd) {
    if (lhd.size() != n * n * n || rhd.size() != n * n * n) throw InputError("is_pre_novikov_int: table size");
    std::vector<std::int64_t> circ(lhd.size());
    for (std::size_t i = 0; i < circ.size(); ++i) circ[i] = lhd[i] + rhd[i];
    bool ok = true;
    detail::eval_pre_novikov(detail::Table<std::int64_t>{n, lhd.data()}, detail::Table<std::int64_t>{n, rhd.data()},
                             detail::Table<std::int64_t>{n, circ.data()}, [&](int, auto, auto, auto, const auto&) {
                                 ok = false;
                                 return false;
                             });
    return ok;
}

bool is_novikov_int(std::size_t n, const std::vector<std::int64_t>& op) {
    if (op.size() != n * n * n) throw InputError("is_novikov_int: table size");
    bool ok = true;
    detail::eval_novikov(detail::Table<std::int64_t>{n, op.data()}, [&](int, auto, auto, auto, const auto&) {
        ok = false;
        return false;
    });
    return ok;
}

StructureConstants associated_novikov(const PreNovikovAlgebra& alg) {
    Report rep = check_pre_novikov(alg);
    if (!rep.passed()) throw Refused("associated_novikov: input is not a pre-Novikov algebra", rep);
    return alg.circ();
}

DerivedOps derived_ops(const PreNovikovAlgebra& alg) {
    const std::size_t n = alg.dim();
    StructureConstants circ = alg.circ();
    DerivedOps out{StructureConstants(n), StructureConstants(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                out.odot(i, j, k) = alg.rhd(i, j, k) + alg.lhd(j, i, k);
                out.star(i, j, k) = circ(i, j, k) + circ(j, i, k);
            }
    return out;
}

Scalar form_value(const FormMatrix& w, const Vec& x, const Vec& y) {
    detail::require_dim(w.rows(), x.size(), "form_value");
    detail::require_dim(w.cols(), y.size(), "form_value");
    Scalar s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j) s.add_product(x[i] * w(i, j), y[j]);
    }
    return s;
}

Report check_quasi_frobenius(const StructureConstants& op, const FormMatrix& w) {
    const std::size_t n = op.dim();
    if (!w.square()) throw InputError("check_quasi_frobenius: form matrix is not square");
    detail::require_dim(n, w.rows(), "check_quasi_frobenius");
    Report rep;
    rep.subject = "quasi_frobenius";
    rep.identities = {"quasi_frobenius.skew", "quasi_frobenius.nondegenerate", "quasi_frobenius.cocycle"};

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) record(rep, "quasi_frobenius.skew", {elem(i), elem(j)}, w(i, j) + w(j, i));

    Scalar det = determinant(w);
    if (det.is_zero()) rep.violations.push_back({"quasi_frobenius.nondegenerate", {}, {det}});

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec ab = op.product(i, j);
                Vec ac_ca = op.product(i, k) + op.product(k, i);
                Vec cb = op.product(k, j);
                Scalar res = form_value(w, ab, unit_vec(n, k)) - form_value(w, ac_ca, unit_vec(n, j)) +
                             form_value(w, cb, unit_vec(n, i));
                record(rep, "quasi_frobenius.cocycle", {elem(i), elem(j), elem(k)}, res);
            }
    return rep;
}

Matrix form_iso(const FormMatrix& w) {
    if (!w.square()) throw InputError("form_iso: form matrix is not square");
    // ω(T f, a) = (T f)ᵀ w a = fᵀ a for all a, so wᵀ T = id.
    auto inv = inverse(w.transpose());
    if (!inv) throw InputError("form_iso: the form is degenerate");
    return *inv;
}

PreNovikovAlgebra qf_structure_direct(const StructureConstants& op, const FormMatrix& w) {
    const std::size_t n = op.dim();
    detail::require_dim(n, w.rows(), "qf_structure_direct");
    auto winv_t = inverse(w.transpose());
    if (!winv_t) throw InputError("qf_structure_direct: the form is degenerate");
    PreNovikovAlgebra out = PreNovikovAlgebra::zero(n);
    // ω(u, e_c) = v_c for all c means wᵀ u = v.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec vr(n), vl(n);
            for (std::size_t c = 0; c < n; ++c) {
                vr[c] = form_value(w, op.product(a, c) + op.product(c, a), unit_vec(n, b));
                vl[c] = form_value(w, unit_vec(n, a), op.product(c, b));
            }
            Vec rhd = *winv_t * vr;
            Vec lhd = *winv_t * vl;
            for (std::size_t k = 0; k < n; ++k) {
                out.rhd(a, b, k) = rhd[k];
                out.lhd(a, b, k) = lhd[k];
            }
        }
    return out;
}

PreNovikovAlgebra qf_structure_dual(const StructureConstants& op, const FormMatrix& w) {
    const std::size_t n = op.dim();
    detail::require_dim(n, w.rows(), "qf_structure_dual");
    Matrix t = form_iso(w);
    Matrix t_inv = *inverse(t);
    PreNovikovAlgebra out = PreNovikovAlgebra::zero(n);
    for (std::size_t a = 0; a < n; ++a) {
        Matrix l_star = dual_map(mult_matrix(op, a, Side::left), DualMode::rep);
        Matrix r_star = dual_map(mult_matrix(op, a, Side::right), DualMode::rep);
        for (std::size_t b = 0; b < n; ++b) {
            // a▷b = T((L∘* + R∘*)(a) T⁻¹ b)
            Vec rhd = t * ((l_star + r_star) * (t_inv * unit_vec(n, b)));
            for (std::size_t k = 0; k < n; ++k) out.rhd(a, b, k) = rhd[k];
            // b◁a = T(−R∘*(a) T⁻¹ b)
            Vec lhd = t * (-r_star * (t_inv * unit_vec(n, b)));
            for (std::size_t k = 0; k < n; ++k) out.lhd(b, a, k) = lhd[k];
        }
    }
    return out;
}

PreNovikovAlgebra pre_novikov_from_qf(const StructureConstants& op, const FormMatrix& w) {
    Report rep = check_quasi_frobenius(op, w);
    Report nov = check_novikov(op);
    if (!nov.passed()) rep.children.push_back(nov);
    if (!rep.passed()) throw Refused("pre_novikov_from_qf: input is not a quasi-Frobenius Novikov algebra", rep);
    PreNovikovAlgebra direct = qf_structure_direct(op, w);
    PreNovikovAlgebra dual = qf_structure_dual(op, w);
    if (!(direct == dual)) throw InternalError("pre_novikov_from_qf: direct and dual constructions disagree");
    if (!(direct.circ() == op)) throw InternalError("pre_novikov_from_qf: ◁ + ▷ does not recover ∘");
    if (!check_pre_novikov(direct).passed()) throw InternalError("pre_novikov_from_qf: output is not pre-Novikov");
    return direct;
}

PreNovikovAlgebra change_basis(const PreNovikovAlgebra& alg, const Matrix& p) {
    return {change_basis(alg.lhd, p), change_basis(alg.rhd, p)};
}

}  // namespace prenov
