#include "prenov/representations.hpp"

#include "detail.hpp"

#include <string>

namespace prenov {

using detail::elem;
using detail::record;

namespace {

std::string mod(std::size_t i) { return detail::basis_name("v", i); }

void require_family(const RepMaps& maps, std::size_t n, std::size_t m, const char* what) {
    if (maps.size() != n) throw InputError(std::string(what) + ": expected one matrix per algebra basis element");
    for (const auto& x : maps)
        if (x.rows() != m || x.cols() != m) throw InputError(std::string(what) + ": action matrices must be square of module size");
}

// Adds one violation per module basis vector v with nonzero column v.
void record_columns(Report& rep, const std::string& id, std::size_t a, std::size_t b, const Matrix& residual) {
    for (std::size_t v = 0; v < residual.cols(); ++v) record(rep, id, {elem(a), elem(b), mod(v)}, residual.column(v));
}

RepMaps transpose_all(const RepMaps& maps, int sign) {
    RepMaps out;
    out.reserve(maps.size());
    for (const auto& m : maps) out.push_back(sign < 0 ? dual_map(m, DualMode::rep) : dual_map(m, DualMode::pairing));
    return out;
}

RepMaps sum(const RepMaps& a, const RepMaps& b) {
    RepMaps out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

RepMaps negate(RepMaps a) {
    for (auto& m : a) m *= Scalar(-1);
    return a;
}

RepMaps mult_family(const StructureConstants& op, Side side) {
    RepMaps out;
    for (std::size_t i = 0; i < op.dim(); ++i) out.push_back(mult_matrix(op, i, side));
    return out;
}

}  // namespace

Matrix act(const RepMaps& maps, const Vec& a) {
    if (maps.size() != a.size()) throw InputError("act: dimension mismatch");
    std::size_t m = maps.empty() ? 0 : maps.front().rows();
    return detail::combine(maps, a, m, m);
}

NovikovRep NovikovRep::zero(std::size_t n, std::size_t m) { return {RepMaps(n, Matrix(m, m)), RepMaps(n, Matrix(m, m))}; }

PreNovikovRep PreNovikovRep::zero(std::size_t n, std::size_t m) {
    RepMaps z(n, Matrix(m, m));
    return {z, z, z, z};
}

Report check_novikov_rep(const StructureConstants& op, const NovikovRep& rep) {
    const std::size_t n = op.dim(), m = rep.module_dim();
    require_family(rep.l, n, m, "check_novikov_rep");
    require_family(rep.r, n, m, "check_novikov_rep");
    Report out;
    out.subject = "novikov_rep";
    out.identities = {"novikov_rep.l_commutator", "novikov_rep.l_r", "novikov_rep.l_product", "novikov_rep.r_commute"};
    const auto& l = rep.l;
    const auto& r = rep.r;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec ab = op.product(a, b), ba = op.product(b, a);
            // l(a∘b − b∘a) = l(a)l(b) − l(b)l(a)
            record_columns(out, "novikov_rep.l_commutator", a, b, act(l, ab - ba) - (l[a] * l[b] - l[b] * l[a]));
            // l(a)r(b) − r(b)l(a) = r(a∘b) − r(b)r(a)
            record_columns(out, "novikov_rep.l_r", a, b, (l[a] * r[b] - r[b] * l[a]) - (act(r, ab) - r[b] * r[a]));
            // l(a∘b) = r(b)l(a)
            record_columns(out, "novikov_rep.l_product", a, b, act(l, ab) - r[b] * l[a]);
            // r(a)r(b) = r(b)r(a)
            record_columns(out, "novikov_rep.r_commute", a, b, r[a] * r[b] - r[b] * r[a]);
        }
    detail::group_by_identity(out);
    return out;
}

Report check_pre_novikov_rep(const PreNovikovAlgebra& alg, const PreNovikovRep& rep) {
    const std::size_t n = alg.dim(), m = rep.module_dim();
    require_family(rep.l_rhd, n, m, "check_pre_novikov_rep");
    require_family(rep.r_rhd, n, m, "check_pre_novikov_rep");
    require_family(rep.l_lhd, n, m, "check_pre_novikov_rep");
    require_family(rep.r_lhd, n, m, "check_pre_novikov_rep");
    Report out;
    out.subject = "pre_novikov_rep";
    for (int k = 1; k <= 10; ++k) out.identities.push_back("pre_novikov_rep.r" + std::to_string(k));
    const auto& lr = rep.l_rhd;
    const auto& rr = rep.r_rhd;
    const auto& ll = rep.l_lhd;
    const auto& rl = rep.r_lhd;
    StructureConstants circ = alg.circ();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec a_circ_b = circ.product(a, b), b_circ_a = circ.product(b, a);
            Vec a_rhd_b = alg.rhd.product(a, b), a_lhd_b = alg.lhd.product(a, b), b_lhd_a = alg.lhd.product(b, a);
            // l▷(a)l▷(b) − l▷(b)l▷(a) = l▷(a∘b − b∘a)
            record_columns(out, "pre_novikov_rep.r1", a, b,
                           lr[a] * lr[b] - lr[b] * lr[a] - act(lr, a_circ_b - b_circ_a));
            // l▷(a)l◁(b) − l◁(b)l▷(a) = l◁(a▷b − b◁a) + l◁(b)l◁(a)
            record_columns(out, "pre_novikov_rep.r2", a, b,
                           lr[a] * ll[b] - ll[b] * lr[a] - (act(ll, a_rhd_b - b_lhd_a) + ll[b] * ll[a]));
            // r▷(a▷b) = r▷(b)(r▷+r◁)(a) + l▷(a)r▷(b) − r▷(b)(l◁+l▷)(a)
            record_columns(out, "pre_novikov_rep.r3", a, b,
                           act(rr, a_rhd_b) - (rr[b] * (rr[a] + rl[a]) + lr[a] * rr[b] - rr[b] * (ll[a] + lr[a])));
            // r▷(a◁b) = r◁(b)r▷(a) + l◁(a)(r▷+r◁)(b) − r◁(b)l◁(a)
            record_columns(out, "pre_novikov_rep.r4", a, b,
                           act(rr, a_lhd_b) - (rl[b] * rr[a] + ll[a] * (rr[b] + rl[b]) - rl[b] * ll[a]));
            // l▷(a)r◁(b) − r◁(b)l▷(a) = r◁(a∘b) − r◁(b)r◁(a)
            record_columns(out, "pre_novikov_rep.r5", a, b,
                           lr[a] * rl[b] - rl[b] * lr[a] - (act(rl, a_circ_b) - rl[b] * rl[a]));
            // r▷(a)(r▷+r◁)(b) = r◁(b)r▷(a)
            record_columns(out, "pre_novikov_rep.r6", a, b, rr[a] * (rr[b] + rl[b]) - rl[b] * rr[a]);
            // l◁(a▷b) = r▷(b)(l▷+l◁)(a)
            record_columns(out, "pre_novikov_rep.r7", a, b, act(ll, a_rhd_b) - rr[b] * (lr[a] + ll[a]));
            // l▷(a∘b) = r◁(b)l▷(a)
            record_columns(out, "pre_novikov_rep.r8", a, b, act(lr, a_circ_b) - rl[b] * lr[a]);
            // r◁(a)r◁(b) = r◁(b)r◁(a)
            record_columns(out, "pre_novikov_rep.r9", a, b, rl[a] * rl[b] - rl[b] * rl[a]);
            // l◁(a◁b) = r◁(b)l◁(a)
            record_columns(out, "pre_novikov_rep.r10", a, b, act(ll, a_lhd_b) - rl[b] * ll[a]);
        }
    detail::group_by_identity(out);
    return out;
}

NovikovRep dual_novikov_rep_unchecked(const NovikovRep& rep) {
    // l* and r* are negated transposes.
    RepMaps l_star = transpose_all(rep.l, -1);
    RepMaps r_star = transpose_all(rep.r, -1);
    return {sum(l_star, r_star), negate(r_star)};
}

NovikovRep dual_novikov_rep(const StructureConstants& op, const NovikovRep& rep) {
    Report r = check_novikov_rep(op, rep);
    if (!r.passed()) throw Refused("dual_novikov_rep: input is not a representation", r);
    return dual_novikov_rep_unchecked(rep);
}

PreNovikovRep dual_pre_novikov_rep_unchecked(const PreNovikovRep& rep) {
    RepMaps lr = transpose_all(rep.l_rhd, -1);
    RepMaps rr = transpose_all(rep.r_rhd, -1);
    RepMaps ll = transpose_all(rep.l_lhd, -1);
    RepMaps rl = transpose_all(rep.r_lhd, -1);
    return {sum(sum(lr, ll), sum(rr, rl)), rr, negate(sum(rr, ll)), negate(sum(rr, rl))};
}

PreNovikovRep dual_pre_novikov_rep(const PreNovikovAlgebra& alg, const PreNovikovRep& rep) {
    Report r = check_pre_novikov_rep(alg, rep);
    if (!r.passed()) throw Refused("dual_pre_novikov_rep: input is not a representation", r);
    return dual_pre_novikov_rep_unchecked(rep);
}

NovikovRep adjoint_novikov_rep(const StructureConstants& op) {
    return {mult_family(op, Side::left), mult_family(op, Side::right)};
}

AdjointReps adjoint_reps(const PreNovikovAlgebra& alg) {
    AdjointReps out;
    out.novikov = {mult_family(alg.rhd, Side::left), mult_family(alg.lhd, Side::right)};
    out.pre_novikov = {mult_family(alg.rhd, Side::left), mult_family(alg.rhd, Side::right),
                       mult_family(alg.lhd, Side::left), mult_family(alg.lhd, Side::right)};
    return out;
}

PreNovikovAlgebra semidirect_pre_novikov_unchecked(const PreNovikovAlgebra& alg, const PreNovikovRep& rep) {
    const std::size_t n = alg.dim(), m = rep.module_dim();
    require_family(rep.l_rhd, n, m, "semidirect_pre_novikov");
    require_family(rep.r_rhd, n, m, "semidirect_pre_novikov");
    require_family(rep.l_lhd, n, m, "semidirect_pre_novikov");
    require_family(rep.r_lhd, n, m, "semidirect_pre_novikov");
    const std::size_t d = n + m;
    auto build = [&](const StructureConstants& op, const RepMaps& l, const RepMaps& r) {
        StructureConstants out(d);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) out(i, j, k) = op(i, j, k);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t q = 0; q < m; ++q)
                for (std::size_t p = 0; p < m; ++p) {
                    out(a, n + q, n + p) = l[a](p, q);  // a · v_q = l(a) v_q
                    out(n + q, a, n + p) = r[a](p, q);  // v_q · a = r(a) v_q
                }
        return out;
    };
    return {build(alg.lhd, rep.l_lhd, rep.r_lhd), build(alg.rhd, rep.l_rhd, rep.r_rhd)};
}

PreNovikovAlgebra semidirect_pre_novikov(const PreNovikovAlgebra& alg, const PreNovikovRep& rep) {
    Report r = check_pre_novikov_rep(alg, rep);
    if (!r.passed()) throw Refused("semidirect_pre_novikov: input is not a representation", r);
    return semidirect_pre_novikov_unchecked(alg, rep);
}

}  // namespace prenov
