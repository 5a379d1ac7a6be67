#include "prenov/yang_baxter.hpp"

#include "detail.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <thread>

namespace prenov {

using detail::elem;
using detail::record;

namespace {

std::string mod(std::size_t i) { return detail::basis_name("v", i); }

void require_square(const PreNovikovAlgebra& alg, const Tensor2& r, const char* what) {
    if (r.rows() != alg.dim() || r.cols() != alg.dim())
        throw InputError(std::string(what) + ": tensor is not in A⊗A for this algebra");
}

Tensor3 placed(const Tensor2& r, const StructureConstants& op, int p, int q, int s, int t) {
    return placed_product(r, r, op, {{p, q}, {s, t}});
}

Matrix L(const StructureConstants& op, const Vec& a) { return mult_matrix(op, a, Side::left); }
Matrix R(const StructureConstants& op, const Vec& a) { return mult_matrix(op, a, Side::right); }

Report symmetry_report(const Tensor2& r) {
    Report rep;
    rep.subject = "ybe.precondition";
    rep.identities = {"ybe.symmetric"};
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = i + 1; j < r.cols(); ++j)
            record(rep, "ybe.symmetric", {elem(i), elem(j)}, r(i, j) - r(j, i));
    return rep;
}

bool nonzero(const Scalar& x) { return !x.is_zero(); }
bool nonzero(std::int64_t x) { return x != 0; }

// Coefficient of e_p⊗e_q⊗e_s in the YBE left-hand side:
//   Σ r(i,q) r(j,s) ∘(i,j,p) + Σ r(q,i) r(p,j) ⊙(i,j,s) − Σ r(p,i) r(j,s) ◁(i,j,q).
// Written once for Scalar and for the scaled int64 search path.
template <class T>
struct YbeTables {
    std::size_t n;
    std::vector<T> circ, odot, lhd;
    const T& at(const std::vector<T>& v, std::size_t i, std::size_t j, std::size_t k) const { return v[(i * n + j) * n + k]; }
};

template <class T>
bool ybe_zero(const YbeTables<T>& tb, const std::vector<T>& r) {
    const std::size_t n = tb.n;
    auto rr = [&](std::size_t i, std::size_t j) -> const T& { return r[i * n + j]; };
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t s = 0; s < n; ++s) {
                T acc(0);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        if (nonzero(rr(i, q)) && nonzero(rr(j, s)))
                            acc += rr(i, q) * rr(j, s) * tb.at(tb.circ, i, j, p);
                        if (nonzero(rr(q, i)) && nonzero(rr(p, j)))
                            acc += rr(q, i) * rr(p, j) * tb.at(tb.odot, i, j, s);
                        if (nonzero(rr(p, i)) && nonzero(rr(j, s)))
                            acc -= rr(p, i) * rr(j, s) * tb.at(tb.lhd, i, j, q);
                    }
                if (nonzero(acc)) return false;
            }
    return true;
}

YbeTables<Scalar> scalar_tables(const PreNovikovAlgebra& alg) {
    DerivedOps d = derived_ops(alg);
    return {alg.dim(), alg.circ().data(), d.odot.data(), alg.lhd.data()};
}

std::vector<Scalar> flat(const Tensor2& r) {
    std::vector<Scalar> out;
    out.reserve(r.rows() * r.cols());
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) out.push_back(r(i, j));
    return out;
}

mpz_class lcm_of_denominators(const std::vector<Scalar>& xs) {
    mpz_class l = 1;
    for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
    return l;
}

mpz_class max_abs(const std::vector<mpz_class>& xs) {
    mpz_class m = 0;
    for (const auto& x : xs)
        if (abs(x) > m) m = abs(x);
    return m;
}

std::vector<mpz_class> scaled(const std::vector<Scalar>& xs, const mpz_class& d) {
    std::vector<mpz_class> out;
    out.reserve(xs.size());
    for (const auto& x : xs) {
        mpq_class v = x.raw() * d;
        out.push_back(v.get_num());
    }
    return out;
}

std::vector<std::int64_t> to_int64(const std::vector<mpz_class>& xs) {
    std::vector<std::int64_t> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(x.get_si());
    return out;
}

unsigned worker_count(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PRENOV_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

}  // namespace

Tensor3 ybe_residual(const PreNovikovAlgebra& alg, const Tensor2& r) {
    require_square(alg, r, "ybe_residual");
    const StructureConstants circ = alg.circ();
    const StructureConstants odot = derived_ops(alg).odot;
    return placed(r, circ, 1, 2, 1, 3) + placed(r, odot, 2, 3, 1, 3) - placed(r, alg.lhd, 1, 2, 2, 3);
}

bool ybe_holds(const PreNovikovAlgebra& alg, const Tensor2& r) {
    require_square(alg, r, "ybe_holds");
    return ybe_zero(scalar_tables(alg), flat(r));
}

PreNovikovCoalgebra coboundary_maps(const PreNovikovAlgebra& alg, const Tensor2& r) {
    require_square(alg, r, "coboundary_maps");
    const std::size_t n = alg.dim();
    const StructureConstants circ = alg.circ();
    const Tensor2 tr = flip(r);
    PreNovikovCoalgebra co = PreNovikovCoalgebra::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec a = unit_vec(n, i);
        TensorOp al = TensorOp::on_left(L(circ, a)) + TensorOp::on_right(L(alg.rhd, a) + R(alg.lhd, a));
        TensorOp be = TensorOp::on_left(L(alg.rhd, a)) + TensorOp::on_right(L(circ, a) + R(circ, a));
        co.alpha[i] = al(tr);
        co.beta[i] = -be(r);
    }
    return co;
}

CoboundaryBialgebra bialgebra_from_r(const PreNovikovAlgebra& alg, const Tensor2& r) {
    require_square(alg, r, "bialgebra_from_r");
    Report sym = symmetry_report(r);
    if (!sym.passed()) throw Refused("bialgebra_from_r: r is not symmetric", sym);
    Tensor3 res = ybe_residual(alg, r);
    if (!res.is_zero()) {
        Report rep;
        rep.subject = "ybe.precondition";
        rep.identities = {"ybe"};
        record(rep, "ybe", {}, res);
        throw Refused("bialgebra_from_r: r does not solve the Yang-Baxter equation", rep);
    }
    CoboundaryBialgebra out{{alg, coboundary_maps(alg, r)}, {}};
    out.report = check_bialgebra(out.bialgebra);
    if (!out.report.passed()) throw InternalError("bialgebra_from_r: coboundary bialgebra of a symmetric solution fails its check");
    return out;
}

const Tensor3& CoboundaryDiagnostics::r_tensor(const std::string& name) const {
    for (const auto& t : rs)
        if (t.name == name) return t.value;
    throw InputError("no diagnostic tensor named " + name);
}

CoboundaryDiagnostics coboundary_diagnostics(const PreNovikovAlgebra& alg, const Tensor2& r) {
    require_square(alg, r, "coboundary_diagnostics");
    const std::size_t n = alg.dim();
    const StructureConstants circ = alg.circ();
    const DerivedOps d = derived_ops(alg);
    const StructureConstants& lhd = alg.lhd;
    const StructureConstants& rhd = alg.rhd;
    const Tensor2 diff = flip(r) - r;
    const Scalar two(2);
    auto left = [](const Matrix& m) { return TensorOp::on_left(m); };
    auto right = [](const Matrix& m) { return TensorOp::on_right(m); };

    CoboundaryDiagnostics out;
    out.conditions.subject = "coboundary.conditions";
    out.conditions.identities = {"coboundary.cond1", "coboundary.cond2", "coboundary.cond3", "coboundary.cond4"};
    for (std::size_t ia = 0; ia < n; ++ia)
        for (std::size_t ib = 0; ib < n; ++ib) {
            const Vec a = unit_vec(n, ia), b = unit_vec(n, ib);
            const Vec x = rhd.product(ia, ib) + lhd.product(ib, ia);  // a▷b + b◁a
            const Vec y = lhd.product(ib, ia);                         // b◁a
            // L∘(·)⊗id + id⊗(L▷+R◁)(·): the operator defining α
            auto alpha_op = [&](const Vec& c) { return left(L(circ, c)) + right(L(rhd, c) + R(lhd, c)); };
            const std::vector<std::string> w{elem(ia), elem(ib)};

            TensorOp c1 = (left(L(rhd, a) + two * R(lhd, a)) + right(L(rhd, a) + R(lhd, a))) * alpha_op(b) -
                          left(L(lhd, b)) * alpha_op(a) - alpha_op(x);
            record(out.conditions, "coboundary.cond1", w, c1(diff));

            TensorOp c2 = right(R(lhd, a)) * alpha_op(b) +
                          left(R(lhd, a)) * (left(L(circ, b) + R(circ, b)) + right(L(rhd, b))) -
                          left(L(lhd, b)) * (right(R(lhd, a)) - left(R(circ, a))) -
                          (right(two * L(rhd, y) + R(lhd, y)) + left(two * L(circ, y) + R(circ, y)));
            record(out.conditions, "coboundary.cond2", w, c2(diff));

            TensorOp c3 = left(R(rhd, b) + L(lhd, b)) * alpha_op(a) -
                          right(L(rhd, a) + R(lhd, a)) * (right(L(rhd, b)) + left(L(circ, b) + R(circ, b))) -
                          left(L(rhd, a) + R(lhd, a)) * alpha_op(b);
            record(out.conditions, "coboundary.cond3", w, c3(diff));

            TensorOp c4 = left(R(lhd, a)) * alpha_op(b) - alpha_op(y);
            record(out.conditions, "coboundary.cond4", w, c4(diff));
        }
    detail::group_by_identity(out.conditions);

    const StructureConstants& o = d.odot;
    const StructureConstants& st = d.star;
    Tensor3 r11 = placed(r, circ, 2, 1, 3, 1) - placed(r, circ, 2, 1, 3, 2) - placed(r, o, 3, 1, 3, 2) +
                  placed(r, rhd, 2, 1, 2, 3) + placed(r, st, 3, 1, 2, 3);
    Tensor3 r12 = Tensor3(n) - placed(r, circ, 2, 1, 3, 1) - placed(r, o, 2, 3, 3, 1) + placed(r, lhd, 2, 1, 3, 2);
    Tensor3 r13 = placed(r, circ, 3, 1, 2, 1) + placed(r, o, 3, 2, 2, 1) + placed(r, rhd, 2, 3, 3, 1) -
                  placed(r, lhd, 3, 1, 2, 3) + placed(r, rhd, 3, 2, 2, 1) + placed(r, st, 3, 1, 2, 1);
    Tensor3 r21 = placed(r, rhd, 2, 1, 1, 3) + placed(r, rhd, 1, 2, 2, 3) + placed(r, st, 1, 3, 2, 3);
    Tensor3 r22 = placed(r, circ, 1, 3, 2, 1) + placed(r, o, 2, 3, 2, 1) - placed(r, rhd, 1, 3, 1, 2) -
                  placed(r, st, 2, 3, 1, 2) - placed(r, circ, 2, 3, 1, 2) - placed(r, o, 1, 3, 1, 2) +
                  placed(r, rhd, 2, 3, 2, 1) + placed(r, st, 1, 3, 2, 1) + placed(r, circ, 2, 3, 1, 3) -
                  placed(r, circ, 1, 3, 2, 3);
    Tensor3 r31 = Tensor3(n) - placed(r, circ, 1, 3, 2, 3) + placed(r, circ, 1, 3, 2, 1) + placed(r, o, 2, 3, 2, 1) -
                  placed(r, rhd, 1, 3, 1, 2) - placed(r, st, 2, 3, 1, 2);
    Tensor3 r41 = Tensor3(n) - placed(r, circ, 3, 1, 2, 1) - placed(r, o, 3, 2, 2, 1) + placed(r, lhd, 3, 1, 2, 3);
    out.rs = {{"R11", r11}, {"R12", r12}, {"R13", r13}, {"R21", r21}, {"R22", r22}, {"R31", r31}, {"R41", r41}};

    // r = Σ r(p,q) e_p⊗e_q, so x_j = r(p,q) e_p and y_j = e_q term by term.
    auto sum_over_terms = [&](auto&& term) {
        Tensor3 acc(n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                if (!r(p, q).is_zero()) acc += term(r(p, q) * unit_vec(n, p), unit_vec(n, q));
        return acc;
    };

    out.coalgebra_conditions.subject = "coboundary.coalgebra_conditions";
    out.coalgebra_conditions.identities = {"coboundary.coalg1", "coboundary.coalg2", "coboundary.coalg3",
                                           "coboundary.coalg4"};
    for (std::size_t ia = 0; ia < n; ++ia) {
        const Vec a = unit_vec(n, ia);
        const Matrix Lodot_a = L(o, a), Lstar_a = L(st, a), Lr_a = L(rhd, a);

        Tensor3 e1 = apply_on_leg(r11, L(circ, a), 0) + apply_on_leg(r12, Lr_a, 1) + apply_on_leg(r13, Lodot_a, 2) -
                     sum_over_terms([&](const Vec& x, const Vec& y) {
                         return apply_on_leg(Tensor3::outer(y, diff), L(rhd, apply_op(o, a, x)), 1);
                     }) -
                     sum_over_terms([&](const Vec& x, const Vec& y) {
                         return apply_on_leg(Tensor3::outer(y, diff), L(o, apply_op(o, a, x)), 2);
                     });
        record(out.coalgebra_conditions, "coboundary.coalg1", {elem(ia)}, e1);

        Tensor3 e2 = apply_on_leg(r21, Lr_a, 0) - apply_on_leg(r21, Lr_a, 1) + apply_on_leg(r22, Lstar_a, 2) +
                     sum_over_terms([&](const Vec& x, const Vec& y) {
                         const Vec c = apply_op(rhd, a, x);
                         const Matrix m = two * L(rhd, c) + R(lhd, c);
                         const Tensor3 t = Tensor3::outer(diff, y);
                         return apply_on_leg(t, m, 0) + apply_on_leg(t, m, 1);
                     });
        record(out.coalgebra_conditions, "coboundary.coalg2", {elem(ia)}, e2);

        Tensor3 e3 = Tensor3(n) - apply_on_leg(r21, Lodot_a, 1) + apply_on_leg(r31, Lstar_a, 2) +
                     sum_over_terms([&](const Vec& x, const Vec& y) {
                         const Vec c = apply_op(rhd, a, x);
                         const Tensor3 t = Tensor3::outer(diff, y);
                         return apply_on_leg(t, L(rhd, c), 0) + apply_on_leg(t, L(o, c), 1);
                     });
        record(out.coalgebra_conditions, "coboundary.coalg3", {elem(ia)}, e3);

        Tensor3 e4 = Tensor3(n) - apply_on_leg(r12, Lodot_a, 1) + apply_on_leg(r41, Lodot_a, 2);
        record(out.coalgebra_conditions, "coboundary.coalg4", {elem(ia)}, e4);
    }
    detail::group_by_identity(out.coalgebra_conditions);
    return out;
}

Matrix t_r_from_tensor(const Tensor2& r) { return r.coeffs(); }

Report check_o_operator_novikov(const StructureConstants& op, const NovikovRep& rep, const Matrix& t) {
    const std::size_t n = op.dim(), m = t.cols();
    detail::require_dim(t.rows(), n, "check_o_operator_novikov");
    detail::require_dim(rep.algebra_dim(), n, "check_o_operator_novikov");
    detail::require_dim(rep.module_dim(), m, "check_o_operator_novikov");
    Report out;
    out.subject = "o_operator.novikov";
    out.identities = {"o_operator.novikov"};
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) {
            const Vec tu = t.column(u), tv = t.column(v);
            // T(u)∘T(v) − T(l(T(u))v) − T(r(T(v))u)
            Vec res = apply_op(op, tu, tv) - t * act(rep.l, tu).column(v) - t * act(rep.r, tv).column(u);
            record(out, "o_operator.novikov", {mod(u), mod(v)}, res);
        }
    return out;
}

Report check_o_operator_pre_novikov(const PreNovikovAlgebra& alg, const PreNovikovRep& rep, const Matrix& t) {
    const std::size_t n = alg.dim(), m = t.cols();
    detail::require_dim(t.rows(), n, "check_o_operator_pre_novikov");
    detail::require_dim(rep.algebra_dim(), n, "check_o_operator_pre_novikov");
    detail::require_dim(rep.module_dim(), m, "check_o_operator_pre_novikov");
    Report out;
    out.subject = "o_operator.pre_novikov";
    out.identities = {"o_operator.rhd", "o_operator.lhd"};
    for (int id = 0; id < 2; ++id)
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t v = 0; v < m; ++v) {
                const Vec tu = t.column(u), tv = t.column(v);
                const auto& op = id == 0 ? alg.rhd : alg.lhd;
                const auto& l = id == 0 ? rep.l_rhd : rep.l_lhd;
                const auto& r = id == 0 ? rep.r_rhd : rep.r_lhd;
                Vec res = apply_op(op, tu, tv) - t * act(l, tu).column(v) - t * act(r, tv).column(u);
                record(out, out.identities[id], {mod(u), mod(v)}, res);
            }
    return out;
}

PreNovikovAlgebra pre_novikov_from_o(const StructureConstants& op, const NovikovRep& rep, const Matrix& t) {
    Report chk = check_o_operator_novikov(op, rep, t);
    if (!chk.passed()) throw Refused("pre_novikov_from_o: T is not an O-operator", chk);
    const std::size_t m = t.cols();
    PreNovikovAlgebra out = PreNovikovAlgebra::zero(m);
    for (std::size_t u = 0; u < m; ++u) {
        const Matrix lu = act(rep.l, t.column(u));
        const Matrix ru = act(rep.r, t.column(u));
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t k = 0; k < m; ++k) {
                out.rhd(u, v, k) = lu(k, v);  // u▷v = l(T(u))v
                out.lhd(v, u, k) = ru(k, v);  // v◁u = r(T(u))v
            }
    }
    if (!check_pre_novikov(out).passed()) throw InternalError("pre_novikov_from_o: output is not pre-Novikov");
    return out;
}

Co2Verdicts co2_equivalence(const PreNovikovAlgebra& alg, const Tensor2& r) {
    require_square(alg, r, "co2_equivalence");
    Report sym = symmetry_report(r);
    if (!sym.passed()) throw Refused("co2_equivalence: r is not symmetric", sym);
    const Matrix t = t_r_from_tensor(r);
    const AdjointReps adj = adjoint_reps(alg);
    Co2Verdicts out;
    out.ybe = ybe_residual(alg, r).is_zero();
    out.novikov_o_operator = check_o_operator_novikov(alg.circ(), dual_novikov_rep_unchecked(adj.novikov), t).passed();
    out.pre_novikov_o_operator =
        check_o_operator_pre_novikov(alg, dual_pre_novikov_rep_unchecked(adj.pre_novikov), t).passed();
    return out;
}

OperatorLift lift_o_operator(const PreNovikovAlgebra& alg, const PreNovikovRep& rep, const Matrix& t) {
    const std::size_t n = alg.dim(), m = rep.module_dim();
    detail::require_dim(t.rows(), n, "lift_o_operator");
    detail::require_dim(t.cols(), m, "lift_o_operator");
    OperatorLift out;
    out.semidirect = semidirect_pre_novikov(alg, dual_pre_novikov_rep(alg, rep));
    Tensor2 rt(n + m, n + m);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < m; ++i) rt(a, n + i) = t(a, i);
    out.r = rt + flip(rt);
    out.ybe = ybe_residual(out.semidirect, out.r).is_zero();
    out.o_operator = check_o_operator_pre_novikov(alg, rep, t).passed();
    if (out.ybe != out.o_operator)
        throw InternalError("lift_o_operator: Yang-Baxter and O-operator verdicts disagree");
    return out;
}

std::size_t search_space_size(std::size_t n, std::size_t value_count) {
    const std::size_t slots = n * (n + 1) / 2;
    std::size_t total = 1;
    for (std::size_t i = 0; i < slots; ++i) {
        if (value_count != 0 && total > std::numeric_limits<std::size_t>::max() / value_count)
            return std::numeric_limits<std::size_t>::max();
        total *= value_count;
    }
    return total;
}

std::vector<Tensor2> search_symmetric_ybe(const PreNovikovAlgebra& alg, std::vector<Scalar> values,
                                          const SearchOptions& opts) {
    if (values.empty()) throw InputError("search_symmetric_ybe: empty value set");
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const std::size_t n = alg.dim(), k = values.size();
    const std::size_t total = search_space_size(n, k);
    if (total > opts.budget)
        throw InputError("search_symmetric_ybe: search space has " +
                         (total == std::numeric_limits<std::size_t>::max() ? std::string("too many")
                                                                           : std::to_string(total)) +
                         " candidates, budget is " + std::to_string(opts.budget));

    std::vector<std::pair<std::size_t, std::size_t>> slots;  // upper triangle, row-major
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) slots.emplace_back(i, j);

    // Exact integer path: scale values and tables by their denominators'
    // lcm. The residual is quadratic in r and linear in the tables, so the
    // zero set is unchanged. Used only when no int64 overflow is possible.
    const YbeTables<Scalar> st = scalar_tables(alg);
    std::vector<Scalar> all_tables = st.circ;
    all_tables.insert(all_tables.end(), st.odot.begin(), st.odot.end());
    all_tables.insert(all_tables.end(), st.lhd.begin(), st.lhd.end());
    const mpz_class dv = lcm_of_denominators(values), dc = lcm_of_denominators(all_tables);
    const std::vector<mpz_class> iv = scaled(values, dv);
    const std::vector<mpz_class> ic = scaled(all_tables, dc);
    const mpz_class bound = max_abs(iv) * max_abs(iv) * max_abs(ic) * mpz_class(3 * n * n + 1);
    const bool use_int = bound < mpz_class("4611686018427387904");  // 2^62

    YbeTables<std::int64_t> it;
    std::vector<std::int64_t> ivals;
    if (use_int) {
        const std::size_t cube = n * n * n;
        std::vector<std::int64_t> c = to_int64(ic);
        it = {n, {c.begin(), c.begin() + cube}, {c.begin() + cube, c.begin() + 2 * cube}, {c.begin() + 2 * cube, c.end()}};
        ivals = to_int64(iv);
    }

    auto digits = [&](std::size_t idx, std::vector<std::size_t>& d) {
        for (std::size_t s = slots.size(); s-- > 0;) {
            d[s] = idx % k;
            idx /= k;
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(worker_count(opts.workers), static_cast<unsigned>(std::max<std::size_t>(total, 1))));
    std::vector<std::vector<std::size_t>> found(workers);
    auto run = [&](unsigned w) {
        std::vector<std::size_t> d(slots.size());
        std::vector<std::int64_t> ri(n * n);
        std::vector<Scalar> rs(n * n);
        for (std::size_t idx = w; idx < total; idx += workers) {
            digits(idx, d);
            bool ok;
            if (use_int) {
                for (std::size_t s = 0; s < slots.size(); ++s) {
                    auto [i, j] = slots[s];
                    ri[i * n + j] = ri[j * n + i] = ivals[d[s]];
                }
                ok = ybe_zero(it, ri);
            } else {
                for (std::size_t s = 0; s < slots.size(); ++s) {
                    auto [i, j] = slots[s];
                    rs[i * n + j] = rs[j * n + i] = values[d[s]];
                }
                ok = ybe_zero(st, rs);
            }
            if (ok) found[w].push_back(idx);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }

    std::vector<std::size_t> hits;
    for (const auto& f : found) hits.insert(hits.end(), f.begin(), f.end());
    std::sort(hits.begin(), hits.end());

    std::vector<Tensor2> out;
    std::vector<std::size_t> d(slots.size());
    for (std::size_t idx : hits) {
        digits(idx, d);
        Tensor2 r(n, n);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            auto [i, j] = slots[s];
            r(i, j) = r(j, i) = values[d[s]];
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace prenov
