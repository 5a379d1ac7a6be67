#include "json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace prenov {

namespace {

using io::json;

struct Output {
    Report report;
    std::optional<Bundle> bundle;
    json extra = json::object();
    std::vector<std::string> notes;  // text-format only lines
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Bundle load(const std::string& path) {
    try {
        return parse_bundle(read_file(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Bundle wrap(BundleValue v) { return Bundle{std::move(v), {}}; }

Bundle collection(std::vector<std::pair<std::string, Bundle>> items) {
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return wrap(Collection{std::move(items)});
}

PreNovikovAlgebra pre_novikov_of(const Bundle& b) {
    if (const auto* a = std::get_if<PreNovikovAlgebra>(&b.value)) return *a;
    if (const auto* bi = std::get_if<PreNovikovBialgebra>(&b.value)) return bi->algebra;
    throw InputError("expected a pre_novikov bundle, got \"" + b.kind() + "\"");
}

StructureConstants novikov_op_of(const Bundle& b) {
    if (const auto* t = std::get_if<NovikovTable>(&b.value)) return t->op;
    if (const auto* d = std::get_if<DoubleConstruction>(&b.value)) return d->algebra;
    return pre_novikov_of(b).circ();
}

Report with_subject(Report r, std::string s) {
    r.subject = std::move(s);
    return r;
}

Report summary(std::string subject, std::vector<Report> children) {
    Report r;
    r.subject = std::move(subject);
    r.children = std::move(children);
    return r;
}

Report check_rep(const AnyRep& rep, const Bundle& alg) {
    if (const auto* nr = std::get_if<NovikovRep>(&rep)) return check_novikov_rep(novikov_op_of(alg), *nr);
    return check_pre_novikov_rep(pre_novikov_of(alg), std::get<PreNovikovRep>(rep));
}

Report check_o(const OOperatorBundle& o) {
    if (const auto* t = std::get_if<NovikovTable>(&o.algebra))
        return check_o_operator_novikov(t->op, std::get<NovikovRep>(o.rep), o.map);
    return check_o_operator_pre_novikov(std::get<PreNovikovAlgebra>(o.algebra), std::get<PreNovikovRep>(o.rep), o.map);
}

Report ybe_report(const PreNovikovAlgebra& alg, const Tensor2& r) {
    Report rep;
    rep.subject = "ybe";
    rep.identities = {"ybe"};
    Tensor3 res = ybe_residual(alg, r);
    if (!res.is_zero()) rep.violations.push_back({"ybe", {}, res.data()});
    return rep;
}

const Bundle& need(const std::optional<Bundle>& b, const char* what) {
    if (!b) throw InputError(std::string("this bundle kind needs --algebra (") + what + ")");
    return *b;
}

Output cmd_check(const Bundle& b, const std::optional<Bundle>& alg) {
    Output o;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, NovikovTable>) o.report = check_novikov(v.op);
            else if constexpr (std::is_same_v<T, PreNovikovAlgebra>) o.report = check_pre_novikov(v);
            else if constexpr (std::is_same_v<T, PreNovikovCoalgebra>) o.report = check_coalgebra(v);
            else if constexpr (std::is_same_v<T, PreNovikovBialgebra>) o.report = check_bialgebra(v);
            else if constexpr (std::is_same_v<T, AnyRep>) o.report = check_rep(v, need(alg, "the acted-on algebra"));
            else if constexpr (std::is_same_v<T, FormBundle>)
                o.report = check_quasi_frobenius(novikov_op_of(need(alg, "the Novikov algebra")), v.w);
            else if constexpr (std::is_same_v<T, Tensor2>) {
                const PreNovikovAlgebra a = pre_novikov_of(need(alg, "the pre-Novikov algebra"));
                o.report = ybe_report(a, v);
            } else if constexpr (std::is_same_v<T, OOperatorBundle>) o.report = check_o(v);
            else if constexpr (std::is_same_v<T, DoubleConstruction>) {
                const std::size_t n = v.split_dim;
                if (2 * n != v.algebra.dim()) throw InputError("double: split_dim must be half of dim");
                const PreNovikovAlgebra a = block(v.structure, 0, n);
                const PreNovikovCoalgebra co = coalgebra_from_dual_algebra(block(v.structure, n, n));
                Report stored = summary("double.stored", {with_subject(check_novikov(v.algebra), "double.stored.product"),
                                                          check_quasi_frobenius(v.algebra, v.form)});
                stored.identities = {"double.stored.matches"};
                if (!(v.algebra == direct_sum_algebra_unchecked(induced_matched_pair(a, co))))
                    stored.violations.push_back({"double.stored.matches", {"product"}, {Scalar(1)}});
                if (!(v.form == standard_form(n)))
                    stored.violations.push_back({"double.stored.matches", {"form"}, {Scalar(1)}});
                o.report = summary("double", {check_double_construction(a, co), stored});
            } else throw InputError("nothing to check in a \"" + b.kind() + "\" bundle");
        },
        b.value);
    return o;
}

Output cmd_derive(const Bundle& b, const std::optional<Bundle>& alg) {
    Output o;
    o.report.subject = "derive";
    std::vector<std::pair<std::string, Bundle>> items;
    if (const auto* a = std::get_if<PreNovikovAlgebra>(&b.value)) {
        o.report = with_subject(check_pre_novikov(*a), "derive");
        if (!o.report.passed()) return o;
        const DerivedOps d = derived_ops(*a);
        const AdjointReps adj = adjoint_reps(*a);
        items = {{"associated", wrap(NovikovTable{associated_novikov(*a)})},
                 {"odot", wrap(Table{d.odot})},
                 {"star", wrap(Table{d.star})},
                 {"adjoint", wrap(AnyRep{adj.pre_novikov})},
                 {"adjoint_novikov", wrap(AnyRep{adj.novikov})},
                 {"dual_adjoint", wrap(AnyRep{dual_pre_novikov_rep(*a, adj.pre_novikov)})},
                 {"dual_adjoint_novikov", wrap(AnyRep{dual_novikov_rep(a->circ(), adj.novikov)})}};
    } else if (const auto* t = std::get_if<NovikovTable>(&b.value)) {
        o.report = with_subject(check_novikov(t->op), "derive");
        if (!o.report.passed()) return o;
        const NovikovRep adj = adjoint_novikov_rep(t->op);
        items = {{"adjoint", wrap(AnyRep{adj})}, {"dual_adjoint", wrap(AnyRep{dual_novikov_rep(t->op, adj)})}};
    } else if (const auto* r = std::get_if<AnyRep>(&b.value)) {
        const Bundle& a = need(alg, "the acted-on algebra");
        o.report = with_subject(check_rep(*r, a), "derive");
        if (!o.report.passed()) return o;
        if (const auto* nr = std::get_if<NovikovRep>(r)) items = {{"dual", wrap(AnyRep{dual_novikov_rep(novikov_op_of(a), *nr)})}};
        else items = {{"dual", wrap(AnyRep{dual_pre_novikov_rep(pre_novikov_of(a), std::get<PreNovikovRep>(*r))})}};
    } else if (const auto* c = std::get_if<PreNovikovCoalgebra>(&b.value)) {
        o.report = with_subject(check_coalgebra(*c), "derive");
        items = {{"dual_algebra", wrap(coalgebra_to_dual_algebra(*c))}};
    } else if (const auto* f = std::get_if<FormBundle>(&b.value)) {
        const StructureConstants op = novikov_op_of(need(alg, "the Novikov algebra"));
        o.report = with_subject(check_quasi_frobenius(op, f->w), "derive");
        if (!o.report.passed()) return o;
        items = {{"compatible", wrap(pre_novikov_from_qf(op, f->w))}};
    } else {
        throw InputError("nothing to derive from a \"" + b.kind() + "\" bundle");
    }
    o.bundle = collection(std::move(items));
    return o;
}

Output cmd_double(const Bundle& b) {
    Output o;
    PreNovikovBialgebra bi;
    if (const auto* p = std::get_if<PreNovikovBialgebra>(&b.value)) bi = *p;
    else throw InputError("double expects a bialgebra bundle, got \"" + b.kind() + "\"");
    DoubleConstruction d = double_from_bialgebra(bi);
    o.report = summary("double", {check_double_construction(bi.algebra, bi.coalgebra),
                                  check_quasi_frobenius(d.algebra, d.form)});
    o.bundle = wrap(std::move(d));
    return o;
}

Output cmd_coboundary(const Bundle& alg, const Bundle& r) {
    Output o;
    CoboundaryBialgebra cb = bialgebra_from_r(pre_novikov_of(alg), r.as<Tensor2>());
    o.report = with_subject(cb.report, "coboundary");
    o.bundle = wrap(cb.bialgebra);
    return o;
}

Output cmd_ybe(const Bundle& alg, const Bundle& rb) {
    Output o;
    const PreNovikovAlgebra a = pre_novikov_of(alg);
    const Tensor2& r = rb.as<Tensor2>();
    o.report = ybe_report(a, r);
    o.bundle = wrap(ybe_residual(a, r));
    if (r.is_symmetric()) {
        Co2Verdicts v = co2_equivalence(a, r);
        if (!v.agree()) throw InternalError("ybe: the three equivalent verdicts disagree");
        o.extra["co2"] = {{"ybe", v.ybe}, {"novikov_o_operator", v.novikov_o_operator},
                          {"pre_novikov_o_operator", v.pre_novikov_o_operator}};
        auto tf = [](bool x) { return x ? "true" : "false"; };
        o.notes.push_back(std::string("co2: ybe=") + tf(v.ybe) + " novikov_o_operator=" + tf(v.novikov_o_operator) +
                          " pre_novikov_o_operator=" + tf(v.pre_novikov_o_operator));
    } else {
        o.extra["co2"] = nullptr;
        o.notes.push_back("co2: skipped, r is not symmetric");
    }
    o.notes.push_back(o.report.passed() ? "residual: zero tensor" : "residual: nonzero");
    return o;
}

Output cmd_oper(const Bundle& alg, const Bundle& repb, const Bundle& mapb, bool lift) {
    Output o;
    const AnyRep& rep = repb.as<AnyRep>();
    const Matrix& t = mapb.as<LinMap>().m;
    OOperatorBundle ob;
    ob.rep = rep;
    ob.map = t;
    if (std::holds_alternative<NovikovRep>(rep)) {
        if (lift) throw InputError("--lift needs a pre_novikov rep");
        ob.algebra = NovikovTable{novikov_op_of(alg)};
    } else {
        ob.algebra = pre_novikov_of(alg);
    }
    Report check_r = check_rep(rep, alg);
    if (!check_r.passed()) throw Refused("oper: not a representation", check_r);
    o.report = check_o(ob);
    if (lift) {
        OperatorLift l = lift_o_operator(std::get<PreNovikovAlgebra>(ob.algebra), std::get<PreNovikovRep>(rep), t);
        o.report = summary("oper", {o.report, ybe_report(l.semidirect, l.r)});
        o.bundle = collection({{"semidirect", wrap(l.semidirect)}, {"r", wrap(l.r)}});
    } else if (o.report.passed() && std::holds_alternative<NovikovRep>(rep)) {
        o.bundle = wrap(pre_novikov_from_o(std::get<NovikovTable>(ob.algebra).op, std::get<NovikovRep>(rep), t));
    } else {
        o.bundle = wrap(std::move(ob));
    }
    return o;
}

std::vector<Scalar> parse_values(const std::string& text) {
    std::vector<Scalar> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        try {
            out.push_back(Scalar::parse(tok));
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string("--values: ") + e.what());
        }
    }
    if (out.empty()) throw InputError("--values: empty value set");
    return out;
}

Output cmd_search(const Bundle& alg, const std::string& values, const SearchOptions& opts) {
    Output o;
    const PreNovikovAlgebra a = pre_novikov_of(alg);
    auto sols = search_symmetric_ybe(a, parse_values(values), opts);
    o.report.subject = "search";
    o.notes.push_back("solutions: " + std::to_string(sols.size()));
    o.extra["solutions"] = sols.size();
    o.bundle = wrap(Tensor2List{a.dim(), a.dim(), std::move(sols)});
    return o;
}

Output cmd_diag(const Bundle& alg, const Bundle& rb) {
    Output o;
    CoboundaryDiagnostics d = coboundary_diagnostics(pre_novikov_of(alg), rb.as<Tensor2>());
    o.report = summary("diag", {d.conditions, d.coalgebra_conditions});
    std::vector<std::pair<std::string, Bundle>> items;
    for (const auto& t : d.rs) items.emplace_back(t.name, wrap(t.value));
    o.bundle = collection(std::move(items));
    return o;
}

std::string render(const Output& o, ReportFormat fmt, bool bundle_inline) {
    if (fmt == ReportFormat::machine) {
        json j = json::object();
        j["report"] = io::report_json(o.report);
        j["extra"] = o.extra;
        j["output"] = o.bundle && bundle_inline ? io::bundle_json(*o.bundle) : json(nullptr);
        return io::write_canonical(j);
    }
    std::string s = render_report(o.report, fmt);
    for (const auto& n : o.notes) s += n + "\n";
    if (o.bundle && bundle_inline) s += serialize_bundle(*o.bundle);
    return s;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv) {
    CommandResult res;
    std::ostringstream out, err;

    CLI::App app{"Exact-rational workbench for Novikov and pre-Novikov algebras", argv.empty() ? "prenov" : argv[0]};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text", out_path;
    app.add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--out", out_path, "write the produced bundle here instead of stdout");

    std::string f1, f2, f3, algebra_path, values = "-1,0,1";
    bool lift = false;
    SearchOptions sopts;

    auto* check = app.add_subcommand("check", "verify a bundle, dispatching on its kind");
    check->add_option("bundle", f1)->required();
    check->add_option("--algebra", algebra_path, "algebra for rep, form and tensor2 bundles");
    auto* derive = app.add_subcommand("derive", "associated and derived products, adjoint and dual reps");
    derive->add_option("bundle", f1)->required();
    derive->add_option("--algebra", algebra_path);
    auto* dbl = app.add_subcommand("double", "bialgebra -> double construction");
    dbl->add_option("bialgebra", f1)->required();
    auto* cob = app.add_subcommand("coboundary", "algebra + symmetric solution r -> coboundary bialgebra");
    cob->add_option("algebra", f1)->required();
    cob->add_option("r", f2)->required();
    auto* ybe = app.add_subcommand("ybe", "Yang-Baxter residual and the operator-form verdicts");
    ybe->add_option("algebra", f1)->required();
    ybe->add_option("r", f2)->required();
    auto* oper = app.add_subcommand("oper", "O-operator check, optionally lifted to a solution");
    oper->add_option("algebra", f1)->required();
    oper->add_option("rep", f2)->required();
    oper->add_option("map", f3)->required();
    oper->add_flag("--lift", lift, "build the semidirect product and r");
    auto* search = app.add_subcommand("search", "all symmetric solutions with entries in a value set");
    search->add_option("algebra", f1)->required();
    search->add_option("--values", values, "comma separated rationals")->capture_default_str();
    search->add_option("--budget", sopts.budget)->capture_default_str();
    search->add_option("--workers", sopts.workers, "0 reads PRENOV_WORKERS");
    auto* diag = app.add_subcommand("diag", "coboundary diagnostics for any r");
    diag->add_option("algebra", f1)->required();
    diag->add_option("r", f2)->required();

    std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        res.exit_code = code == 0 ? exit_pass : exit_input;
        res.out = out.str();
        res.err = err.str();
        return res;
    }

    const ReportFormat fmt = format == "machine" ? ReportFormat::machine : ReportFormat::text;
    try {
        std::optional<Bundle> algebra;
        if (!algebra_path.empty()) algebra = load(algebra_path);
        Output o;
        if (check->parsed()) o = cmd_check(load(f1), algebra);
        else if (derive->parsed()) o = cmd_derive(load(f1), algebra);
        else if (dbl->parsed()) o = cmd_double(load(f1));
        else if (cob->parsed()) o = cmd_coboundary(load(f1), load(f2));
        else if (ybe->parsed()) o = cmd_ybe(load(f1), load(f2));
        else if (oper->parsed()) o = cmd_oper(load(f1), load(f2), load(f3), lift);
        else if (search->parsed()) o = cmd_search(load(f1), values, sopts);
        else if (diag->parsed()) o = cmd_diag(load(f1), load(f2));

        if (o.bundle && !out_path.empty()) {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw InputError(out_path + ": cannot write");
            f << serialize_bundle(*o.bundle);
        }
        out << render(o, fmt, out_path.empty());
        res.exit_code = o.report.passed() ? exit_pass : exit_fail;
    } catch (const Refused& e) {
        err << "refused: " << e.what() << "\n";
        Output o;
        o.report = e.report();
        out << render(o, fmt, false);
        res.exit_code = exit_fail;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        res.exit_code = exit_internal;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        res.exit_code = exit_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        res.exit_code = exit_input;
    }
    res.out = out.str();
    res.err = err.str();
    return res;
}

}  // namespace prenov
