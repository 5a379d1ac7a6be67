#include "prenov/cli_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace prenov;

namespace {

// Scalars arrive as anything whose str() is "3" or "-1/2" (int, str, Fraction).
Scalar scalar(const py::handle& x) { return Scalar::parse(py::str(x).cast<std::string>()); }

Matrix matrix(const py::handle& rows) {
    const auto outer = rows.cast<py::sequence>();
    const std::size_t n = outer.size(), m = n ? outer[0].cast<py::sequence>().size() : 0;
    Matrix out(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = outer[i].cast<py::sequence>();
        if (row.size() != m) throw InputError("ragged matrix");
        for (std::size_t j = 0; j < m; ++j) out(i, j) = scalar(row[j]);
    }
    return out;
}

StructureConstants table(const py::handle& t) {
    const auto outer = t.cast<py::sequence>();
    const std::size_t n = outer.size();
    StructureConstants out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m = matrix(outer[i]);
        if (m.rows() != n || m.cols() != n) throw InputError("table must be n×n×n");
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out(i, j, k) = m(j, k);
    }
    return out;
}

PreNovikovAlgebra algebra(const py::handle& lhd, const py::handle& rhd) {
    PreNovikovAlgebra a{table(lhd), table(rhd)};
    if (a.lhd.dim() != a.rhd.dim()) throw InputError("◁ and ▷ tables differ in dimension");
    return a;
}

std::vector<Tensor2> tensors(const py::handle& maps) {
    std::vector<Tensor2> out;
    for (const auto& m : maps.cast<py::sequence>()) out.emplace_back(matrix(m));
    return out;
}

using Rows = std::vector<std::vector<std::string>>;

Rows rows(const Matrix& m) {
    Rows out(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).str();
    return out;
}

std::vector<Rows> rows(const std::vector<Tensor2>& ts) {
    std::vector<Rows> out;
    for (const auto& t : ts) out.push_back(rows(t.coeffs()));
    return out;
}

std::string machine(const Report& r) { return render_report(r, ReportFormat::machine); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact pre-Novikov algebra checks";
    static py::exception<Refused> refused(m, "Refused", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Refused& e) {
            py::set_error(refused, e.what());
        }
    });

    m.def("check_novikov", [](const py::object& op) { return machine(check_novikov(table(op))); });
    m.def("check_pre_novikov",
          [](const py::object& lhd, const py::object& rhd) { return machine(check_pre_novikov(algebra(lhd, rhd))); });
    m.def("check_bialgebra", [](const py::object& lhd, const py::object& rhd, const py::object& alpha,
                                const py::object& beta) {
        return machine(check_bialgebra(algebra(lhd, rhd), PreNovikovCoalgebra{tensors(alpha), tensors(beta)}));
    });
    m.def("ybe_residual", [](const py::object& lhd, const py::object& rhd, const py::object& r) {
        const Tensor3 t = ybe_residual(algebra(lhd, rhd), Tensor2(matrix(r)));
        std::vector<std::string> flat;
        for (const auto& x : t.data()) flat.push_back(x.str());
        return flat;
    });
    m.def("coboundary_maps", [](const py::object& lhd, const py::object& rhd, const py::object& r) {
        PreNovikovCoalgebra co = coboundary_maps(algebra(lhd, rhd), Tensor2(matrix(r)));
        return std::make_pair(rows(co.alpha), rows(co.beta));
    });
    m.def(
        "search_symmetric_ybe",
        [](const py::object& lhd, const py::object& rhd, const py::object& values, std::size_t budget,
           unsigned workers) {
            std::vector<Scalar> vals;
            for (const auto& v : values.cast<py::sequence>()) vals.push_back(scalar(v));
            const PreNovikovAlgebra a = algebra(lhd, rhd);
            std::vector<Tensor2> hits;
            {
                py::gil_scoped_release release;
                hits = search_symmetric_ybe(a, vals, {budget, workers});
            }
            return rows(hits);
        },
        py::arg("lhd"), py::arg("rhd"), py::arg("values"), py::arg("budget") = SearchOptions{}.budget,
        py::arg("workers") = 0u);
    m.def("equation_label", [](const std::string& id) { return equation_label(id); });
    m.def("canonicalize", [](const std::string& text) { return serialize_bundle(parse_bundle(text)); });
    m.def("bundle_kind", [](const std::string& text) { return parse_bundle(text).kind(); });
    m.def("run", [](std::vector<std::string> args) {
        args.insert(args.begin(), "prenov");
        CommandResult r = run_command(args);
        return py::make_tuple(r.exit_code, r.out, r.err);
    });
}
