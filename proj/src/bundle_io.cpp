#include "json_io.hpp"

#include <algorithm>
#include <sstream>

namespace prenov {

namespace io {

namespace {

constexpr std::size_t max_dim = 64;

bool is_scalar_array(const json& j) {
    return std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
}

void write(std::ostringstream& os, const json& j, int indent) {
    const std::string pad(indent, ' '), inner(indent + 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) os << ",\n";
            first = false;
            os << inner << json(it.key()).dump(-1, ' ', false) << ": ";
            write(os, it.value(), indent + 2);
        }
        os << "\n" << pad << "}";
    } else if (j.is_array()) {
        if (j.empty()) {
            os << "[]";
        } else if (is_scalar_array(j)) {
            os << "[";
            for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump(-1, ' ', false);
            os << "]";
        } else {
            os << "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << ",\n";
                os << inner;
                write(os, j[i], indent + 2);
            }
            os << "\n" << pad << "]";
        }
    } else {
        os << j.dump(-1, ' ', false);
    }
}

std::string line_col(std::string_view text, std::size_t byte) {
    // nlohmann reports the 1-based offset of the character after the error
    std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string escape_token(const std::string& key) {
    std::string out;
    for (char c : key) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

}  // namespace

std::string write_canonical(const json& j) {
    std::ostringstream os;
    write(os, j, 0);
    os << "\n";
    return os.str();
}

json read_strict(std::string_view text) {
    std::vector<std::set<std::string>> keys;
    std::string duplicate;
    json::parser_callback_t cb = [&](int, json::parse_event_t ev, json& parsed) {
        if (ev == json::parse_event_t::object_start) keys.emplace_back();
        else if (ev == json::parse_event_t::object_end) keys.pop_back();
        else if (ev == json::parse_event_t::key && duplicate.empty() && !keys.back().insert(parsed.get<std::string>()).second)
            duplicate = parsed.get<std::string>();
        return true;
    };
    json j;
    try {
        j = json::parse(text.begin(), text.end(), cb);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        auto pos = msg.find("syntax error");
        throw ParseError(line_col(text, e.byte), pos == std::string::npos ? msg : msg.substr(pos));
    }
    if (!duplicate.empty()) throw ParseError("document", "duplicate key \"" + duplicate + "\"");
    return j;
}

void Node::fail(const std::string& what) const { throw ParseError(ptr_.empty() ? "/" : ptr_, what); }

void Node::only(std::initializer_list<std::string_view> keys) const {
    if (!j_->is_object()) fail("expected an object");
    for (auto it = j_->begin(); it != j_->end(); ++it)
        if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
            Node(it.value(), ptr_ + "/" + escape_token(it.key())).fail("unknown field \"" + it.key() + "\"");
}

bool Node::has(const std::string& key) const { return j_->is_object() && j_->contains(key); }

Node Node::at(const std::string& key) const {
    if (!j_->is_object()) fail("expected an object");
    auto it = j_->find(key);
    if (it == j_->end()) fail("missing field \"" + key + "\"");
    return Node(*it, ptr_ + "/" + escape_token(key));
}

Node Node::at(std::size_t i) const { return Node((*j_)[i], ptr_ + "/" + std::to_string(i)); }

std::size_t Node::size() const {
    if (!j_->is_array()) fail("expected an array");
    return j_->size();
}

Node Node::array(std::size_t expected) const {
    if (size() != expected)
        fail("expected an array of length " + std::to_string(expected) + ", got " + std::to_string(j_->size()));
    return *this;
}

std::string Node::string() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
}

std::size_t Node::count(std::size_t lo, std::size_t hi) const {
    if (!j_->is_number_integer()) fail("expected an integer");
    auto v = j_->get<long long>();
    if (v < static_cast<long long>(lo) || v > static_cast<long long>(hi))
        fail("expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<std::size_t>(v);
}

Scalar Node::scalar() const {
    if (!j_->is_string()) fail("expected a rational written as a string, e.g. \"-1/2\"");
    try {
        return Scalar::parse(j_->get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

Vec Node::vec(std::size_t n) const {
    array(n);
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(at(i).scalar());
    return v;
}

Matrix Node::matrix(std::size_t rows, std::size_t cols) const {
    array(rows);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        Vec row = at(i).vec(cols);
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = row[j];
    }
    return m;
}

StructureConstants Node::table(std::size_t n) const {
    array(n);
    StructureConstants c(n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m = at(i).matrix(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c(i, j, k) = m(j, k);
    }
    return c;
}

std::vector<Matrix> Node::maps(std::size_t count, std::size_t dim) const {
    array(count);
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(at(i).matrix(dim, dim));
    return out;
}

Tensor3 Node::tensor3(std::size_t n) const {
    StructureConstants c = table(n);
    Tensor3 t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) t(i, j, k) = c(i, j, k);
    return t;
}

json scalar_json(const Scalar& s) { return s.str(); }

json vec_json(const Vec& v) {
    json j = json::array();
    for (const auto& x : v) j.push_back(scalar_json(x));
    return j;
}

json matrix_json(const Matrix& m) {
    json j = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_json(m(i, k)));
        j.push_back(row);
    }
    return j;
}

json table_json(const StructureConstants& c) {
    json j = json::array();
    const std::size_t n = c.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) m(a, b) = c(i, a, b);
        j.push_back(matrix_json(m));
    }
    return j;
}

json maps_json(const std::vector<Matrix>& ms) {
    json j = json::array();
    for (const auto& m : ms) j.push_back(matrix_json(m));
    return j;
}

json tensor3_json(const Tensor3& t) {
    StructureConstants c(t.dim());
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t a = 0; a < t.dim(); ++a)
            for (std::size_t b = 0; b < t.dim(); ++b) c(i, a, b) = t(i, a, b);
    return table_json(c);
}

namespace {

std::vector<Matrix> tensors_as_maps(const std::vector<Tensor2>& ts) {
    std::vector<Matrix> out;
    for (const auto& t : ts) out.push_back(t.coeffs());
    return out;
}

std::vector<Tensor2> maps_as_tensors(const std::vector<Matrix>& ms) {
    std::vector<Tensor2> out;
    for (const auto& m : ms) out.emplace_back(m);
    return out;
}

json rep_json(const AnyRep& rep) {
    json j;
    j["kind"] = "rep";
    if (const auto* nr = std::get_if<NovikovRep>(&rep)) {
        j["flavor"] = "novikov";
        j["algebra_dim"] = nr->algebra_dim();
        j["module_dim"] = nr->module_dim();
        j["l"] = maps_json(nr->l);
        j["r"] = maps_json(nr->r);
    } else {
        const auto& pr = std::get<PreNovikovRep>(rep);
        j["flavor"] = "pre_novikov";
        j["algebra_dim"] = pr.algebra_dim();
        j["module_dim"] = pr.module_dim();
        j["l_rhd"] = maps_json(pr.l_rhd);
        j["r_rhd"] = maps_json(pr.r_rhd);
        j["l_lhd"] = maps_json(pr.l_lhd);
        j["r_lhd"] = maps_json(pr.r_lhd);
    }
    return j;
}

struct ToJson {
    json& j;
    void operator()(const NovikovTable& t) {
        j["dim"] = t.op.dim();
        j["table"] = table_json(t.op);
    }
    void operator()(const Table& t) {
        j["dim"] = t.op.dim();
        j["table"] = table_json(t.op);
    }
    void operator()(const PreNovikovAlgebra& a) {
        j["dim"] = a.dim();
        j["lhd"] = table_json(a.lhd);
        j["rhd"] = table_json(a.rhd);
    }
    void operator()(const PreNovikovCoalgebra& c) {
        j["dim"] = c.dim();
        j["alpha"] = maps_json(tensors_as_maps(c.alpha));
        j["beta"] = maps_json(tensors_as_maps(c.beta));
    }
    void operator()(const PreNovikovBialgebra& b) {
        (*this)(b.algebra);
        (*this)(b.coalgebra);
    }
    void operator()(const AnyRep& r) { j = rep_json(r); }
    void operator()(const FormBundle& f) {
        j["dim"] = f.w.rows();
        j["form"] = matrix_json(f.w);
    }
    void operator()(const Tensor2& t) {
        j["rows"] = t.rows();
        j["cols"] = t.cols();
        j["coeffs"] = matrix_json(t.coeffs());
    }
    void operator()(const LinMap& m) {
        j["rows"] = m.m.rows();
        j["cols"] = m.m.cols();
        j["matrix"] = matrix_json(m.m);
    }
    void operator()(const OOperatorBundle& o) {
        j["algebra"] = std::visit([](const auto& a) { return bundle_json(Bundle{a, {}}); }, o.algebra);
        j["rep"] = rep_json(o.rep);
        j["map"] = bundle_json(Bundle{LinMap{o.map}, {}});
    }
    void operator()(const DoubleConstruction& d) {
        j["dim"] = d.algebra.dim();
        j["split_dim"] = d.split_dim;
        j["product"] = table_json(d.algebra);
        j["form"] = matrix_json(d.form);
        j["lhd"] = table_json(d.structure.lhd);
        j["rhd"] = table_json(d.structure.rhd);
    }
    void operator()(const Tensor2List& l) {
        j["rows"] = l.rows;
        j["cols"] = l.cols;
        j["items"] = json::array();
        for (const auto& t : l.items) j["items"].push_back(matrix_json(t.coeffs()));
    }
    void operator()(const Tensor3& t) {
        j["dim"] = t.dim();
        j["coeffs"] = tensor3_json(t);
    }
    void operator()(const Collection& c) {
        j["items"] = json::object();
        for (const auto& [name, b] : c.items) j["items"][name] = bundle_json(b);
    }
};

AnyRep rep_from(const Node& n) {
    const std::string flavor = n.at("flavor").string();
    const std::size_t ad = n.at("algebra_dim").count(1, max_dim);
    const std::size_t md = n.at("module_dim").count(1, max_dim);
    if (flavor == "novikov") {
        n.only({"kind", "flavor", "algebra_dim", "module_dim", "l", "r"});
        return NovikovRep{n.at("l").maps(ad, md), n.at("r").maps(ad, md)};
    }
    if (flavor == "pre_novikov") {
        n.only({"kind", "flavor", "algebra_dim", "module_dim", "l_rhd", "r_rhd", "l_lhd", "r_lhd"});
        return PreNovikovRep{n.at("l_rhd").maps(ad, md), n.at("r_rhd").maps(ad, md), n.at("l_lhd").maps(ad, md),
                             n.at("r_lhd").maps(ad, md)};
    }
    n.at("flavor").fail("unknown rep flavor \"" + flavor + "\" (novikov or pre_novikov)");
}

std::vector<std::string> basis_from(const Node& n, std::size_t dim) {
    if (!n.has("basis")) return {};
    Node b = n.at("basis").array(dim);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim; ++i) out.push_back(b.at(i).string());
    return out;
}

}  // namespace

json bundle_json(const Bundle& b) {
    json j = json::object();
    std::visit(ToJson{j}, b.value);
    j["kind"] = b.kind();
    if (!b.basis.empty()) {
        json names = json::array();
        for (const auto& s : b.basis) names.push_back(s);
        j["basis"] = names;
    }
    return j;
}

Bundle bundle_from_json(const Node& n) {
    const std::string kind = n.at("kind").string();
    Bundle b;
    auto dim = [&] { return n.at("dim").count(1, max_dim); };
    if (kind == "novikov" || kind == "table") {
        n.only({"kind", "dim", "table", "basis"});
        const std::size_t d = dim();
        StructureConstants op = n.at("table").table(d);
        b.value = kind == "novikov" ? BundleValue(NovikovTable{op}) : BundleValue(Table{op});
        b.basis = basis_from(n, d);
    } else if (kind == "pre_novikov") {
        n.only({"kind", "dim", "lhd", "rhd", "basis"});
        const std::size_t d = dim();
        b.value = PreNovikovAlgebra{n.at("lhd").table(d), n.at("rhd").table(d)};
        b.basis = basis_from(n, d);
    } else if (kind == "coalgebra") {
        n.only({"kind", "dim", "alpha", "beta", "basis"});
        const std::size_t d = dim();
        b.value = PreNovikovCoalgebra{maps_as_tensors(n.at("alpha").maps(d, d)), maps_as_tensors(n.at("beta").maps(d, d))};
        b.basis = basis_from(n, d);
    } else if (kind == "bialgebra") {
        n.only({"kind", "dim", "lhd", "rhd", "alpha", "beta", "basis"});
        const std::size_t d = dim();
        b.value = PreNovikovBialgebra{
            {n.at("lhd").table(d), n.at("rhd").table(d)},
            {maps_as_tensors(n.at("alpha").maps(d, d)), maps_as_tensors(n.at("beta").maps(d, d))}};
        b.basis = basis_from(n, d);
    } else if (kind == "rep") {
        b.value = rep_from(n);
    } else if (kind == "form") {
        n.only({"kind", "dim", "form", "basis"});
        const std::size_t d = dim();
        b.value = FormBundle{n.at("form").matrix(d, d)};
        b.basis = basis_from(n, d);
    } else if (kind == "tensor2") {
        n.only({"kind", "rows", "cols", "coeffs"});
        const std::size_t r = n.at("rows").count(1, max_dim), c = n.at("cols").count(1, max_dim);
        b.value = Tensor2(n.at("coeffs").matrix(r, c));
    } else if (kind == "linmap") {
        n.only({"kind", "rows", "cols", "matrix"});
        const std::size_t r = n.at("rows").count(1, max_dim), c = n.at("cols").count(1, max_dim);
        b.value = LinMap{n.at("matrix").matrix(r, c)};
    } else if (kind == "o_operator") {
        n.only({"kind", "algebra", "rep", "map"});
        Bundle alg = bundle_from_json(n.at("algebra"));
        Bundle rep = bundle_from_json(n.at("rep"));
        Bundle map = bundle_from_json(n.at("map"));
        OOperatorBundle o;
        if (auto* a = std::get_if<NovikovTable>(&alg.value)) o.algebra = *a;
        else if (auto* p = std::get_if<PreNovikovAlgebra>(&alg.value)) o.algebra = *p;
        else n.at("algebra").fail("expected a novikov or pre_novikov bundle");
        if (auto* r = std::get_if<AnyRep>(&rep.value)) o.rep = *r;
        else n.at("rep").fail("expected a rep bundle");
        if (auto* m = std::get_if<LinMap>(&map.value)) o.map = m->m;
        else n.at("map").fail("expected a linmap bundle");
        if (o.algebra.index() != o.rep.index()) n.at("rep").fail("rep flavor does not match the algebra kind");
        const std::size_t ad = std::visit([](const auto& a) -> std::size_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(a)>, NovikovTable>) return a.op.dim();
            else return a.dim();
        }, o.algebra);
        const auto [rad, rmd] = std::visit([](const auto& r) { return std::pair{r.algebra_dim(), r.module_dim()}; }, o.rep);
        if (rad != ad) n.at("rep").fail("rep algebra_dim does not match the algebra dim");
        if (o.map.rows() != ad || o.map.cols() != rmd)
            n.at("map").fail("map must have rows = algebra dim and cols = module dim");
        b.value = std::move(o);
    } else if (kind == "double") {
        n.only({"kind", "dim", "split_dim", "product", "form", "lhd", "rhd", "basis"});
        const std::size_t d = dim();
        const std::size_t s = n.at("split_dim").count(0, d);
        b.value = DoubleConstruction{n.at("product").table(d), n.at("form").matrix(d, d), s,
                                     {n.at("lhd").table(d), n.at("rhd").table(d)}};
        b.basis = basis_from(n, d);
    } else if (kind == "tensor2_list") {
        n.only({"kind", "rows", "cols", "items"});
        Tensor2List l;
        l.rows = n.at("rows").count(1, max_dim);
        l.cols = n.at("cols").count(1, max_dim);
        Node items = n.at("items");
        for (std::size_t i = 0; i < items.size(); ++i) l.items.emplace_back(items.at(i).matrix(l.rows, l.cols));
        b.value = std::move(l);
    } else if (kind == "tensor3") {
        n.only({"kind", "dim", "coeffs", "basis"});
        const std::size_t d = dim();
        b.value = n.at("coeffs").tensor3(d);
        b.basis = basis_from(n, d);
    } else if (kind == "collection") {
        n.only({"kind", "items"});
        Node items = n.at("items");
        if (!items.raw().is_object()) items.fail("expected an object");
        Collection c;
        for (auto it = items.raw().begin(); it != items.raw().end(); ++it)
            c.items.emplace_back(it.key(), bundle_from_json(items.at(it.key())));
        b.value = std::move(c);
    } else {
        n.at("kind").fail("unknown bundle kind \"" + kind + "\"");
    }
    return b;
}

}  // namespace io

std::string Bundle::kind() const {
    static const char* const names[] = {"novikov", "pre_novikov", "coalgebra", "bialgebra", "rep",   "form",
                                        "tensor2", "linmap",      "o_operator", "double",   "tensor2_list", "table",
                                        "tensor3", "collection"};
    return names[value.index()];
}

template <class T>
const T& Bundle::as() const {
    if (const T* p = std::get_if<T>(&value)) return *p;
    throw InputError("unexpected bundle kind \"" + kind() + "\"");
}

template const NovikovTable& Bundle::as() const;
template const PreNovikovAlgebra& Bundle::as() const;
template const PreNovikovCoalgebra& Bundle::as() const;
template const PreNovikovBialgebra& Bundle::as() const;
template const AnyRep& Bundle::as() const;
template const FormBundle& Bundle::as() const;
template const Tensor2& Bundle::as() const;
template const LinMap& Bundle::as() const;
template const OOperatorBundle& Bundle::as() const;
template const DoubleConstruction& Bundle::as() const;
template const Tensor2List& Bundle::as() const;
template const Table& Bundle::as() const;
template const Tensor3& Bundle::as() const;
template const Collection& Bundle::as() const;

const Bundle& Collection::at(const std::string& name) const {
    for (const auto& [k, b] : items)
        if (k == name) return b;
    throw InputError("collection has no item \"" + name + "\"");
}

bool operator==(const Bundle& a, const Bundle& b) { return a.value == b.value && a.basis == b.basis; }

Bundle parse_bundle(std::string_view text) {
    io::json j = io::read_strict(text);
    return io::bundle_from_json(io::Node(j, ""));
}

std::string serialize_bundle(const Bundle& b) { return io::write_canonical(io::bundle_json(b)); }

}  // namespace prenov
