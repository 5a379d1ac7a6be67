#include "json_io.hpp"
#include "labels_data.hpp"

#include <map>
#include <sstream>

namespace prenov {

namespace {

const std::map<std::string, std::string>& label_table() {
    static const std::map<std::string, std::string> table = [] {
        std::map<std::string, std::string> t;
        const io::json j = io::json::parse(io::labels_json);
        for (auto it = j.begin(); it != j.end(); ++it) t.emplace(it.key(), it.value().get<std::string>());
        return t;
    }();
    return table;
}

void render_text(std::ostringstream& os, const Report& r, int depth) {
    const std::string pad(2 * depth, ' ');
    os << pad << (r.passed() ? "PASS " : "FAIL ") << r.subject;
    if (!r.passed()) {
        const std::size_t n = r.violation_count();
        os << " (" << n << (n == 1 ? " violation)" : " violations)");
    }
    os << "\n";
    for (const auto& v : r.violations) {
        os << pad << "  " << equation_label(v.identity) << " at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
        os << "): residual (";
        for (std::size_t i = 0; i < v.residual.size(); ++i) os << (i ? ", " : "") << v.residual[i];
        os << ")\n";
    }
    for (const auto& c : r.children) render_text(os, c, depth + 1);
}

Report report_from(const io::Node& n) {
    n.only({"subject", "verdict", "identities", "violations", "children"});
    Report r;
    r.subject = n.at("subject").string();
    io::Node ids = n.at("identities");
    for (std::size_t i = 0; i < ids.size(); ++i) r.identities.push_back(ids.at(i).string());
    io::Node vs = n.at("violations");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        io::Node v = vs.at(i);
        v.only({"identity", "label", "witness", "residual"});
        Violation out;
        out.identity = v.at("identity").string();
        if (v.at("label").string() != equation_label(out.identity))
            v.at("label").fail("label does not match identity \"" + out.identity + "\"");
        io::Node w = v.at("witness");
        for (std::size_t k = 0; k < w.size(); ++k) out.witness.push_back(w.at(k).string());
        io::Node res = v.at("residual");
        out.residual = res.vec(res.size());
        r.violations.push_back(std::move(out));
    }
    io::Node cs = n.at("children");
    for (std::size_t i = 0; i < cs.size(); ++i) r.children.push_back(report_from(cs.at(i)));
    const std::string verdict = n.at("verdict").string();
    if (verdict != "pass" && verdict != "fail") n.at("verdict").fail("expected \"pass\" or \"fail\"");
    if ((verdict == "pass") != r.passed()) n.at("verdict").fail("verdict disagrees with the listed violations");
    return r;
}

}  // namespace

const std::string& equation_label(const std::string& id) {
    const auto& t = label_table();
    auto it = t.find(id);
    return it == t.end() ? id : it->second;
}

std::vector<std::string> labelled_identities() {
    std::vector<std::string> out;
    for (const auto& [k, v] : label_table()) out.push_back(k);
    return out;
}

namespace io {

json report_json(const Report& r) {
    json j = json::object();
    j["subject"] = r.subject;
    j["verdict"] = r.passed() ? "pass" : "fail";
    j["identities"] = r.identities;
    j["violations"] = json::array();
    for (const auto& v : r.violations)
        j["violations"].push_back(
            {{"identity", v.identity}, {"label", equation_label(v.identity)}, {"witness", v.witness}, {"residual", vec_json(v.residual)}});
    j["children"] = json::array();
    for (const auto& c : r.children) j["children"].push_back(report_json(c));
    return j;
}

}  // namespace io

std::string render_report(const Report& r, ReportFormat fmt) {
    if (fmt == ReportFormat::machine) return io::write_canonical(io::report_json(r));
    std::ostringstream os;
    render_text(os, r, 0);
    return os.str();
}

Report parse_report(std::string_view text) {
    io::json j = io::read_strict(text);
    return report_from(io::Node(j, ""));
}

}  // namespace prenov
