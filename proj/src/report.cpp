#include "prenov/report.hpp"

namespace prenov {

bool Report::passed() const {
    if (!violations.empty()) return false;
    for (const auto& c : children)
        if (!c.passed()) return false;
    return true;
}

std::size_t Report::violation_count() const {
    std::size_t n = violations.size();
    for (const auto& c : children) n += c.violation_count();
    return n;
}

std::vector<Violation> Report::find(const std::string& id) const {
    std::vector<Violation> out;
    for (const auto& v : violations)
        if (v.identity == id) out.push_back(v);
    for (const auto& c : children) {
        auto sub = c.find(id);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

}  // namespace prenov
