#pragma once

// JSON plumbing shared by the bundle and report formats.

#include "prenov/cli_io.hpp"

#include <json.hpp>

#include <set>
#include <string>
#include <string_view>

namespace prenov::io {

using json = nlohmann::json;

/// Canonical layout: sorted keys, two-space indent, arrays of scalars on one line.
std::string write_canonical(const json& j);

/// Strict parse: syntax errors carry line and column, duplicate keys are rejected.
json read_strict(std::string_view text);

/// A JSON value together with its pointer, so every shape error can say where.
class Node {
public:
    Node(const json& j, std::string ptr) : j_(&j), ptr_(std::move(ptr)) {}

    const json& raw() const { return *j_; }
    const std::string& pointer() const { return ptr_; }
    [[noreturn]] void fail(const std::string& what) const;

    /// Object access. `only` rejects every key not listed.
    void only(std::initializer_list<std::string_view> keys) const;
    bool has(const std::string& key) const;
    Node at(const std::string& key) const;
    Node at(std::size_t i) const;

    std::size_t size() const;  // array length
    Node array(std::size_t expected) const;  // checks length
    std::string string() const;
    std::size_t count(std::size_t lo, std::size_t hi) const;  // integer in [lo, hi]
    Scalar scalar() const;

    Vec vec(std::size_t n) const;
    Matrix matrix(std::size_t rows, std::size_t cols) const;
    StructureConstants table(std::size_t n) const;
    std::vector<Matrix> maps(std::size_t count, std::size_t dim) const;
    Tensor3 tensor3(std::size_t n) const;

private:
    const json* j_;
    std::string ptr_;
};

json scalar_json(const Scalar& s);
json vec_json(const Vec& v);
json matrix_json(const Matrix& m);
json table_json(const StructureConstants& c);
json maps_json(const std::vector<Matrix>& ms);
json tensor3_json(const Tensor3& t);

json bundle_json(const Bundle& b);
Bundle bundle_from_json(const Node& n);

json report_json(const Report& r);

}  // namespace prenov::io
