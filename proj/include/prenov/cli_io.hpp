#pragma once

#include "prenov/bialgebra.hpp"
#include "prenov/matched_double.hpp"
#include "prenov/representations.hpp"
#include "prenov/yang_baxter.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace prenov {

/// Bad bundle or report text. `where` is "line L, column C" for syntax
/// errors and a JSON pointer for shape and value errors.
class ParseError : public InputError {
public:
    ParseError(const std::string& where, const std::string& what)
        : InputError(where + ": " + what), where_(where) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

/// A bare bilinear table with no axioms attached (⊙, ★, ...).
struct Table {
    StructureConstants op;
    friend bool operator==(const Table&, const Table&) = default;
};

/// A Novikov algebra given by its product table.
struct NovikovTable {
    StructureConstants op;
    friend bool operator==(const NovikovTable&, const NovikovTable&) = default;
};

struct FormBundle {
    FormMatrix w;
    friend bool operator==(const FormBundle&, const FormBundle&) = default;
};

struct LinMap {
    Matrix m;
    friend bool operator==(const LinMap&, const LinMap&) = default;
};

using AnyRep = std::variant<NovikovRep, PreNovikovRep>;
using AnyAlgebra = std::variant<NovikovTable, PreNovikovAlgebra>;

/// T: V → A together with the algebra and representation it is checked against.
/// Both flavors must match (Novikov table with Novikov rep, or pre-Novikov
/// with pre-Novikov).
struct OOperatorBundle {
    AnyAlgebra algebra;
    AnyRep rep;
    Matrix map;
    friend bool operator==(const OOperatorBundle&, const OOperatorBundle&) = default;
};

struct Tensor2List {
    std::size_t rows = 0, cols = 0;
    std::vector<Tensor2> items;
    friend bool operator==(const Tensor2List&, const Tensor2List&) = default;
};

struct Bundle;

/// Named sub-bundles, kept in name order.
struct Collection {
    std::vector<std::pair<std::string, Bundle>> items;
    const Bundle& at(const std::string& name) const;
};

using BundleValue = std::variant<NovikovTable, PreNovikovAlgebra, PreNovikovCoalgebra, PreNovikovBialgebra, AnyRep,
                                 FormBundle, Tensor2, LinMap, OOperatorBundle, DoubleConstruction, Tensor2List, Table,
                                 Tensor3, Collection>;

/// One self-describing JSON document. Scalars are strings ("3", "-1/2").
struct Bundle {
    BundleValue value;
    /// Optional display names for the basis, one per basis vector.
    std::vector<std::string> basis;

    std::string kind() const;

    template <class T>
    const T& as() const;
};

bool operator==(const Bundle& a, const Bundle& b);
inline bool operator==(const Collection& a, const Collection& b) { return a.items == b.items; }

Bundle parse_bundle(std::string_view text);
/// Canonical text: sorted keys, two-space indent, reduced fractions, one
/// line per innermost array, trailing newline.
std::string serialize_bundle(const Bundle& b);

/// Equation label for an identity id; the id itself if it has none.
const std::string& equation_label(const std::string& id);
/// Every id known to the label table.
std::vector<std::string> labelled_identities();

enum class ReportFormat { text, machine };

std::string render_report(const Report& r, ReportFormat fmt);
/// Inverse of the machine format.
Report parse_report(std::string_view text);

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Exit codes.
inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_input = 2;
inline constexpr int exit_internal = 3;

/// argv[0] is the program name. Never throws.
CommandResult run_command(const std::vector<std::string>& argv);

}  // namespace prenov
