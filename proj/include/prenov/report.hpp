#pragma once

#include "prenov/scalar.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace prenov {

/// One failed instance of an identity: which identity, at which basis
/// tuple, and the exact nonzero residual coordinates.
struct Violation {
    std::string identity;
    std::vector<std::string> witness;
    std::vector<Scalar> residual;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Verdict of a verifier. Every violation is kept, sorted by witness tuple
/// in evaluation order; nested reports carry sub-verdicts.
struct Report {
    std::string subject;
    std::vector<std::string> identities;
    std::vector<Violation> violations;
    std::vector<Report> children;

    bool passed() const;
    std::size_t violation_count() const;

    /// All violations of this report and its children whose identity equals `id`.
    std::vector<Violation> find(const std::string& id) const;

    friend bool operator==(const Report&, const Report&) = default;
};

/// Malformed or mismatched input (dimension mismatch, bad slot pattern, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A constructor refused because its precondition verifier failed.
class Refused : public std::runtime_error {
public:
    Refused(const std::string& what, Report report)
        : std::runtime_error(what), report_(std::move(report)) {}
    const Report& report() const { return report_; }

private:
    Report report_;
};

/// Two routes that must agree did not. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace prenov
