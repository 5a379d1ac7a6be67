#include "prenov/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace prenov {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Scalar::Scalar(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    auto strip_plus = [](std::string_view s) { return std::string(s[0] == '+' ? s.substr(1) : s); };
    mpz_class n(strip_plus(num), 10);
    mpz_class d(strip_plus(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Scalar out;
    out.q_ = mpq_class(n, d);
    out.q_.canonicalize();
    return out;
}

std::string Scalar::str() const { return q_.get_str(); }

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return;
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    q_ += t;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace prenov
