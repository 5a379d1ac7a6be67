#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace prenov {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : q_(value) {}
    Scalar(long num, long den);
    explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
    /// text or a zero denominator.
    static Scalar parse(std::string_view text);

    std::string str() const;
    std::string numerator_str() const { return q_.get_num().get_str(); }
    std::string denominator_str() const { return q_.get_den().get_str(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
    Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
    Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
    Scalar& operator/=(const Scalar& o);

    /// this += a * b without a temporary Scalar.
    void add_product(const Scalar& a, const Scalar& b);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(Scalar a) { a.q_ = -a.q_; return a; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace prenov
