#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace sqdisc {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
/// Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}                       // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(static_cast<long>(v)) {}     // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : q_(v) {}             // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p", "-p", "p/q" (surrounding whitespace allowed).
    static Rational parse(std::string_view text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational inverse() const;
    /// Integer power; negative exponents invert (zero base then errors).
    Rational pow(long e) const;

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    /// Height max(|num|, den).
    Integer height() const;

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Integer ipow(const Integer& base, unsigned long e);

}  // namespace sqdisc
