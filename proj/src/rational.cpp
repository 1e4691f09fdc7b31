#include "sqdisc/rational.hpp"

#include <algorithm>
#include <cctype>

#include "sqdisc/errors.hpp"

namespace sqdisc {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw DomainError("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw DomainError("inverse of zero");
    }
    return Rational(mpq_class(1 / q_));
}

Rational Rational::pow(long e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Integer Rational::height() const {
    Integer n = ::abs(q_.get_num());
    return n > q_.get_den() ? n : Integer(q_.get_den());
}

std::string Rational::str() const {
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size() ||
        !std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
        throw ParseError("not a rational: '" + std::string(whole) + "'");
    }
    Integer v(std::string(s.substr(i)), 10);
    return neg ? Integer(-v) : v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view t = trim(text);
    auto slash = t.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(t, text));
    }
    Integer n = parse_integer(trim(t.substr(0, slash)), text);
    Integer d = parse_integer(trim(t.substr(slash + 1)), text);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sqdisc
