#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sqdisc/rational.hpp"

namespace sqdisc {

/// Dense univariate polynomial over Q. Coefficients are stored ascending by
/// degree with a nonzero last entry; the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> ascending);
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

    /// The polynomial x.
    static Poly x();
    /// c * x^k.
    static Poly monomial(const Rational& c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::span<const Rational> coeffs() const { return c_; }
    /// Coefficient of x^k (zero beyond the degree).
    Rational coeff(std::size_t k) const;
    Rational leading() const;

    Rational operator()(const Rational& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

    Poly pow(unsigned e) const;
    Poly derivative() const;
    Poly monic() const;
    Poly scaled(const Rational& s) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    /// Exact division; errors if the remainder is nonzero.
    Poly exact_div(const Poly& d) const;

    /// Human-readable form in the given variable, highest degree first.
    std::string str(const std::string& var = "h") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd; errors when both inputs are zero.
Poly poly_gcd(const Poly& p, const Poly& q);

/// Radical of p: p / gcd(p, p') made monic. Errors on zero.
Poly squarefree_part_poly(const Poly& p);

/// Yun decomposition p = lc * prod_i a_i^i with each a_i monic squarefree and
/// pairwise coprime. Entry i-1 holds a_i. Errors on zero.
std::vector<Poly> squarefree_decomposition(const Poly& p);

/// q with q^2 = p (leading coefficient of q positive), or nothing.
std::optional<Poly> is_perfect_square_poly(const Poly& p);

/// Distinct rational roots, ascending. The zero polynomial is rejected.
std::vector<Rational> rational_roots(const Poly& p);

/// Integer primitive part: p scaled so coefficients are coprime integers with
/// positive leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const Poly& p);

/// Reduced quotient num/den over Q with den monic and gcd(num, den) = 1.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(Poly num);  // NOLINT(google-explicit-constructor)
    RationalFunction(Poly num, Poly den);
    RationalFunction(const Rational& c) : RationalFunction(Poly(c)) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(long c) : RationalFunction(Poly(c)) {}  // NOLINT(google-explicit-constructor)

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    /// Exact value at x; PoleError ("cusp candidate") when den(x) = 0.
    Rational operator()(const Rational& x) const;
    bool is_pole(const Rational& x) const { return den_(x).is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    RationalFunction pow(unsigned e) const;

    /// this(inner(t)).
    RationalFunction compose(const RationalFunction& inner) const;

    std::string str(const std::string& var = "h") const;

private:
    Poly num_, den_;
};

/// Same as f(x0); kept as a free function for call sites that read better
/// with a verb.
inline Rational rf_evaluate(const RationalFunction& f, const Rational& x0) { return f(x0); }

/// Class of a nonzero rational function modulo squares in Q(h).
struct SquareClassRF {
    /// Monic product of the irreducible factors of num*den of odd multiplicity.
    Poly monic;
    /// Squarefree integer carrying the leading-coefficient class.
    Integer constant;
    friend bool operator==(const SquareClassRF&, const SquareClassRF&) = default;
};

SquareClassRF mod_square_class_rf(const RationalFunction& f);

/// w with w^2 = f in Q(h), or nothing.
std::optional<RationalFunction> rf_sqrt(const RationalFunction& f);

}  // namespace sqdisc
