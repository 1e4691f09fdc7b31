#include "sqdisc/poly.hpp"

#include <algorithm>
#include <sstream>

#include "sqdisc/errors.hpp"
#include "sqdisc/square_class.hpp"

namespace sqdisc {

Poly::Poly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly Poly::x() { return Poly(std::vector<Rational>{0, 1}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }

Rational Poly::leading() const { return c_.empty() ? Rational() : c_.back(); }

Rational Poly::operator()(const Rational& x) const {
    // Horner with x = xn/xd kept over a common denominator xd^n.
    if (c_.empty()) return {};
    const Integer& xn = x.raw().get_num();
    const Integer& xd = x.raw().get_den();
    mpq_class acc = c_.back().raw();
    for (std::size_t k = c_.size() - 1; k-- > 0;) {
        acc *= mpq_class(xn, xd);
        acc += c_[k].raw();
    }
    return Rational(acc);
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t k = 0; k < b.c_.size(); ++k) {
            out[i + k] += a.c_[i].raw() * b.c_[k].raw();
        }
    }
    std::vector<Rational> v;
    v.reserve(out.size());
    for (auto& q : out) v.emplace_back(q);
    return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::pow(unsigned e) const {
    Poly result(1), base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    return scaled(leading().inverse());
}

Poly Poly::scaled(const Rational& s) const {
    std::vector<Rational> v = c_;
    for (auto& c : v) c *= s;
    return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    if (degree() < d.degree()) return {Poly(), *this};
    std::vector<Rational> rem = c_;
    std::vector<Rational> quo(c_.size() - d.c_.size() + 1);
    const Rational inv_lead = d.leading().inverse();
    const std::size_t dd = d.c_.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational q = rem[k + dd] * inv_lead;
        quo[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t i = 0; i <= dd; ++i) rem[k + i] -= q * d.c_[i];
    }
    rem.resize(dd);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) {
        throw DomainError("exact_div: nonzero remainder");
    }
    return q;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == Rational(1);
        if (k == 0 || !unit) {
            os << mag;
            if (k > 0) os << "*";
        }
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) {
        throw DomainError("poly_gcd: both arguments are zero");
    }
    Poly a = p.monic(), b = q.monic();
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly squarefree_part_poly(const Poly& p) {
    if (p.is_zero()) {
        throw DomainError("squarefree_part_poly: zero polynomial");
    }
    if (p.degree() == 0) return Poly(1);
    return p.exact_div(poly_gcd(p, p.derivative())).monic();
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) {
        throw DomainError("squarefree_decomposition: zero polynomial");
    }
    std::vector<Poly> parts;
    Poly f = p.monic();
    if (f.degree() == 0) return parts;
    Poly a = poly_gcd(f, f.derivative());
    Poly b = f.exact_div(a);
    Poly c = f.derivative().exact_div(a);
    Poly d = c - b.derivative();
    while (b.degree() > 0) {
        Poly g = poly_gcd(b, d);
        parts.push_back(g);
        b = b.exact_div(g);
        c = d.exact_div(g);
        d = c - b.derivative();
    }
    while (!parts.empty() && parts.back() == Poly(1)) parts.pop_back();
    return parts;
}

std::optional<Poly> is_perfect_square_poly(const Poly& p) {
    if (p.is_zero()) return Poly();
    if (p.degree() % 2 != 0) return std::nullopt;
    auto lead_root = rational_sqrt(p.leading());
    if (!lead_root) return std::nullopt;
    const std::size_t m = static_cast<std::size_t>(p.degree() / 2);
    std::vector<Rational> q(m + 1);
    q[m] = *lead_root;
    const Rational two_lead = Rational(2) * q[m];
    // Match the coefficient of x^(m+k) for k = m-1 down to 0.
    for (std::size_t k = m; k-- > 0;) {
        Rational s = p.coeff(m + k);
        for (std::size_t i = k + 1; i < m; ++i) {
            std::size_t j = m + k - i;
            if (j > k && j < m) s -= q[i] * q[j];
        }
        q[k] = s / two_lead;
    }
    Poly root(std::move(q));
    if (root * root != p) return std::nullopt;
    return root;
}

std::vector<Integer> primitive_integer_coeffs(const Poly& p) {
    if (p.is_zero()) return {};
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Integer v = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        out.push_back(v);
    }
    if (p.leading().sign() < 0) g = -g;
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return out;
}

namespace {

Integer eval_mod(const std::vector<Integer>& g, const Integer& x, const Integer& m) {
    Integer acc = 0;
    for (std::size_t k = g.size(); k-- > 0;) {
        acc = acc * x + g[k];
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

Integer eval_exact(const std::vector<Integer>& g, const Integer& x) {
    Integer acc = 0;
    for (std::size_t k = g.size(); k-- > 0;) acc = acc * x + g[k];
    return acc;
}

// Integer roots of a monic squarefree integer polynomial, by Hensel lifting
// simple roots modulo a small prime past the Cauchy bound.
std::vector<Integer> integer_roots_monic(const std::vector<Integer>& g) {
    const std::size_t n = g.size() - 1;
    if (n == 0) return {};
    if (n == 1) return {Integer(-g[0])};
    std::vector<Integer> dg(n);
    for (std::size_t k = 1; k <= n; ++k) dg[k - 1] = g[k] * static_cast<unsigned long>(k);

    Integer bound = 0;
    for (const auto& c : g) bound = std::max(bound, Integer(::abs(c)));
    bound += 1;

    Integer p = 2;
    for (int attempt = 0; attempt < 5000; ++attempt) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        std::vector<Integer> roots;
        bool all_simple = true;
        for (Integer r = 0; r < p; ++r) {
            if (eval_mod(g, r, p) == 0) {
                if (eval_mod(dg, r, p) == 0) {
                    all_simple = false;
                    break;
                }
                roots.push_back(r);
            }
        }
        if (!all_simple) continue;
        std::vector<Integer> out;
        for (Integer x : roots) {
            Integer mod = p;
            while (mod <= 2 * bound) {
                mod = mod * mod;
                Integer fx = eval_mod(g, x, mod);
                Integer dfx = eval_mod(dg, x, mod);
                Integer inv;
                if (mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), mod.get_mpz_t()) == 0) {
                    throw DomainError("rational_roots: Hensel lift lost invertibility");
                }
                x = x - fx * inv;
                mpz_mod(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
            }
            if (x > mod / 2) x -= mod;
            if (eval_exact(g, x) == 0) out.push_back(x);
        }
        return out;
    }
    throw DomainError("rational_roots: no prime of good reduction found");
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
    if (p.is_zero()) {
        throw DomainError("rational_roots: zero polynomial");
    }
    if (p.degree() == 0) return {};
    std::vector<Integer> f = primitive_integer_coeffs(squarefree_part_poly(p));
    const std::size_t n = f.size() - 1;
    const Integer lc = f[n];
    // g(X) = lc^(n-1) f(X/lc) is monic with integer coefficients.
    std::vector<Integer> g(n + 1);
    Integer scale = 1;
    for (std::size_t k = n + 1; k-- > 0;) {
        if (k == n) {
            g[k] = 1;
        } else {
            g[k] = f[k] * scale;
            scale *= lc;
        }
    }
    std::vector<Rational> out;
    for (const auto& r : integer_roots_monic(g)) out.emplace_back(r, lc);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------

RationalFunction::RationalFunction(Poly num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(Poly num, Poly den) {
    if (den.is_zero()) {
        throw DomainError("rational function with zero denominator");
    }
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly(1);
        return;
    }
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = num.exact_div(g);
        den = den.exact_div(g);
    }
    Rational lc = den.leading();
    num_ = num.scaled(lc.inverse());
    den_ = den.scaled(lc.inverse());
}

Rational RationalFunction::operator()(const Rational& x) const {
    Rational d = den_(x);
    if (d.is_zero()) {
        throw PoleError("denominator vanishes at " + x.str());
    }
    return num_(x) / d;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) {
        throw DomainError("rational function division by zero");
    }
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(unsigned e) const {
    return RationalFunction(num_.pow(e), den_.pow(e));
}

RationalFunction RationalFunction::compose(const RationalFunction& inner) const {
    const Poly& P = inner.num();
    const Poly& Q = inner.den();
    const int d = std::max(num_.degree(), den_.degree());
    if (d <= 0) return *this;
    std::vector<Poly> ppow{Poly(1)}, qpow{Poly(1)};
    for (int i = 1; i <= d; ++i) {
        ppow.push_back(ppow.back() * P);
        qpow.push_back(qpow.back() * Q);
    }
    auto homog = [&](const Poly& f) {
        Poly acc;
        for (int i = 0; i <= f.degree(); ++i) {
            const Rational c = f.coeff(static_cast<std::size_t>(i));
            if (c.is_zero()) continue;
            acc += (ppow[static_cast<std::size_t>(i)] * qpow[static_cast<std::size_t>(d - i)]).scaled(c);
        }
        return acc;
    };
    return RationalFunction(homog(num_), homog(den_));
}

std::string RationalFunction::str(const std::string& var) const {
    if (den_ == Poly(1)) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

SquareClassRF mod_square_class_rf(const RationalFunction& f) {
    if (f.is_zero()) {
        throw DomainError("mod_square_class_rf: zero function");
    }
    Poly prod = f.num() * f.den();
    auto parts = squarefree_decomposition(prod);
    Poly odd(1);
    for (std::size_t i = 0; i < parts.size(); i += 2) odd *= parts[i];
    return {odd, squarefree_part(prod.leading()).value()};
}

std::optional<RationalFunction> rf_sqrt(const RationalFunction& f) {
    auto root = is_perfect_square_poly(f.num() * f.den());
    if (!root) return std::nullopt;
    return RationalFunction(*root, f.den());
}

}  // namespace sqdisc
