#include "sqdisc/square_class.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "sqdisc/errors.hpp"

namespace sqdisc {

namespace {

std::mutex g_opts_mutex;
FactorOptions g_opts;

bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor or nothing.
std::optional<Integer> pollard_brent(const Integer& n, unsigned long c, std::uint64_t budget) {
    if (mpz_even_p(n.get_mpz_t())) {
        return Integer(2);
    }
    auto f = [&](const Integer& x) {
        Integer y = x * x + c;
        mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
        return y;
    };
    Integer y = 2, x, ys, q = 1, g = 1;
    std::uint64_t r = 1, used = 0;
    const std::uint64_t m = 128;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = f(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            std::uint64_t lim = std::min(m, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = f(y);
                Integer d = x - y;
                q = q * ::abs(d);
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += lim;
            used += lim;
            if (used > budget) return std::nullopt;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            Integer d = ::abs(Integer(x - ys));
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    if (g == n) return std::nullopt;
    return g;
}

void split_composite(const Integer& n, const FactorOptions& opts, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    if (auto r = integer_sqrt_exact(n)) {
        split_composite(*r, opts, out);
        split_composite(*r, opts, out);
        return;
    }
    for (unsigned long c = 1; c <= 8; ++c) {
        if (auto d = pollard_brent(n, c, opts.rho_iterations)) {
            Integer other = n / *d;
            split_composite(*d, opts, out);
            split_composite(other, opts, out);
            return;
        }
    }
    throw FactorizationError("could not factor cofactor " + n.get_str());
}

}  // namespace

FactorOptions default_factor_options() {
    std::lock_guard lock(g_opts_mutex);
    return g_opts;
}

void set_default_factor_options(const FactorOptions& opts) {
    std::lock_guard lock(g_opts_mutex);
    g_opts = opts;
}

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n, const FactorOptions& opts) {
    if (n == 0) {
        throw DomainError("factor: zero has no factorization");
    }
    std::map<Integer, unsigned> found;
    Integer rest = ::abs(n);
    auto strip = [&](unsigned long p) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++found[Integer(p)];
        }
    };
    strip(2);
    strip(3);
    // 6k +- 1 wheel; stop once p^2 exceeds what is left or the cofactor is prime.
    for (unsigned long p = 5; p <= opts.trial_bound; p += 6) {
        if (rest == 1) break;
        if (Integer(p) * p > rest) break;
        strip(p);
        if (p + 2 <= opts.trial_bound) strip(p + 2);
        if ((p % 600) == 5 && rest > 1 && is_probable_prime(rest)) break;
    }
    if (rest > 1) {
        Integer bound = Integer(opts.trial_bound) * opts.trial_bound;
        if (rest <= bound || is_probable_prime(rest)) {
            ++found[rest];
        } else {
            split_composite(rest, opts, found);
        }
    }
    return {found.begin(), found.end()};
}

std::optional<Integer> integer_sqrt_exact(const Integer& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Rational> rational_root(const Rational& r, unsigned n) {
    if (n == 0) {
        throw DomainError("rational_root: zeroth root");
    }
    if (r.sign() < 0 && n % 2 == 0) return std::nullopt;
    auto root = [n](const Integer& v) -> std::optional<Integer> {
        Integer a = ::abs(v), out;
        if (mpz_root(out.get_mpz_t(), a.get_mpz_t(), n) == 0) return std::nullopt;
        return v < 0 ? Integer(-out) : out;
    };
    auto num = root(r.num());
    auto den = root(r.den());
    if (!num || !den) return std::nullopt;
    return Rational(*num, *den);
}

bool is_square_rational(const Rational& r) { return rational_sqrt(r).has_value(); }

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    auto n = integer_sqrt_exact(r.num());
    if (!n) return std::nullopt;
    auto d = integer_sqrt_exact(r.den());
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

SquareClassRep::SquareClassRep(Integer v) : value_(std::move(v)) {
    if (value_ == 0) {
        throw DomainError("square class representative must be nonzero");
    }
}

SquareClassRep squarefree_part(const Rational& r, const FactorOptions& opts) {
    if (r.is_zero()) {
        throw DomainError("squarefree_part: not a unit of Q");
    }
    // n/d lies in the class of n*d.
    Integer m = r.sign() < 0 ? -1 : 1;
    for (const Integer& part : {r.num(), r.den()}) {
        for (const auto& [p, e] : factor(part, opts)) {
            if (e % 2 == 1) m *= p;
        }
    }
    return SquareClassRep(m);
}

bool same_square_class(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) {
        throw DomainError("same_square_class: not a unit of Q");
    }
    return is_square_rational(a / b);
}

Rational nth_power_free_part(const Rational& r, unsigned n, const FactorOptions& opts) {
    if (n != 2 && n != 4 && n != 6) {
        throw DomainError("nth_power_free_part: n must be 2, 4 or 6");
    }
    if (r.is_zero()) {
        throw DomainError("nth_power_free_part: not a unit of Q");
    }
    auto reduce = [&](const Integer& v) {
        Integer out = 1;
        for (const auto& [p, e] : factor(v, opts)) {
            out *= ipow(p, e % n);
        }
        return out;
    };
    Integer num = reduce(r.num());
    if (r.sign() < 0) num = -num;
    return Rational(num, reduce(r.den()));
}

}  // namespace sqdisc
