#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sqdisc/rational.hpp"

namespace sqdisc {

// Factorization and square classes in Q*/(Q*)^n.

struct FactorOptions {
    /// Trial division runs over all candidates up to this bound.
    unsigned long trial_bound = 1'000'000;
    /// Iteration budget for each Pollard-rho attempt on a composite cofactor.
    std::uint64_t rho_iterations = 2'000'000;
};

/// Process-wide defaults used when no options are passed explicitly.
FactorOptions default_factor_options();
void set_default_factor_options(const FactorOptions& opts);

/// Prime factorization of |n| (n != 0), primes ascending.
/// Throws FactorizationError if a composite cofactor resists Pollard rho.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n,
                                                 const FactorOptions& opts = default_factor_options());

/// Exact square root of a nonnegative integer if it is a perfect square.
std::optional<Integer> integer_sqrt_exact(const Integer& n);

/// Exact n-th root of a rational if one exists (n >= 1). The real root is
/// returned; for even n and r > 0 it is the positive one.
std::optional<Rational> rational_root(const Rational& r, unsigned n);

/// True iff r = s^2 for some rational s. Decided by integer square roots of
/// numerator and denominator, never by factoring.
bool is_square_rational(const Rational& r);

/// The nonnegative s with s^2 = r, if any.
std::optional<Rational> rational_sqrt(const Rational& r);

/// Canonical representative of a class in Q*/(Q*)^2: a nonzero squarefree integer.
class SquareClassRep {
public:
    explicit SquareClassRep(Integer v);
    const Integer& value() const { return value_; }
    friend bool operator==(const SquareClassRep&, const SquareClassRep&) = default;

private:
    Integer value_;
};

/// The unique squarefree m with r = m * s^2. Errors with "not a unit of Q" on zero.
SquareClassRep squarefree_part(const Rational& r, const FactorOptions& opts = default_factor_options());

/// True iff a/b is a rational square. Both must be nonzero.
bool same_square_class(const Rational& a, const Rational& b);

/// Representative of r in Q*/(Q*)^n for n in {2, 4, 6}: sign times a fraction
/// whose numerator and denominator carry no prime to the n-th power.
Rational nth_power_free_part(const Rational& r, unsigned n,
                             const FactorOptions& opts = default_factor_options());

}  // namespace sqdisc
