#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "sqdisc/rational.hpp"

namespace sqdisc {

/// Deterministic pseudo-random source for the randomized suites. Built on
/// mt19937_64, whose output sequence is fixed by the standard, so reports are
/// reproducible across platforms for a given seed.
class Sampler {
public:
    static constexpr std::uint64_t kDefaultSeed = 20240611;

    explicit Sampler(std::uint64_t seed = kDefaultSeed) : gen_(seed) {}

    /// Uniform in [lo, hi].
    long integer(long lo, long hi);
    /// +-a/b with 0 <= a <= max_num, 1 <= b <= max_den; zero optionally excluded.
    Rational rational(long max_num, long max_den, bool allow_zero = true);
    /// As rational(), avoiding every value in `excluded`.
    Rational rational_avoiding(long max_num, long max_den, std::span<const Rational> excluded);

private:
    std::mt19937_64 gen_;
};

}  // namespace sqdisc
