#include "sqdisc/sampling.hpp"

#include <algorithm>

#include "sqdisc/errors.hpp"

namespace sqdisc {

long Sampler::integer(long lo, long hi) {
    if (hi < lo) throw DomainError("Sampler::integer: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
}

Rational Sampler::rational(long max_num, long max_den, bool allow_zero) {
    for (;;) {
        long a = integer(-max_num, max_num);
        long b = integer(1, max_den);
        if (a == 0 && !allow_zero) continue;
        return Rational(Integer(a), Integer(b));
    }
}

Rational Sampler::rational_avoiding(long max_num, long max_den, std::span<const Rational> excluded) {
    for (;;) {
        Rational r = rational(max_num, max_den);
        if (std::find(excluded.begin(), excluded.end(), r) == excluded.end()) return r;
    }
}

}  // namespace sqdisc
