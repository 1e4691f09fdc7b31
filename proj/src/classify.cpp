#include "sqdisc/classify.hpp"

#include <algorithm>

#include "sqdisc/errors.hpp"
#include "sqdisc/square_class.hpp"

namespace sqdisc {

std::string to_string(DiscBranch b) {
    switch (b) {
        case DiscBranch::GenericJ: return "generic-j";
        case DiscBranch::JZero: return "j-zero";
        case DiscBranch::J1728: return "j-1728";
    }
    return "unknown";
}

namespace {

Invariants elliptic_invariants(const GeneralModel& m) {
    Invariants inv = invariants(m);
    if (inv.discriminant.is_zero()) {
        throw SingularModelError("model is singular (discriminant 0): " + m.str());
    }
    return inv;
}

Rational prime_power(long p, unsigned long e) { return Rational(ipow(Integer(p), e)); }

}  // namespace

bool square_disc_direct(const GeneralModel& m) {
    return is_square_rational(elliptic_invariants(m).discriminant);
}

SquareDiscVerdict square_disc_by_j(const GeneralModel& m) {
    const Rational j = *elliptic_invariants(m).j;
    SquareDiscVerdict v;
    if (j.is_zero()) {
        v.branch = DiscBranch::JZero;
        return v;
    }
    if (j == Rational(1728)) {
        v.branch = DiscBranch::J1728;
        const ShortModel s = short_form(m).first;
        v.witness = rational_sqrt(-s.A);
        v.is_square = v.witness.has_value();
        return v;
    }
    v.branch = DiscBranch::GenericJ;
    v.witness = rational_sqrt(j - Rational(1728));
    v.is_square = v.witness.has_value();
    return v;
}

ShortModel curve_from_j(const Rational& j0) {
    if (j0.is_zero()) return {0, 1};
    if (j0 == Rational(1728)) return {1, 0};
    const Rational k = j0 / (j0 - Rational(1728));
    return {Rational(-27) * k, Rational(54) * k};
}

const std::array<Rational, 13>& cm_j_invariants() {
    static const std::array<Rational, 13> values = [] {
        auto p = prime_power;
        return std::array<Rational, 13>{
            Rational(0),
            p(2, 4) * p(3, 3) * p(5, 3),
            -p(2, 15) * p(3, 1) * p(5, 3),
            p(2, 6) * p(3, 3),
            p(2, 3) * p(3, 3) * p(11, 3),
            -p(3, 3) * p(5, 3),
            p(3, 3) * p(5, 3) * p(17, 3),
            p(2, 6) * p(5, 3),
            -p(2, 15),
            -p(2, 15) * p(3, 3),
            -p(2, 18) * p(3, 3) * p(5, 3),
            -p(2, 15) * p(3, 3) * p(5, 3) * p(11, 3),
            -p(2, 18) * p(3, 3) * p(5, 3) * p(23, 3) * p(29, 3),
        };
    }();
    return values;
}

bool is_cm_j(const Rational& j) {
    const auto& set = cm_j_invariants();
    return std::find(set.begin(), set.end(), j) != set.end();
}

CmIsogenyGraph cm_isogeny_graph(const Rational& t) {
    if (t.is_zero()) {
        throw DomainError("cm_isogeny_graph: t must be nonzero");
    }
    const Rational t2 = t * t, t3 = t2 * t, t6 = t3 * t3;
    CmIsogenyGraph g;
    g.curves = {{
        {"E_{-t^2}", ShortModel{-t2, 0}},
        {"E_{4t^2}", ShortModel{Rational(4) * t2, 0}},
        {"E'_{+t}", ShortModel{Rational(-11) * t2, Rational(14) * t3}},
        {"E'_{-t}", ShortModel{Rational(-11) * t2, Rational(-14) * t3}},
    }};
    const Rational j_prime = prime_power(2, 3) * prime_power(3, 3) * prime_power(11, 3);
    g.identities_hold = g.curves[1].model.discriminant() == Rational(-4096) * t6 &&
                        g.curves[2].model.discriminant() == Rational(512) * t6 &&
                        g.curves[3].model.discriminant() == Rational(512) * t6 &&
                        g.curves[0].model.j() == Rational(1728) &&
                        g.curves[1].model.j() == Rational(1728) && g.curves[2].model.j() == j_prime &&
                        g.curves[3].model.j() == j_prime;
    g.only_base_square = is_square_rational(g.curves[0].model.discriminant());
    for (std::size_t i = 1; i < g.curves.size(); ++i) {
        g.only_base_square = g.only_base_square && !is_square_rational(g.curves[i].model.discriminant());
    }
    return g;
}

std::vector<CmScanEntry> cm_nonsquare_scan() {
    std::vector<CmScanEntry> out;
    for (const auto& j : cm_j_invariants()) {
        if (j == Rational(1728)) continue;
        const Rational d = j - Rational(1728);
        out.push_back({j, d, is_square_rational(d)});
    }
    return out;
}

}  // namespace sqdisc
