#include "sqdisc/weierstrass.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "sqdisc/errors.hpp"
#include "sqdisc/square_class.hpp"

namespace sqdisc {

Invariants invariants(const GeneralModel& m) {
    const auto& [a1, a2, a3, a4, a6] = m;
    Invariants inv;
    inv.b2 = a1 * a1 + Rational(4) * a2;
    inv.b4 = Rational(2) * a4 + a1 * a3;
    inv.b6 = a3 * a3 + Rational(4) * a6;
    inv.b8 = a1 * a1 * a6 + Rational(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    inv.c4 = inv.b2 * inv.b2 - Rational(24) * inv.b4;
    inv.c6 = -inv.b2.pow(3) + Rational(36) * inv.b2 * inv.b4 - Rational(216) * inv.b6;
    inv.discriminant = -inv.b2 * inv.b2 * inv.b8 - Rational(8) * inv.b4.pow(3) -
                       Rational(27) * inv.b6 * inv.b6 + Rational(9) * inv.b2 * inv.b4 * inv.b6;
    if (!inv.discriminant.is_zero()) {
        inv.j = inv.c4.pow(3) / inv.discriminant;
    }
    return inv;
}

bool GeneralModel::is_singular() const { return invariants(*this).discriminant.is_zero(); }

std::string GeneralModel::str() const {
    return "y^2 + (" + a1.str() + ")xy + (" + a3.str() + ")y = x^3 + (" + a2.str() + ")x^2 + (" +
           a4.str() + ")x + (" + a6.str() + ")";
}

Rational ShortModel::discriminant() const {
    return Rational(-16) * (Rational(4) * A.pow(3) + Rational(27) * B * B);
}

Rational ShortModel::j() const {
    Rational d = discriminant();
    if (d.is_zero()) {
        throw SingularModelError("j-invariant of a singular model " + str());
    }
    return Rational(-1728) * (Rational(4) * A).pow(3) / d;
}

std::string ShortModel::str() const { return "y^2 = x^3 + (" + A.str() + ")x + (" + B.str() + ")"; }

ChangeOfVariables ChangeOfVariables::inverse() const {
    if (u.is_zero()) {
        throw DomainError("change of variables with u = 0");
    }
    const Rational ui = u.inverse();
    return {ui, -r * ui * ui, -s * ui, (r * s - t) * ui.pow(3)};
}

ChangeOfVariables ChangeOfVariables::then(const ChangeOfVariables& n) const {
    return {u * n.u, r + u * u * n.r, s + u * n.s, t + u * u * s * n.r + u.pow(3) * n.t};
}

GeneralModel transform(const GeneralModel& m, const ChangeOfVariables& c) {
    if (c.u.is_zero()) {
        throw DomainError("transform: u must be nonzero");
    }
    const auto& [a1, a2, a3, a4, a6] = m;
    const auto& [u, r, s, t] = c;
    const Rational ui = u.inverse();
    GeneralModel out;
    out.a1 = (a1 + Rational(2) * s) * ui;
    out.a2 = (a2 - s * a1 + Rational(3) * r - s * s) * ui.pow(2);
    out.a3 = (a3 + r * a1 + Rational(2) * t) * ui.pow(3);
    out.a4 = (a4 - s * a3 + Rational(2) * r * a2 - (t + r * s) * a1 + Rational(3) * r * r -
              Rational(2) * s * t) *
             ui.pow(4);
    out.a6 = (a6 + r * a4 + r * r * a2 + r.pow(3) - t * a3 - t * t - r * t * a1) * ui.pow(6);
    return out;
}

namespace {

// Smallest k > 0 with k^4 A and k^6 B integral.
Integer clearing_scale(const Rational& A, const Rational& B) {
    std::map<Integer, unsigned> need;
    try {
        for (const auto& [p, e] : factor(A.den())) need[p] = std::max(need[p], (e + 3) / 4);
        for (const auto& [p, e] : factor(B.den())) need[p] = std::max(need[p], (e + 5) / 6);
    } catch (const FactorizationError&) {
        return A.den() * B.den();
    }
    Integer k = 1;
    for (const auto& [p, e] : need) k *= ipow(p, e);
    return k;
}

}  // namespace

std::pair<ShortModel, ChangeOfVariables> short_form(const GeneralModel& m) {
    if (m.a1.is_zero() && m.a2.is_zero() && m.a3.is_zero()) {
        return {ShortModel{m.a4, m.a6}, ChangeOfVariables::identity()};
    }
    const Invariants inv = invariants(m);
    // Completing the square and the cube with u = 1 gives
    // y^2 = x^3 - c4/48 x - c6/864.
    ChangeOfVariables c;
    c.r = -inv.b2 / Rational(12);
    c.s = -m.a1 / Rational(2);
    c.t = -(m.a1 * c.r + m.a3) / Rational(2);
    Rational A = -inv.c4 / Rational(48);
    Rational B = -inv.c6 / Rational(864);
    const Integer k = clearing_scale(A, B);
    ChangeOfVariables scale;
    scale.u = Rational(Integer(1), k);
    c = c.then(scale);
    ShortModel out{A * Rational(k).pow(4), B * Rational(k).pow(6)};
    return {out, c};
}

ShortModel quadratic_twist(const ShortModel& m, const Rational& d) {
    if (d.is_zero()) {
        throw DomainError("quadratic_twist: d must be nonzero");
    }
    return {d * d * m.A, d.pow(3) * m.B};
}

ShortModel quartic_twist(const Rational& A, const Rational& d) {
    if (A.is_zero() || d.is_zero()) {
        throw DomainError("quartic_twist: A and d must be nonzero");
    }
    return {d * A, 0};
}

ShortModel sextic_twist(const Rational& B, const Rational& d) {
    if (B.is_zero() || d.is_zero()) {
        throw DomainError("sextic_twist: B and d must be nonzero");
    }
    return {0, d * B};
}

GeneralModel parse_model(std::string_view text) {
    std::string_view t = text;
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!t.empty() && is_space(t.front())) t.remove_prefix(1);
    while (!t.empty() && is_space(t.back())) t.remove_suffix(1);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
        throw ParseError("curve must be a bracketed list: '" + std::string(text) + "'");
    }
    t = t.substr(1, t.size() - 2);
    std::vector<Rational> vals;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= t.size(); ++i) {
        if (i == t.size() || t[i] == ',') {
            std::string item(t.substr(start, i - start));
            std::string cleaned;
            for (char c : item) {
                if (c != '"' && c != '\'') cleaned.push_back(c);
            }
            vals.push_back(Rational::parse(cleaned));
            start = i + 1;
        }
    }
    if (vals.size() == 2) return GeneralModel{0, 0, 0, vals[0], vals[1]};
    if (vals.size() == 5) return GeneralModel{vals[0], vals[1], vals[2], vals[3], vals[4]};
    throw ParseError("curve needs 2 or 5 coefficients, got " + std::to_string(vals.size()));
}

std::string serialize_model(const GeneralModel& m) {
    return "[\"" + m.a1.str() + "\",\"" + m.a2.str() + "\",\"" + m.a3.str() + "\",\"" + m.a4.str() +
           "\",\"" + m.a6.str() + "\"]";
}

std::string serialize_model(const ShortModel& m) {
    return "[\"" + m.A.str() + "\",\"" + m.B.str() + "\"]";
}

}  // namespace sqdisc
