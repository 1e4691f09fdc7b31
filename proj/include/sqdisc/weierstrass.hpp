#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "sqdisc/rational.hpp"

namespace sqdisc {

struct ShortModel;

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q. Models with zero
/// discriminant are representable; see is_singular().
struct GeneralModel {
    Rational a1, a2, a3, a4, a6;

    bool is_singular() const;
    friend bool operator==(const GeneralModel&, const GeneralModel&) = default;
    std::string str() const;
};

/// y^2 = x^3 + A x + B.
struct ShortModel {
    Rational A, B;

    GeneralModel general() const { return {0, 0, 0, A, B}; }
    Rational discriminant() const;
    /// j-invariant; SingularModelError when the discriminant vanishes.
    Rational j() const;
    bool is_singular() const { return discriminant().is_zero(); }
    friend bool operator==(const ShortModel&, const ShortModel&) = default;
    std::string str() const;
};

/// x = u^2 x' + r,  y = u^3 y' + u^2 s x' + t.
struct ChangeOfVariables {
    Rational u = 1, r, s, t;

    static ChangeOfVariables identity() { return {}; }
    ChangeOfVariables inverse() const;
    /// Applying *this and then `next` equals applying the returned change once.
    ChangeOfVariables then(const ChangeOfVariables& next) const;
    friend bool operator==(const ChangeOfVariables&, const ChangeOfVariables&) = default;
};

struct Invariants {
    Rational b2, b4, b6, b8, c4, c6, discriminant;
    /// Absent when the discriminant is zero.
    std::optional<Rational> j;
};

Invariants invariants(const GeneralModel& m);

/// The model in the primed coordinates. Errors if u = 0.
GeneralModel transform(const GeneralModel& m, const ChangeOfVariables& c);

/// Short model isomorphic to m, with the change of variables taking m to it.
/// Models already in short form come back unchanged; otherwise u = 1/k for the
/// smallest k making A and B integral.
std::pair<ShortModel, ChangeOfVariables> short_form(const GeneralModel& m);

/// E^d : y^2 = x^3 + d^2 A x + d^3 B.
ShortModel quadratic_twist(const ShortModel& m, const Rational& d);
/// y^2 = x^3 + d A x  (j = 1728).
ShortModel quartic_twist(const Rational& A, const Rational& d);
/// y^2 = x^3 + d B  (j = 0).
ShortModel sextic_twist(const Rational& B, const Rational& d);

/// Parses "[A,B]" or "[a1,a2,a3,a4,a6]". Entries may be bare or quoted
/// rationals ("p/q"). Short input is widened to a general model.
GeneralModel parse_model(std::string_view text);
/// The 2- or 5-tuple form of a model, entries as "p/q" strings.
std::string serialize_model(const GeneralModel& m);
std::string serialize_model(const ShortModel& m);

}  // namespace sqdisc
