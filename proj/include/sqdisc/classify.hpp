#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sqdisc/rational.hpp"
#include "sqdisc/weierstrass.hpp"

namespace sqdisc {

enum class DiscBranch { GenericJ, JZero, J1728 };

std::string to_string(DiscBranch b);

/// Outcome of the j-invariant criterion for a square discriminant.
///
/// GenericJ: square iff j - 1728 = t^2; witness is the positive t.
/// J1728:    square iff -A = s^2 for the curve's own short model; witness is
///           the positive s.
/// JZero:    never square; no witness.
struct SquareDiscVerdict {
    bool is_square = false;
    std::optional<Rational> witness;
    DiscBranch branch = DiscBranch::GenericJ;
};

/// Decides squareness of the discriminant directly. SingularModelError on Delta = 0.
bool square_disc_direct(const GeneralModel& m);

/// Decides the same question from j, reducing the model itself when j = 1728.
SquareDiscVerdict square_disc_by_j(const GeneralModel& m);

/// A short model with j-invariant j0: the special curves y^2 = x^3 + 1 and
/// y^2 = x^3 + x at 0 and 1728, otherwise
/// y^2 = x^3 - 27 j0/(j0 - 1728) x + 54 j0/(j0 - 1728).
ShortModel curve_from_j(const Rational& j0);

/// The thirteen j-invariants of CM elliptic curves over Q.
const std::array<Rational, 13>& cm_j_invariants();
bool is_cm_j(const Rational& j);

struct LabeledModel {
    std::string label;
    ShortModel model;
};

/// The isogeny class of y^2 = x^3 - t^2 x: E_{-t^2}, E_{4t^2}, E'_{+t}, E'_{-t},
/// with the discriminant and j identities checked.
struct CmIsogenyGraph {
    std::array<LabeledModel, 4> curves;
    /// Delta(E_{4t^2}) = -2^12 t^6, Delta(E'_{+-t}) = 2^9 t^6, j values 1728 and 287496.
    bool identities_hold = false;
    /// Only E_{-t^2} has a square discriminant.
    bool only_base_square = false;
};

CmIsogenyGraph cm_isogeny_graph(const Rational& t);

struct CmScanEntry {
    Rational j;
    Rational j_minus_1728;
    bool is_square = false;
};

/// For every CM j other than 1728, whether j - 1728 is a square (all false).
std::vector<CmScanEntry> cm_nonsquare_scan();

}  // namespace sqdisc
