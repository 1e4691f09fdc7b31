#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sqdisc/poly.hpp"
#include "sqdisc/rational.hpp"

namespace sqdisc {

struct PointC {
    Rational h, y;
    friend auto operator<=>(const PointC&, const PointC&) = default;
};

struct PointX {
    Rational h, y, z;
    friend auto operator<=>(const PointX&, const PointX&) = default;
};

/// One N of the genus-0 X_0(N) list with everything the tables say about it.
struct IsogenyFamily {
    int N = 0;
    RationalFunction j_map, jprime_map;  // in h
    Poly F, G;                            // in h
    std::optional<RationalFunction> h_param_C, h_param_X;  // in t
    std::optional<RationalFunction> thm1_j;                // in t
    std::optional<std::pair<RationalFunction, RationalFunction>> thm2_pair;  // in t
    std::optional<int> genus_C, genus_X;
    std::vector<PointC> known_points_C;
    std::vector<PointX> known_points_X;
};

/// A row of the finite (non-genus-0) isogeny table.
struct FiniteIsogenyCase {
    int N = 0;
    Rational j, j_prime;
    bool has_cm = false;
};

class Catalog {
public:
    /// Parses tables.txt and runs the factored-vs-expanded self-check.
    /// DataError on any malformed or inconsistent entry.
    static Catalog load(const std::filesystem::path& tables_file);

    const IsogenyFamily& family(int N) const;
    bool has_family(int N) const { return families_.count(N) != 0; }
    const std::map<int, IsogenyFamily>& families() const { return families_; }
    const std::vector<FiniteIsogenyCase>& finite_cases() const { return finite_; }

private:
    std::map<int, IsogenyFamily> families_;
    std::vector<FiniteIsogenyCase> finite_;
};

/// Data directory: $SQDISC_DATA_DIR if set, else the directory configured at build time.
std::filesystem::path default_data_dir();
/// Overrides the directory used by the process-wide catalogs; call before first use.
void set_data_dir(const std::filesystem::path& dir);
std::filesystem::path data_dir();

/// Process-wide catalog, loaded on first use from data_dir()/tables.txt.
const Catalog& catalog();

inline constexpr int kGenusZeroLevels[] = {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25};
inline constexpr int kTheorem1Levels[] = {2, 3, 4, 6, 7, 8};
inline constexpr int kTheorem2Levels[] = {2, 3, 4, 7};
inline constexpr int kNonCmFiniteLevels[] = {11, 15, 17, 21, 37};

/// DomainError for N outside the genus-0 list.
const IsogenyFamily& family(int N);

/// j of a curve with square discriminant and an N-isogeny, N in {2,3,4,6,7,8}.
/// PoleError when t is a pole of the parametrization or lands on a cusp.
Rational theorem1_j(int N, const Rational& t);

/// (j, j') of N-isogenous curves both with square discriminant, N in {2,3,4,7}.
std::pair<Rational, Rational> theorem2_pair(int N, const Rational& t);

/// Rational t at which theorem1_j / theorem2_pair are undefined.
std::vector<Rational> degenerate_parameters_C(int N);
std::vector<Rational> degenerate_parameters_X(int N);

struct CongruenceResult {
    bool F_side = false;
    bool G_side = false;
    /// w with w^2 = (j_N - 1728) F_N, resp. (j'_N - 1728) G_N.
    std::optional<RationalFunction> F_witness, G_witness;
    bool holds() const { return F_side && G_side; }
};

/// F_N = j_N - 1728 and G_N = j'_N - 1728 modulo squares in Q(h).
CongruenceResult verify_congruence(int N);

/// h0 in C*_N(Q): F_N(h0) is a square and h0 is not a pole of j_N.
bool cstar_membership(int N, const Rational& h0);
/// h0 in X*_N(Q): F_N(h0), G_N(h0) squares, h0 not a pole of j_N or j'_N.
bool xstar_membership(int N, const Rational& h0);

struct FiniteScanEntry {
    int N = 0;
    Rational j;
    /// True for the second member j' of the row.
    bool prime = false;
    /// N is one of 11, 15, 17, 21, 37, where j - 1728 must be a non-square.
    bool nonsquare_row = false;
    bool j_minus_1728_square = false;
    bool cm_flag = false;
    bool cm_consistent = true;
};

/// Every j, j' of the non-CM finite rows: j - 1728 must be a non-square.
/// Every CM-flagged row (any N): both j-values must be in the CM set.
std::vector<FiniteScanEntry> finite_cases_scan();

}  // namespace sqdisc
