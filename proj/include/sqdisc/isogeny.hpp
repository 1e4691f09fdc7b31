#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sqdisc/rational.hpp"
#include "sqdisc/weierstrass.hpp"

namespace sqdisc {

/// One Velu step. For degree 2, kernel_x is the x-coordinate of the rational
/// 2-torsion point; for degree 3 it is a rational root of the 3-division
/// polynomial (the kernel is {O, (x0, +-y0)}).
struct IsogenyStep {
    int degree = 0;
    ShortModel domain, codomain;
    Rational kernel_x;
};

/// Rational roots of x^3 + A x + B.
std::vector<Rational> two_torsion_x(const ShortModel& m);

/// Codomain of the 2-isogeny with kernel (x0, 0):
/// t = 3 x0^2 + A, w = x0 t, A' = A - 5t, B' = B - 7w.
ShortModel velu_2(const ShortModel& m, const Rational& x0);

/// x-coordinate of the dual kernel on the codomain of velu_2(m, x0).
inline Rational velu_2_dual_kernel(const Rational& x0) { return Rational(-2) * x0; }

/// Rational roots of psi_3 = 3x^4 + 6A x^2 + 12B x - A^2.
std::vector<Rational> three_kernel_x(const ShortModel& m);

/// Codomain of the odd-degree isogeny whose kernel is generated by the point
/// with x-coordinate x0. Only degree 3 is supported:
/// v = 6 x0^2 + 2A, w = 4(x0^3 + A x0 + B) + x0 v, A' = A - 5v, B' = B - 7w.
ShortModel velu_odd(const ShortModel& m, const Rational& x0, int degree = 3);

/// Degree sequences whose product is N, in every order that yields a cyclic
/// N-isogeny: 2 -> {2}, 3 -> {3}, 4 -> {2,2}, 6 -> {2,3},{3,2}, 8 -> {2,2,2}.
std::vector<std::vector<int>> chain_factorizations(int N);

/// Short models standing for every Q-isomorphism class with j = j0 that can
/// behave differently under rational 2- and 3-isogenies. One model away from
/// j in {0, 1728}; y^2 = x^3 +- x at 1728; y^2 = x^3 + 1, x^3 + 2 at 0.
std::vector<ShortModel> chain_start_models(const Rational& j0);

/// A non-backtracking chain of Velu steps of total degree N from `start` to a
/// curve with j = target_j, if one exists.
std::optional<std::vector<IsogenyStep>> find_chain(const ShortModel& start, int N, const Rational& target_j);

/// True iff some curve with j = j_N(h0) reaches j'_N(h0) by a cyclic chain of
/// rational 2- and 3-isogenies of total degree N (N in {2,3,4,6,8}).
/// PoleError when h0 is a cusp.
bool chain_check(int N, const Rational& h0);

/// Phi_N(X, Y) with integer coefficients, stored for i >= k and mirrored.
class ModularPolynomial {
public:
    ModularPolynomial() = default;
    ModularPolynomial(int N, std::map<std::pair<int, int>, Integer> lower);

    int level() const { return N_; }
    /// Degree in X (equals the degree in Y).
    int degree() const;
    Integer coeff(int i, int k) const;
    Rational operator()(const Rational& x, const Rational& y) const;
    std::size_t stored_terms() const { return lower_.size(); }

private:
    int N_ = 0;
    std::map<std::pair<int, int>, Integer> lower_;
};

class ModularPolynomialTable {
public:
    /// Reads "N i k c" lines and runs the spot checks; DataError on failure.
    static ModularPolynomialTable load(const std::filesystem::path& file);

    bool has(int N) const { return polys_.count(N) != 0; }
    const ModularPolynomial& get(int N) const;

    struct SpotCheck {
        int N = 0;
        std::string name;
        bool passed = false;
    };
    const std::vector<SpotCheck>& spot_checks() const { return checks_; }

private:
    std::map<int, ModularPolynomial> polys_;
    std::vector<SpotCheck> checks_;
};

/// Process-wide table from data_dir()/modular_polynomials.txt.
const ModularPolynomialTable& modular_polynomials();

/// Phi_N(j1, j2) == 0 exactly, N in {2, 3, 7}.
bool modular_poly_check(int N, const Rational& j1, const Rational& j2);

}  // namespace sqdisc
