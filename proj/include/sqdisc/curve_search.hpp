#pragma once

#include <string>
#include <vector>

#include "sqdisc/families.hpp"
#include "sqdisc/poly.hpp"

namespace sqdisc {

/// floor((deg f - 1) / 2) for a squarefree f of degree >= 1. Errors with
/// "model is singular; take squarefree part first" otherwise.
int genus_hyperelliptic(const Poly& f);

struct SearchOptions {
    /// Worker threads for the denominator partition; 0 picks hardware concurrency.
    unsigned threads = 1;
};

/// All affine points (h, y) on y^2 = f(h) with h = a/b, gcd(a, b) = 1,
/// |a| <= H, 0 < b <= H. Ordered by b, then a, then y.
std::vector<PointC> search_hyperelliptic(const Poly& f, long H, const SearchOptions& opts = {});

/// Same box for the pair y^2 = f(h), z^2 = g(h).
std::vector<PointX> search_pair(const Poly& f, const Poly& g, long H, const SearchOptions& opts = {});

std::vector<PointC> search_C(int N, long H, const SearchOptions& opts = {});
std::vector<PointX> search_X(int N, long H, const SearchOptions& opts = {});

/// Canonical search order of a point.
bool search_order_less(const PointC& a, const PointC& b);
bool search_order_less(const PointX& a, const PointX& b);

struct CuspVerdict {
    std::string curve;  // "C" or "X"
    std::string point;  // "(h, y)" or "(h, y, z)"
    Rational h;
    bool pole_of_j = false;
    bool pole_of_jprime = false;
    /// C points must be poles of j_N; X points of j_N or j'_N.
    bool ok = false;
};

/// Checks that every listed affine point of C_N and X_N sits over a cusp.
std::vector<CuspVerdict> cusp_check(int N);

}  // namespace sqdisc
