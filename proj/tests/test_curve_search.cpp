#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "sqdisc/curve_search.hpp"
#include "sqdisc/errors.hpp"
#include "sqdisc/families.hpp"
#include "sqdisc/square_class.hpp"
#include "test_util.hpp"

using namespace sqdisc;
using sqdisc::testing::P;
using sqdisc::testing::Q;

namespace {

std::vector<PointC> pts(std::initializer_list<std::pair<const char*, const char*>> list) {
    std::vector<PointC> v;
    for (const auto& [h, y] : list) v.push_back({Q(h), Q(y)});
    std::sort(v.begin(), v.end(), [](const PointC& a, const PointC& b) { return search_order_less(a, b); });
    return v;
}

}  // namespace

TEST_CASE("genus_hyperelliptic") {
    CHECK(genus_hyperelliptic(family(5).F) == 1);
    CHECK(genus_hyperelliptic(family(2).F) == 0);
    CHECK(genus_hyperelliptic(family(25).F) == 3);
    const int expected[] = {0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 3};
    int i = 0;
    for (int N : kGenusZeroLevels) CHECK(genus_hyperelliptic(family(N).F) == expected[i++]);
    CHECK_THROWS_WITH_AS(genus_hyperelliptic(P("h(h+1)^2")), "model is singular; take squarefree part first",
                         DomainError);
}

TEST_CASE("search_C reproduces the finite point sets") {
    CHECK(search_C(10, 30) == pts({{"0", "0"}, {"4", "0"}, {"-1", "5"}, {"-1", "-5"}}));
    CHECK(search_C(12, 10) == pts({{"0", "3"}, {"0", "-3"}, {"3", "0"}, {"-3", "0"}, {"1", "0"}, {"-1", "0"}}));
    CHECK(search_C(5, 30) == pts({{"0", "0"}}));
}

TEST_CASE("search ordering is by denominator, numerator, then y") {
    const auto found = search_C(2, 5);
    REQUIRE(found.size() > 3);
    CHECK(std::is_sorted(found.begin(), found.end(),
                         [](const PointC& a, const PointC& b) { return search_order_less(a, b); }));
    CHECK(found.front().h.den() == 1);
}

TEST_CASE("search_C at small height agrees with brute force") {
    // Independent path: enumerate the box directly and test squareness.
    const Poly F = family(2).F;
    std::vector<PointC> brute;
    for (long b = 1; b <= 5; ++b) {
        for (long a = -5; a <= 5; ++a) {
            if (std::gcd(a, b) != 1) continue;
            const Rational h{Integer(a), Integer(b)};
            if (const auto y = rational_sqrt(F(h))) {
                brute.push_back({h, *y});
                if (!y->is_zero()) brute.push_back({h, -*y});
            }
        }
    }
    std::sort(brute.begin(), brute.end(), [](const PointC& a, const PointC& b) { return search_order_less(a, b); });
    CHECK(search_C(2, 5) == brute);
}

TEST_CASE("search_X") {
    const auto x6 = search_X(6, 12);
    auto expected6 = family(6).known_points_X;
    std::sort(expected6.begin(), expected6.end(),
              [](const PointX& a, const PointX& b) { return search_order_less(a, b); });
    CHECK(x6 == expected6);
    CHECK(x6.size() == 6);
    CHECK(search_X(8, 10) == std::vector<PointX>{{4, 0, -2}, {4, 0, 2}});

    // F_3 = G_3 = h: every point has h a square and y, z = +-sqrt(h).
    for (const auto& p : search_X(3, 5)) {
        CHECK(p.y * p.y == p.h);
        CHECK(p.z * p.z == p.h);
        CHECK((cstar_membership(3, p.h) || p.h.is_zero()));
    }
}

TEST_CASE("soundness, monotonicity and thread independence") {
    for (int N : {2, 5, 8, 10, 12}) {
        const IsogenyFamily& f = family(N);
        const auto small = search_C(N, 8);
        const auto large = search_C(N, 16);
        for (const auto& p : large) CHECK(p.y * p.y == f.F(p.h));
        CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end(),
                            [](const PointC& a, const PointC& b) { return search_order_less(a, b); }));
        CHECK(search_C(N, 16, SearchOptions{4}) == large);
    }
    const auto x = search_X(7, 12);
    for (const auto& p : x) {
        CHECK(p.y * p.y == family(7).F(p.h));
        CHECK(p.z * p.z == family(7).G(p.h));
    }
    CHECK(search_X(7, 12, SearchOptions{3}) == x);
}

TEST_CASE("cusp_check") {
    for (int N : kGenusZeroLevels) {
        for (const auto& v : cusp_check(N)) CHECK_MESSAGE(v.ok, "N = ", N, " ", v.curve, " ", v.point);
    }
    const auto c10 = cusp_check(10);
    const auto it = std::find_if(c10.begin(), c10.end(), [](const CuspVerdict& v) { return v.h == -1; });
    REQUIRE(it != c10.end());
    CHECK(it->pole_of_jprime);
    CHECK(family(10).jprime_map.den()(-1) == 0);
    CHECK(family(5).j_map.is_pole(0));
    CHECK(family(6).j_map.is_pole(-9));
}
