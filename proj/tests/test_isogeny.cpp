#include <doctest.h>

#include <algorithm>
#include <fstream>

#include "sqdisc/classify.hpp"
#include "sqdisc/errors.hpp"
#include "sqdisc/families.hpp"
#include "sqdisc/isogeny.hpp"
#include "sqdisc/sampling.hpp"
#include "test_util.hpp"

using namespace sqdisc;
using sqdisc::testing::Q;

namespace {

bool contains(const std::vector<Rational>& v, const Rational& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// Chain search from an arbitrary start model rather than curve_from_j.
bool chain_from(const ShortModel& start, int N, const Rational& h0) {
    return find_chain(start, N, family(N).jprime_map(h0)).has_value();
}

}  // namespace

TEST_CASE("two_torsion_x") {
    CHECK(two_torsion_x({-1, 0}) == std::vector<Rational>{-1, 0, 1});
    CHECK(contains(two_torsion_x({-11, 14}), 2));
    CHECK(two_torsion_x({0, 1}) == std::vector<Rational>{-1});
    CHECK(two_torsion_x({1, 1}).empty());
    CHECK(two_torsion_x({Q("-1/4"), 0}) == std::vector<Rational>{Q("-1/2"), 0, Q("1/2")});
}

TEST_CASE("velu_2") {
    const ShortModel a = velu_2({-1, 0}, 0);
    CHECK(a == ShortModel{4, 0});
    CHECK(a.j() == 1728);
    CHECK(a.discriminant() == -4096);
    const ShortModel b = velu_2({-11, 14}, 2);
    CHECK(b == ShortModel{-16, 0});
    CHECK(b.j() == 1728);
    const ShortModel c = velu_2({-1, 0}, 1);
    CHECK(c == ShortModel{-11, -14});
    CHECK(c.j() == 287496);
    CHECK_THROWS_AS((velu_2({-1, 0}, 2)), DomainError);
}

TEST_CASE("velu_2 dual step returns to the domain's j") {
    Sampler rng(61);
    int tested = 0;
    while (tested < 100) {
        // y^2 = (x - e)(x^2 + e x + c) has the rational 2-torsion point (e, 0).
        const Rational e = rng.rational(20, 5), c = rng.rational(20, 5);
        const ShortModel m{c - e * e, -e * c};
        if (m.is_singular()) continue;
        ++tested;
        const ShortModel img = velu_2(m, e);
        const Rational dual = velu_2_dual_kernel(e);
        REQUIRE(contains(two_torsion_x(img), dual));
        CHECK(velu_2(img, dual).j() == m.j());
    }
}

TEST_CASE("three_kernel_x and velu_odd") {
    CHECK(three_kernel_x({0, 4}) == std::vector<Rational>{0});
    CHECK(three_kernel_x({1, 0}).empty());
    CHECK(three_kernel_x({-1, 0}).empty());

    const auto k16 = three_kernel_x({0, 16});
    CHECK(k16 == std::vector<Rational>{-4, 0});
    // One kernel is the CM endomorphism (back to j = 0), the other lands on the order of discriminant -27.
    std::vector<Rational> images;
    for (const Rational& x0 : k16) images.push_back(velu_odd({0, 16}, x0).j());
    std::sort(images.begin(), images.end());
    CHECK(images == std::vector<Rational>{-12288000, 0});
    CHECK_THROWS_AS((velu_odd({0, 16}, 1)), DomainError);
    CHECK_THROWS_AS((velu_odd({0, 16}, 0, 5)), DomainError);

    // Level 3: from j_3(h0) one 3-step reaches j'_3(h0).
    const IsogenyFamily& f = family(3);
    CHECK(f.j_map(1) == 1792);
    CHECK(f.jprime_map(1) == Rational(28) * Rational(244).pow(3));
    for (const Rational& h0 : {Q("9"), Q("1")}) {
        const ShortModel start = curve_from_j(f.j_map(h0));
        bool reached = false;
        for (const Rational& x0 : three_kernel_x(start)) reached |= velu_odd(start, x0).j() == f.jprime_map(h0);
        CHECK(reached);
    }
    CHECK(f.jprime_map(9) == 790272);
}

TEST_CASE("chain factorizations") {
    CHECK(chain_factorizations(4) == std::vector<std::vector<int>>{{2, 2}});
    CHECK(chain_factorizations(6) == std::vector<std::vector<int>>{{2, 3}, {3, 2}});
    CHECK(chain_factorizations(8) == std::vector<std::vector<int>>{{2, 2, 2}});
    CHECK_THROWS_AS(chain_factorizations(7), DomainError);
}

TEST_CASE("chain_check") {
    CHECK(chain_check(2, 36));
    CHECK(family(4).j_map(9) == Rational(241).pow(3) / 225);
    CHECK(chain_check(4, 9));
    CHECK(chain_check(6, Q("8/3")));
    CHECK(chain_check(8, 3));
    CHECK_THROWS_AS(chain_check(2, 0), PoleError);

    // Chains are cyclic: a 2-step followed by its dual would only reach j again.
    const auto steps = find_chain(curve_from_j(family(4).j_map(9)), 4, family(4).jprime_map(9));
    REQUIRE(steps.has_value());
    CHECK(steps->size() == 2);
    CHECK(steps->at(1).kernel_x != velu_2_dual_kernel(steps->at(0).kernel_x));
    // A mismatched pair fails.
    CHECK_FALSE(find_chain(curve_from_j(family(2).j_map(36)), 2, family(2).jprime_map(37)).has_value());
}

TEST_CASE("chain_check is invariant under quadratic twists of the start model") {
    Sampler rng(67);
    const int levels[] = {2, 3, 4, 6, 8};
    for (int i = 0; i < 50; ++i) {
        const int N = levels[rng.integer(0, 4)];
        const IsogenyFamily& f = family(N);
        Rational h0;
        do {
            h0 = rng.rational(30, 10, false);
        } while (f.j_map.is_pole(h0) || f.jprime_map.is_pole(h0) || f.j_map(h0) == 0 || f.j_map(h0) == 1728);
        const Rational d = rng.rational(15, 7, false);
        const ShortModel start = curve_from_j(f.j_map(h0));
        CHECK(chain_from(start, N, h0) == chain_from(quadratic_twist(start, d), N, h0));
        CHECK(chain_check(N, h0));
    }
}

TEST_CASE("modular polynomials") {
    const auto& table = modular_polynomials();
    for (int N : {2, 3, 7}) {
        REQUIRE(table.has(N));
        const ModularPolynomial& phi = table.get(N);
        CHECK(phi.degree() == N + 1);
        CHECK(phi.coeff(N + 1, 0) == 1);
        CHECK(phi.coeff(0, N + 1) == 1);
    }
    const ModularPolynomial& phi2 = table.get(2);
    CHECK(phi2.coeff(2, 2) == -1);
    CHECK(phi2.coeff(1, 2) == 1488);
    CHECK(phi2.coeff(2, 0) == -162000);
    CHECK(phi2.coeff(1, 1) == Integer("40773375"));
    CHECK(phi2.coeff(0, 0) == Integer("-157464000000000"));
    for (const auto& sc : table.spot_checks()) CHECK_MESSAGE(sc.passed, sc.name);

    CHECK(modular_poly_check(2, 1728, 287496));
    CHECK(modular_poly_check(2, 1728, 1728));  // y^2 = x^3 - x -> y^2 = x^3 + 4x
    CHECK_FALSE(modular_poly_check(2, 1728, 0));
    const IsogenyFamily& f7 = family(7);
    CHECK(modular_poly_check(7, f7.j_map(1), f7.jprime_map(1)));
    CHECK(modular_poly_check(7, f7.jprime_map(1), f7.j_map(1)));
    CHECK_FALSE(modular_poly_check(7, f7.j_map(1), f7.jprime_map(2)));
    CHECK_THROWS_AS(modular_poly_check(5, 1, 1), DataError);
}

TEST_CASE("modular polynomial loader rejects corrupted data") {
    const auto good = data_dir() / "modular_polynomials.txt";
    CHECK_NOTHROW(ModularPolynomialTable::load(good));

    // Phi_2 with its constant term changed by one.
    std::ifstream in(good);
    const auto bad = std::filesystem::temp_directory_path() / "sqdisc_phi_bad.txt";
    std::ofstream out(bad);
    bool changed = false;
    for (std::string line; std::getline(in, line);) {
        if (line == "2 0 0 -157464000000000") {
            line = "2 0 0 -157464000000001";
            changed = true;
        }
        out << line << "\n";
    }
    out.close();
    REQUIRE(changed);
    CHECK_THROWS_AS(ModularPolynomialTable::load(bad), DataError);
}

TEST_CASE("oracles agree") {
    Sampler rng(71);
    for (int N : {2, 3}) {
        const IsogenyFamily& f = family(N);
        for (int i = 0; i < 100; ++i) {
            const Rational h0 = rng.rational(40, 40, false);
            if (f.j_map.is_pole(h0) || f.jprime_map.is_pole(h0)) continue;
            CHECK(chain_check(N, h0) == modular_poly_check(N, f.j_map(h0), f.jprime_map(h0)));
        }
    }
}
