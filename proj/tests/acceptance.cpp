// Acceptance run: one PASS/FAIL line per criterion, with wall time against its budget.
// Exit status 0 iff every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sqdisc/classify.hpp"
#include "sqdisc/curve_search.hpp"
#include "sqdisc/families.hpp"
#include "sqdisc/isogeny.hpp"
#include "sqdisc/sampling.hpp"
#include "sqdisc/square_class.hpp"
#include "sqdisc/verify.hpp"

using namespace sqdisc;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

void expect(Outcome& o, bool cond, const std::string& what) {
    if (!cond) {
        o.ok = false;
        if (!o.detail.empty()) o.detail += "; ";
        o.detail += what;
    }
}

std::vector<PointC> sorted(std::vector<PointC> v) {
    std::sort(v.begin(), v.end(), [](const PointC& a, const PointC& b) { return search_order_less(a, b); });
    return v;
}

std::vector<PointX> sorted(std::vector<PointX> v) {
    std::sort(v.begin(), v.end(), [](const PointX& a, const PointX& b) { return search_order_less(a, b); });
    return v;
}

Outcome congruences() {
    Outcome o;
    for (int N : kGenusZeroLevels) {
        const CongruenceResult c = verify_congruence(N);
        expect(o, c.F_side, "F-side N=" + std::to_string(N));
        expect(o, c.G_side, "G-side N=" + std::to_string(N));
    }
    o.detail = o.ok ? "28/28 identities" : o.detail;
    return o;
}

Outcome prop_equivalence() {
    Outcome o;
    Sampler rng(Sampler::kDefaultSeed);
    int disagreements = 0, squares = 0;
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
        const GeneralModel m = sample_curve(rng);
        const bool direct = square_disc_direct(m);
        squares += direct;
        disagreements += direct != square_disc_by_j(m).is_square;
    }
    expect(o, disagreements == 0, std::to_string(disagreements) + " disagreements");
    if (o.ok) o.detail = std::to_string(n) + " curves, " + std::to_string(squares) + " square, 0 disagreements";
    return o;
}

Outcome report_outcome(const Report& r, const std::function<bool(const Verdict&)>& select) {
    Outcome o;
    int n = 0;
    for (const auto& v : r.verdicts()) {
        if (!select(v)) continue;
        ++n;
        expect(o, v.ok, v.name);
    }
    expect(o, n > 0, "no verdicts selected");
    if (o.ok) o.detail = std::to_string(n) + " verdicts";
    return o;
}

Outcome theorem1() {
    SuiteOptions opts;
    opts.samples = 100;
    const Report r = suite_thm1(opts);
    return report_outcome(r, [](const Verdict&) { return true; });
}

Outcome theorem2() {
    SuiteOptions opts;
    opts.samples = 50;
    const Report r = suite_thm2(opts);
    return report_outcome(r, [](const Verdict& v) { return v.name.rfind("thm2", 0) == 0; });
}

Outcome tables() {
    Outcome o;
    using C = std::vector<PointC>;
    const std::vector<std::pair<int, C>> expected_C = {
        {5, {{0, 0}}},
        {9, {{3, 0}}},
        {10, {{0, 0}, {4, 0}, {-1, 5}, {-1, -5}}},
        {12, {{0, 3}, {0, -3}, {3, 0}, {-3, 0}, {1, 0}, {-1, 0}}},
        {13, {{0, 0}}},
        {16, {{2, 0}, {-2, 0}}},
        {18, {{0, 0}, {2, 0}, {-1, 3}, {-1, -3}}},
    };
    for (const auto& [N, pts] : expected_C) {
        expect(o, search_C(N, 50) == sorted(pts), "C_" + std::to_string(N) + " point set");
        for (const auto& v : cusp_check(N)) expect(o, v.ok, "cusp " + v.curve + "_" + std::to_string(N) + " " + v.point);
    }
    expect(o, search_X(6, 50) == sorted({{-9, 3, 0}, {-9, -3, 0}, {-8, 0, 1}, {-8, 0, -1}, {0, 0, 3}, {0, 0, -3}}),
           "X_6 point set");
    expect(o, search_X(8, 50) == sorted({{4, 0, 2}, {4, 0, -2}}), "X_8 point set");
    if (o.ok) o.detail = "7 C_N sets, X_6, X_8 at H = 50; all listed points over cusps";
    return o;
}

Outcome genus() {
    Outcome o;
    const int expected[] = {0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 3};
    int i = 0;
    for (int N : kGenusZeroLevels) {
        const int g = genus_hyperelliptic(family(N).F);
        expect(o, g == expected[i++], "g(C_" + std::to_string(N) + ") = " + std::to_string(g));
    }
    if (o.ok) o.detail = "14/14";
    return o;
}

Outcome finite_cases() {
    Outcome o;
    int nonsquare = 0, cm = 0;
    for (const auto& e : finite_cases_scan()) {
        const std::string tag = "N=" + std::to_string(e.N) + " j=" + e.j.str();
        if (e.nonsquare_row) {
            ++nonsquare;
            expect(o, !e.j_minus_1728_square, "square j-1728 at " + tag);
        }
        if (e.cm_flag) {
            ++cm;
            expect(o, is_cm_j(e.j), "CM flag outside the CM set at " + tag);
        }
    }
    if (o.ok) o.detail = std::to_string(nonsquare) + " non-square checks, " + std::to_string(cm) + " CM checks";
    return o;
}

Outcome cm() {
    Outcome o;
    for (const Rational& t : {Rational(1), Rational(2), Rational(3), Rational(5) / Rational(2)}) {
        const CmIsogenyGraph g = cm_isogeny_graph(t);
        const Rational d4 = g.curves[1].model.discriminant();
        expect(o, d4 == Rational(-4096) * t.pow(6), "Delta(E_{4t^2}) t=" + t.str());
        expect(o, !is_square_rational(d4), "E_{4t^2} square t=" + t.str());
        for (int k : {2, 3}) {
            const Rational d = g.curves[k].model.discriminant();
            expect(o, d == Rational(512) * t.pow(6), "Delta(E'_{+-t}) t=" + t.str());
            expect(o, !is_square_rational(d), "E'_{+-t} square t=" + t.str());
        }
        const SquareDiscVerdict v = square_disc_by_j(ShortModel{-t * t, 0}.general());
        expect(o, v.is_square && square_disc_direct(ShortModel{-t * t, 0}.general()), "y^2 = x^3 - t^2 x t=" + t.str());
    }
    int scanned = 0;
    for (const Rational& j : cm_j_invariants()) {
        if (j == Rational(1728)) continue;
        ++scanned;
        expect(o, !is_square_rational(j - Rational(1728)), "CM j=" + j.str());
        expect(o, !square_disc_by_j(curve_from_j(j).general()).is_square, "CM curve j=" + j.str());
    }
    expect(o, scanned == 12, "expected 12 CM j-invariants besides 1728");
    if (o.ok) o.detail = "4 values of t, 12 CM j-invariants";
    return o;
}

Outcome model_identity() {
    Outcome o;
    Sampler rng(Sampler::kDefaultSeed + 9);
    const Rational c = Rational(Integer(ipow(2, 12) * ipow(3, 12)));
    int n = 0;
    while (n < 100) {
        const Rational j0 = rng.rational(10000000, 1000);
        if (j0.is_zero() || j0 == Rational(1728)) continue;
        ++n;
        expect(o, curve_from_j(j0).discriminant() == c * j0 * j0 / (j0 - Rational(1728)).pow(3), "j0=" + j0.str());
    }
    if (o.ok) o.detail = "100 j0";
    return o;
}

Outcome cross_validation() {
    SuiteOptions opts;
    opts.samples = 50;
    Outcome o = report_outcome(suite_thm2(opts), [](const Verdict& v) {
        return v.name.rfind("chain_check and Phi_", 0) == 0 || v.name.rfind("Phi_", 0) == 0;
    });
    expect(o, modular_poly_check(2, 1728, 287496), "Phi_2(1728, 287496) = 0");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_s;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"congruence suite", 10, congruences},
        {"classifier equivalence", 30, prop_equivalence},
        {"thm1 suite", 60, theorem1},
        {"thm2 suite", 300, theorem2},
        {"table reproduction", 600, tables},
        {"genus column", 1, genus},
        {"finite cases", 1, finite_cases},
        {"CM analysis", 1, cm},
        {"model-curve identity", 1, model_identity},
        {"oracle cross-validation", 60, cross_validation},
    };
    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_s) expect(o, false, "over time budget");
        failures += !o.ok;
        std::printf("%s %2d. %-26s %8.3f s (budget %g s)  %s\n", o.ok ? "PASS" : "FAIL", index, c.name, secs,
                    c.budget_s, o.detail.c_str());
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
