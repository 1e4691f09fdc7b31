#include "sqdisc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "sqdisc/classify.hpp"
#include "sqdisc/curve_search.hpp"
#include "sqdisc/errors.hpp"
#include "sqdisc/families.hpp"
#include "sqdisc/isogeny.hpp"
#include "sqdisc/square_class.hpp"
#include "sqdisc/weierstrass.hpp"

namespace sqdisc {

void Report::add(std::string name, bool ok, json value, json counterexample) {
    if (!ok) {
        json ce = {{"verdict", name}};
        if (!counterexample.is_null()) ce["detail"] = std::move(counterexample);
        counterexamples_.push_back(std::move(ce));
    }
    verdicts_.push_back({std::move(name), ok, std::move(value)});
}

void Report::merge(const Report& other) {
    verdicts_.insert(verdicts_.end(), other.verdicts_.begin(), other.verdicts_.end());
    counterexamples_.insert(counterexamples_.end(), other.counterexamples_.begin(), other.counterexamples_.end());
}

json Report::to_json() const {
    json j;
    j["command"] = command_;
    j["inputs"] = inputs_;
    json vs = json::array();
    for (const auto& v : verdicts_) {
        json e = {{"name", v.name}, {"ok", v.ok}};
        if (!v.value.is_null()) e["value"] = v.value;
        vs.push_back(std::move(e));
    }
    j["verdicts"] = std::move(vs);
    j["counterexamples"] = counterexamples_;
    j["ok"] = ok();
    if (seconds_) j["timing"] = {{"seconds", *seconds_}};
    return j;
}

std::string Report::human() const {
    std::ostringstream os;
    os << command_ << " " << inputs_.dump() << "\n";
    std::size_t width = 0;
    for (const auto& v : verdicts_) width = std::max(width, v.name.size());
    for (const auto& v : verdicts_) {
        os << (v.ok ? "  ok    " : "  FAIL  ") << v.name << std::string(width - v.name.size() + 2, ' ');
        if (!v.value.is_null()) os << (v.value.is_string() ? v.value.get<std::string>() : v.value.dump());
        os << "\n";
    }
    os << (ok() ? "all verdicts hold" : std::to_string(counterexamples_.size()) + " counterexample(s)") << "\n";
    if (seconds_) os << "time: " << *seconds_ << " s\n";
    return os.str();
}

namespace {

json str_list(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
}

json point_json(const PointC& p) { return json::array({p.h.str(), p.y.str()}); }
json point_json(const PointX& p) { return json::array({p.h.str(), p.y.str(), p.z.str()}); }

template <typename P>
json points_json(const std::vector<P>& pts) {
    json a = json::array();
    for (const auto& p : pts) a.push_back(point_json(p));
    return a;
}

std::string nlabel(int N) { return "N=" + std::to_string(N); }

// Some t with h(t) = h0 (and y(t) = y0 when a y-parametrization is given).
bool in_parametrized_image(const RationalFunction& h_of_t, const std::optional<RationalFunction>& y_of_t,
                           const Rational& h0, const std::optional<Rational>& y0) {
    const Poly eq = h_of_t.num() - h_of_t.den().scaled(h0);
    if (eq.is_zero()) return true;
    for (const Rational& t : rational_roots(eq)) {
        if (h_of_t.is_pole(t)) continue;
        if (!y_of_t || !y0) return true;
        if (!y_of_t->is_pole(t) && (*y_of_t)(t) == *y0) return true;
    }
    return false;
}

// Classify a j that should make j - 1728 a square, routing j = 1728 to the
// j-1728 branch on the curve y^2 = x^3 - x.
std::pair<bool, std::string> check_square_j(const Rational& j) {
    if (j == Rational(1728)) {
        const SquareDiscVerdict v = square_disc_by_j(ShortModel{-1, 0}.general());
        return {v.is_square && v.branch == DiscBranch::J1728, "j-1728"};
    }
    const GeneralModel m = curve_from_j(j).general();
    const SquareDiscVerdict v = square_disc_by_j(m);
    return {v.is_square && v.branch == DiscBranch::GenericJ && square_disc_direct(m), "generic-j"};
}

constexpr int kCrossValidationPoints = 100;

}  // namespace

GeneralModel sample_curve(Sampler& rng) {
    auto nonzero = [&rng](long n, long d) { return rng.rational(n, d, false); };
    ShortModel base;
    for (;;) {
        switch (rng.integer(0, 5)) {
            case 0:  // random short model
                base = {rng.rational(30, 6), rng.rational(30, 6)};
                break;
            case 1:  // quadratic twist of a random model
                base = quadratic_twist({rng.rational(20, 4), rng.rational(20, 4)}, nonzero(12, 5));
                break;
            case 2: {  // j = 1728 twist, square-disc about half the time
                Rational d = nonzero(12, 5);
                if (rng.integer(0, 1) == 0) d = -d * d;
                base = quartic_twist(nonzero(6, 3), d);
                break;
            }
            case 3:  // j = 0 twist
                base = sextic_twist(nonzero(6, 3), nonzero(20, 5));
                break;
            case 4: {  // j - 1728 a square, then a quadratic twist
                const Rational t = nonzero(40, 7);
                base = quadratic_twist(curve_from_j(t * t + Rational(1728)), nonzero(9, 4));
                break;
            }
            default: {  // j = 1728 + t^2 exactly, generic branch, or near miss
                const Rational t = nonzero(40, 7);
                base = curve_from_j(t * t + Rational(1728 + rng.integer(0, 1)));
                break;
            }
        }
        if (!base.is_singular()) break;
    }
    ChangeOfVariables c{nonzero(5, 3), rng.rational(6, 3), rng.rational(4, 2), rng.rational(6, 3)};
    return transform(base.general(), c);
}

Report suite_congruences() {
    Report r("verify", {{"suite", "congruences"}});
    for (int N : kGenusZeroLevels) {
        const CongruenceResult c = verify_congruence(N);
        r.add("congruence " + nlabel(N) + " F-side", c.F_side,
              c.F_witness ? json(c.F_witness->str()) : json(nullptr));
        r.add("congruence " + nlabel(N) + " G-side", c.G_side,
              c.G_witness ? json(c.G_witness->str()) : json(nullptr));
    }
    return r;
}

Report suite_tables_C(const SuiteOptions& opts) {
    Report r("verify", {{"suite", "tables-C"}, {"height", opts.height}});
    const SearchOptions so{opts.threads};
    for (int N : kGenusZeroLevels) {
        const IsogenyFamily& f = family(N);
        const int g = genus_hyperelliptic(f.F);
        r.add("genus C_" + std::to_string(N), f.genus_C && g == *f.genus_C, g);
    }
    for (int N : kGenusZeroLevels) {
        const IsogenyFamily& f = family(N);
        const auto found = search_C(N, opts.height, so);
        if (f.genus_C.value_or(0) >= 1) {
            auto expected = f.known_points_C;
            std::sort(expected.begin(), expected.end(), [](const PointC& a, const PointC& b) { return search_order_less(a, b); });
            r.add("points C_" + std::to_string(N) + " up to height " + std::to_string(opts.height), found == expected,
                  points_json(found), json{{"expected", points_json(expected)}, {"found", points_json(found)}});
            for (const auto& v : cusp_check(N)) {
                if (v.curve != "C") continue;
                r.add("cusp C_" + std::to_string(N) + " " + v.point, v.ok);
            }
        } else {
            // Genus 0: every point found must come from the parametrization.
            const auto y_of_t = rf_sqrt(RationalFunction(f.F).compose(*f.h_param_C));
            // Points over cusps carry no elliptic curve and may fall outside the image.
            json missing = json::array();
            json cusps = json::array();
            for (const auto& p : found) {
                if (in_parametrized_image(*f.h_param_C, y_of_t, p.h, p.y)) continue;
                (f.j_map.is_pole(p.h) ? cusps : missing).push_back(point_json(p));
            }
            r.add("C_" + std::to_string(N) + " points lie on the parametrization", y_of_t && missing.empty(),
                  json{{"points", found.size()}, {"over_cusps", cusps}}, missing);
        }
    }
    return r;
}

Report suite_tables_X(const SuiteOptions& opts) {
    Report r("verify", {{"suite", "tables-X"}, {"height", opts.height}});
    const SearchOptions so{opts.threads};
    for (int N : kTheorem1Levels) {
        const IsogenyFamily& f = family(N);
        const auto found = search_X(N, opts.height, so);
        if (f.genus_X.value_or(0) >= 1) {
            auto expected = f.known_points_X;
            std::sort(expected.begin(), expected.end(), [](const PointX& a, const PointX& b) { return search_order_less(a, b); });
            r.add("points X_" + std::to_string(N) + " up to height " + std::to_string(opts.height), found == expected,
                  points_json(found), json{{"expected", points_json(expected)}, {"found", points_json(found)}});
            for (const auto& v : cusp_check(N)) {
                if (v.curve != "X") continue;
                r.add("cusp X_" + std::to_string(N) + " " + v.point, v.ok);
            }
        } else {
            // Besides cusps, the image can miss points where j or j' is 1728: there
            // j - 1728 = 0 is trivially a square and the congruence says nothing.
            json missing = json::array();
            json cusps = json::array();
            json degenerate = json::array();
            for (const auto& p : found) {
                if (in_parametrized_image(*f.h_param_X, std::nullopt, p.h, std::nullopt)) continue;
                if (f.j_map.is_pole(p.h) || f.jprime_map.is_pole(p.h)) {
                    cusps.push_back(point_json(p));
                } else if (f.j_map(p.h) == Rational(1728) || f.jprime_map(p.h) == Rational(1728)) {
                    degenerate.push_back(point_json(p));
                } else {
                    missing.push_back(point_json(p));
                }
            }
            r.add("X_" + std::to_string(N) + " h-values lie on the parametrization", missing.empty(),
                  json{{"points", found.size()}, {"over_cusps", cusps}, {"at_j1728", degenerate}}, missing);
        }
    }
    return r;
}

Report suite_finite_cases() {
    Report r("verify", {{"suite", "finite-cases"}});
    for (const auto& e : finite_cases_scan()) {
        const std::string tag = nlabel(e.N) + (e.prime ? " j'=" : " j=") + e.j.str();
        if (e.nonsquare_row) r.add("non-square j-1728 " + tag, !e.j_minus_1728_square, (e.j - Rational(1728)).str());
        if (e.cm_flag) r.add("CM flag " + tag, e.cm_consistent);
    }
    return r;
}

Report suite_cm() {
    Report r("verify", {{"suite", "cm"}});
    for (const Rational& t : {Rational(1), Rational(2), Rational(3), Rational(5, 2)}) {
        const CmIsogenyGraph g = cm_isogeny_graph(t);
        r.add("graph identities t=" + t.str(), g.identities_hold,
              json{{"disc E_{4t^2}", g.curves[1].model.discriminant().str()},
                   {"disc E'_{+-t}", g.curves[2].model.discriminant().str()}});
        r.add("only E_{-t^2} square t=" + t.str(), g.only_base_square);
        const auto v = square_disc_by_j(ShortModel{-t * t, 0}.general());
        r.add("E_{-t^2} passes the criterion t=" + t.str(), v.is_square && v.branch == DiscBranch::J1728,
              v.witness ? json(v.witness->str()) : json(nullptr));
        // The 2-isogenies of the graph, reproduced by Velu.
        const ShortModel base{-t * t, 0};
        std::set<Rational> js;
        for (const auto& x0 : two_torsion_x(base)) js.insert(velu_2(base, x0).j());
        r.add("E_{-t^2} 2-isogenous j-values t=" + t.str(),
              js == std::set<Rational>{Rational(1728), Rational(287496)}, str_list({js.begin(), js.end()}));
    }
    for (const auto& e : cm_nonsquare_scan()) {
        r.add("CM j=" + e.j.str() + " has j-1728 non-square", !e.is_square, e.j_minus_1728.str());
    }
    return r;
}

Report suite_thm1(const SuiteOptions& opts) {
    const int samples = opts.samples > 0 ? opts.samples : 100;
    Report r("verify", {{"suite", "thm1"}, {"samples", samples}, {"seed", opts.seed}});
    Sampler rng(opts.seed);
    for (int N : kTheorem1Levels) {
        const IsogenyFamily& f = family(N);
        r.add("thm1 identity " + nlabel(N), f.j_map.compose(*f.h_param_C) == *f.thm1_j);
        const auto bad = degenerate_parameters_C(N);
        json failures = json::array();
        long exceptional = 0;
        for (int i = 0; i < samples; ++i) {
            const Rational t = rng.rational_avoiding(40, 40, bad);
            const Rational j = theorem1_j(N, t);
            const Rational composed = f.j_map((*f.h_param_C)(t));
            const auto [ok, branch] = check_square_j(j);
            if (branch == "j-1728") ++exceptional;
            if (!ok || composed != j) failures.push_back({{"t", t.str()}, {"j", j.str()}});
        }
        r.add("thm1 j-1728 square at " + std::to_string(samples) + " samples " + nlabel(N), failures.empty(),
              json{{"j1728_hits", exceptional}}, failures);
    }
    return r;
}

Report suite_thm2(const SuiteOptions& opts) {
    const int samples = opts.samples > 0 ? opts.samples : 50;
    Report r("verify", {{"suite", "thm2"}, {"samples", samples}, {"seed", opts.seed}});
    Sampler rng(opts.seed);
    for (int N : kTheorem2Levels) {
        const IsogenyFamily& f = family(N);
        r.add("thm2 identity " + nlabel(N),
              f.j_map.compose(*f.h_param_X) == f.thm2_pair->first &&
                  f.jprime_map.compose(*f.h_param_X) == f.thm2_pair->second);
        const auto bad = degenerate_parameters_X(N);
        json failures = json::array();
        for (int i = 0; i < samples; ++i) {
            const Rational t = rng.rational_avoiding(40, 40, bad);
            const auto [j, jp] = theorem2_pair(N, t);
            const bool squares = check_square_j(j).first && check_square_j(jp).first;
            const bool isogenous = N == 4 ? chain_check(4, (*f.h_param_X)(t)) : modular_poly_check(N, j, jp);
            if (!squares || !isogenous) {
                failures.push_back({{"t", t.str()}, {"squares", squares}, {"isogenous", isogenous}});
            }
        }
        r.add("thm2 pairs square and isogenous at " + std::to_string(samples) + " samples " + nlabel(N),
              failures.empty(), nullptr, failures);
    }
    // Oracle cross-validation: Velu chains against Phi_N.
    for (int N : {2, 3}) {
        const IsogenyFamily& f = family(N);
        json disagreements = json::array();
        for (int checked = 0; checked < kCrossValidationPoints;) {
            const Rational h = rng.rational(40, 40, false);
            if (f.j_map.is_pole(h) || f.jprime_map.is_pole(h)) continue;
            ++checked;
            const bool a = chain_check(N, h);
            const bool b = modular_poly_check(N, f.j_map(h), f.jprime_map(h));
            if (a != b || !a) disagreements.push_back({{"h", h.str()}, {"chain", a}, {"phi", b}});
        }
        r.add("chain_check and Phi_" + std::to_string(N) + " agree on " + std::to_string(kCrossValidationPoints) + " points", disagreements.empty(), nullptr, disagreements);
    }
    for (const auto& sc : modular_polynomials().spot_checks()) {
        r.add("Phi_" + std::to_string(sc.N) + " load check: " + sc.name, sc.passed);
    }
    return r;
}

Report suite_prop_equivalence(const SuiteOptions& opts) {
    const int samples = opts.samples > 0 ? opts.samples : 1000;
    Report r("verify", {{"suite", "prop-equivalence"}, {"samples", samples}, {"seed", opts.seed}});
    Sampler rng(opts.seed);
    json disagreements = json::array();
    long squares = 0;
    std::map<std::string, long> branches;
    for (int i = 0; i < samples; ++i) {
        const GeneralModel m = sample_curve(rng);
        const bool direct = square_disc_direct(m);
        const SquareDiscVerdict v = square_disc_by_j(m);
        squares += direct ? 1 : 0;
        ++branches[to_string(v.branch)];
        if (direct != v.is_square) disagreements.push_back(serialize_model(m));
    }
    r.add("square_disc_by_j == square_disc_direct on " + std::to_string(samples) + " curves", disagreements.empty(),
          json{{"square", squares}, {"branches", branches}}, disagreements);

    json failures = json::array();
    for (int i = 0; i < 100; ++i) {
        Rational j0;
        do {
            j0 = rng.rational(100000, 50);
        } while (j0.is_zero() || j0 == Rational(1728));
        const ShortModel e = curve_from_j(j0);
        const Rational expected = Rational(Integer(ipow(2, 12) * ipow(3, 12))) * j0 * j0 / (j0 - Rational(1728)).pow(3);
        if (e.discriminant() != expected || e.j() != j0) failures.push_back(j0.str());
    }
    r.add("Delta(E_j0) = 2^12 3^12 j0^2/(j0-1728)^3 on 100 j0", failures.empty(), nullptr, failures);
    return r;
}

Report cmd_classify(const std::string& curve) {
    Report r("classify", {{"curve", curve}});
    const GeneralModel m = parse_model(curve);
    const Invariants inv = invariants(m);
    if (inv.discriminant.is_zero()) {
        throw SingularModelError("singular curve: discriminant is 0");
    }
    const Rational j = *inv.j;
    const bool direct = square_disc_direct(m);
    const SquareDiscVerdict v = square_disc_by_j(m);
    r.add("discriminant", true, inv.discriminant.str());
    r.add("j", true, j.str());
    r.add("square_disc_direct", true, direct);
    r.add("square_disc_by_j", true,
          json{{"is_square", v.is_square},
               {"branch", to_string(v.branch)},
               {"witness", v.witness ? json(v.witness->str()) : json(nullptr)}});
    r.add("methods agree", direct == v.is_square);
    const bool cm = is_cm_j(j);
    r.add("cm", true, cm);
    if (cm) {
        // Square discriminant with CM happens exactly for y^2 = x^3 - s^2 x up to isomorphism.
        const bool e_minus_t2 = j == Rational(1728) && v.is_square;
        r.add("cm square-disc characterization", e_minus_t2 == direct,
              json{{"isomorphic_to_y2=x3-s2x", e_minus_t2},
                   {"s", e_minus_t2 && v.witness ? json(v.witness->str()) : json(nullptr)}});
    }
    return r;
}

Report cmd_family(int N, const std::string& t_text) {
    Report r("family", {{"N", N}, {"t", t_text}});
    if (std::find(std::begin(kTheorem1Levels), std::end(kTheorem1Levels), N) == std::end(kTheorem1Levels)) {
        throw DomainError("N not in Theorem 1 set {2,3,4,6,7,8}: " + std::to_string(N));
    }
    const Rational t = Rational::parse(t_text);
    const IsogenyFamily& f = family(N);
    const Rational j = theorem1_j(N, t);
    const Rational h = (*f.h_param_C)(t);
    const Rational jp = f.jprime_map(h);
    // y^2 = x^3 - x stands in at j = 1728: it is the model with square discriminant.
    const ShortModel e = j == Rational(1728) ? ShortModel{-1, 0} : curve_from_j(j);
    const auto root = rational_sqrt(e.discriminant());
    r.add("j", true, j.str());
    r.add("h", true, h.str());
    r.add("model", true, serialize_model(e));
    r.add("discriminant", true, e.discriminant().str());
    r.add("sqrt discriminant certificate", root.has_value() && *root * *root == e.discriminant(),
          root ? json(root->str()) : json(nullptr));
    const bool isogenous = N == 7 ? modular_poly_check(7, j, jp) : chain_check(N, h);
    r.add(std::string("admits a ") + std::to_string(N) + "-isogeny (" + (N == 7 ? "Phi_7" : "Velu chain") + ")",
          isogenous, json{{"j_isogenous", jp.str()}});
    return r;
}

Report cmd_verify(const std::string& suite, const SuiteOptions& opts) {
    if (suite == "congruences") return suite_congruences();
    if (suite == "tables-C") return suite_tables_C(opts);
    if (suite == "tables-X") return suite_tables_X(opts);
    if (suite == "finite-cases") return suite_finite_cases();
    if (suite == "cm") return suite_cm();
    if (suite == "thm1") return suite_thm1(opts);
    if (suite == "thm2") return suite_thm2(opts);
    if (suite == "prop-equivalence") return suite_prop_equivalence(opts);
    if (suite == "all") {
        Report all("verify", {{"suite", "all"}, {"height", opts.height}, {"samples", opts.samples}, {"seed", opts.seed}});
        for (const auto& name : kSuiteNames) {
            if (name != "all") all.merge(cmd_verify(name, opts));
        }
        return all;
    }
    throw DomainError("unknown suite '" + suite + "'");
}

Report cmd_search(int N, const std::string& which, long height, unsigned threads) {
    Report r("search", {{"N", N}, {"curve", which}, {"height", height}});
    const SearchOptions so{threads};
    json pts;
    std::size_t count = 0;
    bool sound = true;
    const IsogenyFamily& f = family(N);
    if (which == "C") {
        const auto found = search_C(N, height, so);
        for (const auto& p : found) sound = sound && p.y * p.y == f.F(p.h);
        pts = points_json(found);
        count = found.size();
    } else if (which == "X") {
        const auto found = search_X(N, height, so);
        for (const auto& p : found) sound = sound && p.y * p.y == f.F(p.h) && p.z * p.z == f.G(p.h);
        pts = points_json(found);
        count = found.size();
    } else {
        throw DomainError("curve must be C or X, got '" + which + "'");
    }
    r.add("points", sound, pts);
    r.add("count", true, count);
    r.add("points at infinity", true, "not searched");
    return r;
}

}  // namespace sqdisc
