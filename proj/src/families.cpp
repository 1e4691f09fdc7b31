#include "sqdisc/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "sqdisc/classify.hpp"
#include "sqdisc/errors.hpp"
#include "sqdisc/expr.hpp"
#include "sqdisc/square_class.hpp"

#ifndef SQDISC_DEFAULT_DATA_DIR
#define SQDISC_DEFAULT_DATA_DIR "data"
#endif

namespace sqdisc {

namespace {

std::string trim(std::string s) {
    auto sp = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && sp(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && sp(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(i);
}

std::vector<Rational> parse_coeff_list(const std::string& text) {
    std::istringstream is(text);
    std::vector<Rational> out;
    std::string tok;
    while (is >> tok) out.push_back(Rational::parse(tok));
    return out;
}

std::vector<std::vector<Rational>> parse_tuples(const std::string& text) {
    std::vector<std::vector<Rational>> out;
    std::size_t pos = 0;
    while ((pos = text.find('(', pos)) != std::string::npos) {
        std::size_t end = text.find(')', pos);
        if (end == std::string::npos) throw DataError("unterminated point tuple: " + text);
        std::string inner = text.substr(pos + 1, end - pos - 1);
        std::vector<Rational> tuple;
        std::stringstream ss(inner);
        std::string item;
        while (std::getline(ss, item, ',')) tuple.push_back(Rational::parse(item));
        out.push_back(std::move(tuple));
        pos = end + 1;
    }
    return out;
}

Rational parse_constant(const std::string& text) {
    RationalFunction f = parse_rational_function(text, "x");
    if (!f.is_constant()) throw DataError("expected a constant: " + text);
    return f.num().coeff(0) / f.den().coeff(0);
}

struct Block {
    std::string kind;
    int N = 0;
    int line = 0;
    std::map<std::string, std::string> fields;
    std::vector<std::string> rows;
};

class FieldReader {
public:
    explicit FieldReader(const Block& b) : b_(b) {}

    bool has(const std::string& key) const { return b_.fields.count(key) != 0; }

    const std::string& raw(const std::string& key) const {
        auto it = b_.fields.find(key);
        if (it == b_.fields.end()) fail("missing field '" + key + "'");
        return it->second;
    }

    RationalFunction rational_function(const std::string& key, const std::string& var) const {
        RationalFunction factored = parse_rational_function(raw(key), var);
        RationalFunction expanded(Poly(parse_coeff_list(raw(key + ".num"))),
                                  Poly(parse_coeff_list(raw(key + ".den"))));
        if (!(factored == expanded)) fail("factored and expanded forms of '" + key + "' disagree");
        if (!(expanded.num() == Poly(parse_coeff_list(raw(key + ".num"))))) {
            fail("expanded form of '" + key + "' is not reduced with a monic denominator");
        }
        return expanded;
    }

    Poly polynomial(const std::string& key, const std::string& var) const {
        RationalFunction factored = parse_rational_function(raw(key), var);
        Poly expanded(parse_coeff_list(raw(key + ".coeffs")));
        if (!(factored == RationalFunction(expanded))) {
            fail("factored and expanded forms of '" + key + "' disagree");
        }
        return expanded;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw DataError("tables: [" + b_.kind + " " + std::to_string(b_.N) + "] (line " +
                        std::to_string(b_.line) + "): " + why);
    }

private:
    const Block& b_;
};

IsogenyFamily build_family(const Block& b) {
    FieldReader r(b);
    IsogenyFamily f;
    f.N = b.N;
    f.j_map = r.rational_function("jmap", "h");
    f.jprime_map = r.rational_function("jpmap", "h");
    f.F = r.polynomial("F", "h");
    f.G = r.polynomial("G", "h");
    if (r.has("hC")) f.h_param_C = r.rational_function("hC", "t");
    if (r.has("hX")) f.h_param_X = r.rational_function("hX", "t");
    if (r.has("thm1")) f.thm1_j = r.rational_function("thm1", "t");
    if (r.has("thm2.j")) {
        f.thm2_pair = std::make_pair(r.rational_function("thm2.j", "t"), r.rational_function("thm2.jp", "t"));
    }
    if (r.has("genusC")) f.genus_C = std::stoi(r.raw("genusC"));
    if (r.has("genusX")) f.genus_X = std::stoi(r.raw("genusX"));
    if (r.has("pointsC")) {
        for (auto& t : parse_tuples(r.raw("pointsC"))) {
            if (t.size() != 2) r.fail("pointsC entries must be (h,y)");
            f.known_points_C.push_back({t[0], t[1]});
        }
    }
    if (r.has("pointsX")) {
        for (auto& t : parse_tuples(r.raw("pointsX"))) {
            if (t.size() != 3) r.fail("pointsX entries must be (h,y,z)");
            f.known_points_X.push_back({t[0], t[1], t[2]});
        }
    }
    if (f.j_map.is_constant() || f.jprime_map.is_constant()) r.fail("j maps must be nonconstant");
    if (f.F.is_zero() || f.G.is_zero()) r.fail("F and G must be nonzero");
    if ((f.N == 3 || f.N == 7) && !(f.F == f.G)) r.fail("F and G must coincide for N = 3, 7");
    for (const auto& p : f.known_points_C) {
        if (p.y * p.y != f.F(p.h)) r.fail("listed point of C_N is not on the curve");
    }
    for (const auto& p : f.known_points_X) {
        if (p.y * p.y != f.F(p.h) || p.z * p.z != f.G(p.h)) r.fail("listed point of X_N is not on the curve");
    }
    return f;
}

std::mutex g_dir_mutex;
std::optional<std::filesystem::path> g_dir_override;

}  // namespace

Catalog Catalog::load(const std::filesystem::path& tables_file) {
    std::ifstream in(tables_file);
    if (!in) {
        throw DataError("cannot open table catalog " + tables_file.string());
    }
    std::vector<Block> blocks;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw DataError("bad section header at line " + std::to_string(lineno));
            std::istringstream hs(t.substr(1, t.size() - 2));
            Block b;
            b.line = lineno;
            if (!(hs >> b.kind >> b.N) || (b.kind != "family" && b.kind != "finite")) {
                throw DataError("bad section header at line " + std::to_string(lineno));
            }
            blocks.push_back(std::move(b));
            continue;
        }
        if (blocks.empty()) throw DataError("field outside a section at line " + std::to_string(lineno));
        auto eq = t.find('=');
        if (eq == std::string::npos) throw DataError("expected 'key = value' at line " + std::to_string(lineno));
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key == "row") {
            blocks.back().rows.push_back(value);
        } else if (!blocks.back().fields.emplace(key, value).second) {
            throw DataError("duplicate field '" + key + "' at line " + std::to_string(lineno));
        }
    }

    Catalog c;
    for (const auto& b : blocks) {
        try {
            if (b.kind == "family") {
                c.families_.emplace(b.N, build_family(b));
            } else {
                for (const auto& row : b.rows) {
                    std::vector<std::string> parts;
                    std::stringstream ss(row);
                    std::string item;
                    while (std::getline(ss, item, ';')) parts.push_back(trim(item));
                    if (parts.size() != 3 || (parts[2] != "yes" && parts[2] != "no")) {
                        throw DataError("finite row must be 'j ; j' ; yes|no'");
                    }
                    c.finite_.push_back({b.N, parse_constant(parts[0]), parse_constant(parts[1]), parts[2] == "yes"});
                }
            }
        } catch (const ParseError& e) {
            throw DataError("tables: [" + b.kind + " " + std::to_string(b.N) + "]: " + e.what());
        }
    }
    for (int N : kGenusZeroLevels) {
        if (!c.has_family(N)) throw DataError("tables: missing family " + std::to_string(N));
    }
    return c;
}

const IsogenyFamily& Catalog::family(int N) const {
    auto it = families_.find(N);
    if (it == families_.end()) {
        throw DomainError("no genus-0 isogeny family for N = " + std::to_string(N));
    }
    return it->second;
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("SQDISC_DATA_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return SQDISC_DEFAULT_DATA_DIR;
}

void set_data_dir(const std::filesystem::path& dir) {
    std::lock_guard lock(g_dir_mutex);
    g_dir_override = dir;
}

std::filesystem::path data_dir() {
    std::lock_guard lock(g_dir_mutex);
    return g_dir_override ? *g_dir_override : default_data_dir();
}

const Catalog& catalog() {
    static const Catalog c = Catalog::load(data_dir() / "tables.txt");
    return c;
}

const IsogenyFamily& family(int N) { return catalog().family(N); }

namespace {

bool in_list(int N, std::span<const int> list) { return std::find(list.begin(), list.end(), N) != list.end(); }

}  // namespace

Rational theorem1_j(int N, const Rational& t) {
    if (!in_list(N, kTheorem1Levels)) {
        throw DomainError("N not in Theorem 1 set {2,3,4,6,7,8}: " + std::to_string(N));
    }
    const IsogenyFamily& f = family(N);
    const Rational h = (*f.h_param_C)(t);
    if (f.j_map.is_pole(h)) {
        throw PoleError("h = " + h.str() + " is a cusp of j_" + std::to_string(N));
    }
    return (*f.thm1_j)(t);
}

std::pair<Rational, Rational> theorem2_pair(int N, const Rational& t) {
    if (!in_list(N, kTheorem2Levels)) {
        throw DomainError("N not in Theorem 2 set {2,3,4,7}: " + std::to_string(N));
    }
    const IsogenyFamily& f = family(N);
    const Rational h = (*f.h_param_X)(t);
    if (f.j_map.is_pole(h) || f.jprime_map.is_pole(h)) {
        throw PoleError("h = " + h.str() + " is a cusp of the level-" + std::to_string(N) + " maps");
    }
    return {f.thm2_pair->first(t), f.thm2_pair->second(t)};
}

namespace {

std::vector<Rational> union_roots(std::initializer_list<const Poly*> polys) {
    std::set<Rational> roots;
    for (const Poly* p : polys) {
        for (const auto& r : rational_roots(*p)) roots.insert(r);
    }
    return {roots.begin(), roots.end()};
}

}  // namespace

std::vector<Rational> degenerate_parameters_C(int N) {
    const IsogenyFamily& f = family(N);
    if (!f.h_param_C) throw DomainError("C_" + std::to_string(N) + " has no parametrization");
    RationalFunction composed = f.j_map.compose(*f.h_param_C);
    return union_roots({&f.h_param_C->den(), &composed.den()});
}

std::vector<Rational> degenerate_parameters_X(int N) {
    const IsogenyFamily& f = family(N);
    if (!f.h_param_X) throw DomainError("X_" + std::to_string(N) + " has no parametrization");
    RationalFunction a = f.j_map.compose(*f.h_param_X);
    RationalFunction b = f.jprime_map.compose(*f.h_param_X);
    return union_roots({&f.h_param_X->den(), &a.den(), &b.den()});
}

CongruenceResult verify_congruence(int N) {
    const IsogenyFamily& f = family(N);
    CongruenceResult res;
    auto side = [](const RationalFunction& j, const Poly& target, std::optional<RationalFunction>& witness) {
        const RationalFunction shifted = j - RationalFunction(1728);
        const SquareClassRF lhs = mod_square_class_rf(shifted);
        const SquareClassRF rhs = mod_square_class_rf(RationalFunction(target));
        witness = rf_sqrt(shifted * RationalFunction(target));
        return lhs == rhs && witness.has_value();
    };
    res.F_side = side(f.j_map, f.F, res.F_witness);
    res.G_side = side(f.jprime_map, f.G, res.G_witness);
    return res;
}

bool cstar_membership(int N, const Rational& h0) {
    const IsogenyFamily& f = family(N);
    return !f.j_map.is_pole(h0) && is_square_rational(f.F(h0));
}

bool xstar_membership(int N, const Rational& h0) {
    const IsogenyFamily& f = family(N);
    return !f.j_map.is_pole(h0) && !f.jprime_map.is_pole(h0) && is_square_rational(f.F(h0)) &&
           is_square_rational(f.G(h0));
}

std::vector<FiniteScanEntry> finite_cases_scan() {
    std::vector<FiniteScanEntry> out;
    for (const auto& row : catalog().finite_cases()) {
        const bool scanned = in_list(row.N, kNonCmFiniteLevels);
        if (!scanned && !row.has_cm) continue;
        for (const bool prime : {false, true}) {
            const Rational& j = prime ? row.j_prime : row.j;
            FiniteScanEntry e;
            e.N = row.N;
            e.j = j;
            e.prime = prime;
            e.nonsquare_row = scanned;
            e.j_minus_1728_square = is_square_rational(j - Rational(1728));
            e.cm_flag = row.has_cm;
            e.cm_consistent = !row.has_cm || is_cm_j(j);
            out.push_back(e);
        }
    }
    return out;
}

}  // namespace sqdisc
