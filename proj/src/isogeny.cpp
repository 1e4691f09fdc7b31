#include "sqdisc/isogeny.hpp"

#include <fstream>
#include <sstream>

#include "sqdisc/classify.hpp"
#include "sqdisc/errors.hpp"
#include "sqdisc/families.hpp"
#include "sqdisc/poly.hpp"
#include "sqdisc/sampling.hpp"

namespace sqdisc {

namespace {

void require_elliptic(const ShortModel& m) {
    if (m.is_singular()) throw SingularModelError("singular model " + m.str());
}

}  // namespace

std::vector<Rational> two_torsion_x(const ShortModel& m) {
    require_elliptic(m);
    return rational_roots(Poly({m.B, m.A, 0, 1}));
}

ShortModel velu_2(const ShortModel& m, const Rational& x0) {
    require_elliptic(m);
    if (!(x0 * x0 * x0 + m.A * x0 + m.B).is_zero()) {
        throw DomainError("velu_2: x0 = " + x0.str() + " is not a 2-torsion x-coordinate");
    }
    const Rational t = Rational(3) * x0 * x0 + m.A;
    const Rational w = x0 * t;
    return {m.A - Rational(5) * t, m.B - Rational(7) * w};
}

std::vector<Rational> three_kernel_x(const ShortModel& m) {
    require_elliptic(m);
    return rational_roots(Poly({-m.A * m.A, Rational(12) * m.B, Rational(6) * m.A, 0, 3}));
}

ShortModel velu_odd(const ShortModel& m, const Rational& x0, int degree) {
    if (degree != 3) {
        throw DomainError("velu_odd: only degree 3 is supported");
    }
    require_elliptic(m);
    const Rational psi3 = Rational(3) * x0.pow(4) + Rational(6) * m.A * x0 * x0 + Rational(12) * m.B * x0 - m.A * m.A;
    if (!psi3.is_zero()) {
        throw DomainError("velu_odd: x0 = " + x0.str() + " is not a root of the 3-division polynomial");
    }
    const Rational v = Rational(6) * x0 * x0 + Rational(2) * m.A;
    const Rational u = Rational(4) * (x0.pow(3) + m.A * x0 + m.B);
    const Rational w = u + x0 * v;
    return {m.A - Rational(5) * v, m.B - Rational(7) * w};
}

std::vector<std::vector<int>> chain_factorizations(int N) {
    switch (N) {
        case 2: return {{2}};
        case 3: return {{3}};
        case 4: return {{2, 2}};
        case 6: return {{2, 3}, {3, 2}};
        case 8: return {{2, 2, 2}};
        default: throw DomainError("chain_check supports N in {2,3,4,6,8}, got " + std::to_string(N));
    }
}

std::vector<ShortModel> chain_start_models(const Rational& j0) {
    if (j0 == Rational(1728)) return {{1, 0}, {-1, 0}};
    if (j0.is_zero()) return {{0, 1}, {0, 2}};
    return {curve_from_j(j0)};
}

namespace {

bool extend_chain(const ShortModel& current, std::span<const int> degrees, const std::optional<IsogenyStep>& last,
                  const Rational& target_j, std::vector<IsogenyStep>& path) {
    if (degrees.empty()) return current.j() == target_j;
    const int d = degrees.front();
    const std::vector<Rational> kernels = d == 2 ? two_torsion_x(current) : three_kernel_x(current);
    for (const Rational& x0 : kernels) {
        // Composing a 2-step with its dual collapses to multiplication by 2.
        if (d == 2 && last && last->degree == 2 && x0 == velu_2_dual_kernel(last->kernel_x)) continue;
        IsogenyStep step{d, current, d == 2 ? velu_2(current, x0) : velu_odd(current, x0, 3), x0};
        path.push_back(step);
        if (extend_chain(step.codomain, degrees.subspan(1), step, target_j, path)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<IsogenyStep>> find_chain(const ShortModel& start, int N, const Rational& target_j) {
    require_elliptic(start);
    for (const auto& degrees : chain_factorizations(N)) {
        std::vector<IsogenyStep> path;
        if (extend_chain(start, degrees, std::nullopt, target_j, path)) return path;
    }
    return std::nullopt;
}

bool chain_check(int N, const Rational& h0) {
    chain_factorizations(N);
    const IsogenyFamily& f = family(N);
    const Rational j = f.j_map(h0);
    const Rational jp = f.jprime_map(h0);
    for (const auto& start : chain_start_models(j)) {
        if (find_chain(start, N, jp)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------

ModularPolynomial::ModularPolynomial(int N, std::map<std::pair<int, int>, Integer> lower)
    : N_(N), lower_(std::move(lower)) {}

int ModularPolynomial::degree() const {
    int d = 0;
    for (const auto& [ik, c] : lower_) d = std::max(d, ik.first);
    return d;
}

Integer ModularPolynomial::coeff(int i, int k) const {
    auto it = lower_.find(i >= k ? std::make_pair(i, k) : std::make_pair(k, i));
    return it == lower_.end() ? Integer(0) : it->second;
}

Rational ModularPolynomial::operator()(const Rational& x, const Rational& y) const {
    const int d = degree();
    std::vector<Rational> xp{1}, yp{1};
    for (int i = 1; i <= d; ++i) {
        xp.push_back(xp.back() * x);
        yp.push_back(yp.back() * y);
    }
    mpq_class acc = 0;
    for (const auto& [ik, c] : lower_) {
        const auto [i, k] = ik;
        mpq_class term = xp[static_cast<std::size_t>(i)].raw() * yp[static_cast<std::size_t>(k)].raw();
        if (i != k) term += xp[static_cast<std::size_t>(k)].raw() * yp[static_cast<std::size_t>(i)].raw();
        acc += mpq_class(c) * term;
    }
    return Rational(acc);
}

ModularPolynomialTable ModularPolynomialTable::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open modular polynomial data " + file.string());
    std::map<int, std::map<std::pair<int, int>, Integer>> raw;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        int N = 0, i = 0, k = 0;
        std::string c;
        if (!(is >> N >> i >> k >> c) || i < k || k < 0) {
            throw DataError("modular polynomials: bad line " + std::to_string(lineno));
        }
        if (!raw[N].emplace(std::make_pair(i, k), Integer(c, 10)).second) {
            throw DataError("modular polynomials: duplicate coefficient at line " + std::to_string(lineno));
        }
    }

    ModularPolynomialTable table;
    for (auto& [N, coeffs] : raw) table.polys_.emplace(N, ModularPolynomial(N, std::move(coeffs)));

    auto record = [&table](int N, std::string name, bool ok) {
        table.checks_.push_back({N, std::move(name), ok});
        if (!ok) throw DataError("modular polynomial Phi_" + std::to_string(N) + " failed spot check: " + name);
    };
    for (const auto& [N, phi] : table.polys_) {
        record(N, "degree N+1 with X^(N+1) monic", phi.degree() == N + 1 && phi.coeff(N + 1, 0) == 1);
        if (!catalog().has_family(N)) continue;
        const IsogenyFamily& f = catalog().family(N);
        Sampler rng(0x5eed0000ULL + static_cast<unsigned>(N));
        int done = 0;
        bool vanishes = true, mismatch_nonzero = true, symmetric = true;
        while (done < 20) {
            const Rational h = rng.rational(40, 40, false);
            const Rational h2 = rng.rational(40, 40, false);
            if (f.j_map.is_pole(h) || f.jprime_map.is_pole(h) || f.jprime_map.is_pole(h2) || h == h2) continue;
            const Rational j = f.j_map(h), jp = f.jprime_map(h);
            vanishes = vanishes && phi(j, jp).is_zero();
            symmetric = symmetric && phi(jp, j).is_zero();
            if (f.jprime_map(h2) != jp) mismatch_nonzero = mismatch_nonzero && !phi(j, f.jprime_map(h2)).is_zero();
            ++done;
        }
        record(N, "Phi_N(j_N(h), j'_N(h)) = 0 at 20 sampled h", vanishes);
        record(N, "Phi_N(j'_N(h), j_N(h)) = 0 (symmetry) at 20 sampled h", symmetric);
        record(N, "Phi_N(j_N(h), j'_N(h2)) != 0 for mismatched pairs", mismatch_nonzero);
        if (N == 2) {
            record(N, "Phi_2(1728, 287496) = 0", phi(1728, 287496).is_zero());
        }
    }
    return table;
}

const ModularPolynomial& ModularPolynomialTable::get(int N) const {
    auto it = polys_.find(N);
    if (it == polys_.end()) throw DataError("modular polynomial Phi_" + std::to_string(N) + " not loaded");
    return it->second;
}

const ModularPolynomialTable& modular_polynomials() {
    static const ModularPolynomialTable table = ModularPolynomialTable::load(data_dir() / "modular_polynomials.txt");
    return table;
}

bool modular_poly_check(int N, const Rational& j1, const Rational& j2) {
    return modular_polynomials().get(N)(j1, j2).is_zero();
}

}  // namespace sqdisc
