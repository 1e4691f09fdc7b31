#include "sqdisc/curve_search.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "sqdisc/errors.hpp"
#include "sqdisc/square_class.hpp"

namespace sqdisc {

int genus_hyperelliptic(const Poly& f) {
    if (f.degree() < 1 || poly_gcd(f, f.derivative()).degree() > 0) {
        throw DomainError("model is singular; take squarefree part first");
    }
    return (f.degree() - 1) / 2;
}

namespace {

template <typename Point>
bool order_less(const Point& a, const Point& b) {
    if (a.h.den() != b.h.den()) return a.h.den() < b.h.den();
    if (a.h.num() != b.h.num()) return a.h.num() < b.h.num();
    if constexpr (requires { a.z; }) {
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    } else {
        return a.y < b.y;
    }
}

std::vector<Rational> signed_pair(const Rational& r) {
    if (r.is_zero()) return {r};
    return {-r, r};
}

// Scans denominators b = first, first + stride, ... <= H.
template <typename Point, typename Visit>
std::vector<Point> scan_box(long H, const SearchOptions& opts, Visit visit) {
    if (H < 1) return {};
    unsigned threads = opts.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : opts.threads;
    threads = static_cast<unsigned>(std::min<long>(threads, H));
    std::vector<std::vector<Point>> buckets(threads);
    auto work = [&](unsigned id) {
        for (long b = 1 + id; b <= H; b += threads) {
            for (long a = -H; a <= H; ++a) {
                if (std::gcd(a, b) != 1) continue;
                visit(Rational(Integer(a), Integer(b)), buckets[id]);
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
    }
    std::vector<Point> out;
    for (auto& bucket : buckets) out.insert(out.end(), bucket.begin(), bucket.end());
    std::sort(out.begin(), out.end(), order_less<Point>);
    return out;
}

}  // namespace

bool search_order_less(const PointC& a, const PointC& b) { return order_less(a, b); }
bool search_order_less(const PointX& a, const PointX& b) { return order_less(a, b); }

std::vector<PointC> search_hyperelliptic(const Poly& f, long H, const SearchOptions& opts) {
    return scan_box<PointC>(H, opts, [&f](const Rational& h, std::vector<PointC>& out) {
        if (auto y = rational_sqrt(f(h))) {
            for (const auto& s : signed_pair(*y)) out.push_back({h, s});
        }
    });
}

std::vector<PointX> search_pair(const Poly& f, const Poly& g, long H, const SearchOptions& opts) {
    return scan_box<PointX>(H, opts, [&f, &g](const Rational& h, std::vector<PointX>& out) {
        auto y = rational_sqrt(f(h));
        if (!y) return;
        auto z = rational_sqrt(g(h));
        if (!z) return;
        for (const auto& sy : signed_pair(*y)) {
            for (const auto& sz : signed_pair(*z)) out.push_back({h, sy, sz});
        }
    });
}

std::vector<PointC> search_C(int N, long H, const SearchOptions& opts) {
    return search_hyperelliptic(family(N).F, H, opts);
}

std::vector<PointX> search_X(int N, long H, const SearchOptions& opts) {
    const IsogenyFamily& f = family(N);
    return search_pair(f.F, f.G, H, opts);
}

std::vector<CuspVerdict> cusp_check(int N) {
    const IsogenyFamily& f = family(N);
    std::vector<CuspVerdict> out;
    auto verdict = [&f](const std::string& curve, const Rational& h, std::string point) {
        CuspVerdict v;
        v.curve = curve;
        v.point = std::move(point);
        v.h = h;
        v.pole_of_j = f.j_map.is_pole(h);
        v.pole_of_jprime = f.jprime_map.is_pole(h);
        v.ok = curve == "C" ? v.pole_of_j : (v.pole_of_j || v.pole_of_jprime);
        return v;
    };
    for (const auto& p : f.known_points_C) out.push_back(verdict("C", p.h, "(" + p.h.str() + ", " + p.y.str() + ")"));
    for (const auto& p : f.known_points_X) out.push_back(verdict("X", p.h, "(" + p.h.str() + ", " + p.y.str() + ", " + p.z.str() + ")"));
    return out;
}

}  // namespace sqdisc
