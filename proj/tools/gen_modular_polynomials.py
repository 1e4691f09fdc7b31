#!/usr/bin/env python3
"""Derive the classical modular polynomials Phi_N(X, Y) for prime N from the
q-expansion of the j-invariant, and write them in the "N i k c" text format.

The roots of Phi_N(X, j(tau)) are j(N tau) and j((tau + k)/N), k = 0..N-1.
Their power sums are q-series with integer exponents; Newton's identities turn
them into elementary symmetric functions, each of which is a polynomial of
degree <= N + 1 in j, recovered by peeling off principal parts.

Usage: gen_modular_polynomials.py 2 3 7 > data/modular_polynomials.txt
"""
import sys


def sigma3(n):
    return sum(d ** 3 for d in range(1, n + 1) if n % d == 0)


class Laurent:
    """Truncated Laurent series sum c[i] q^(i + val), exact to q^prec (exclusive)."""

    def __init__(self, val, coeffs, prec):
        self.val = val
        self.c = list(coeffs[: max(0, prec - val)])
        self.prec = prec

    def coeff(self, e):
        i = e - self.val
        return self.c[i] if 0 <= i < len(self.c) else 0

    def __add__(self, o):
        val = min(self.val, o.val)
        prec = min(self.prec, o.prec)
        return Laurent(val, [self.coeff(e) + o.coeff(e) for e in range(val, prec)], prec)

    def scale(self, s):
        return Laurent(self.val, [s * x for x in self.c], self.prec)

    def __mul__(self, o):
        val = self.val + o.val
        prec = min(self.prec + o.val, o.prec + self.val)
        out = [0] * max(0, prec - val)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for k, b in enumerate(o.c):
                if i + k >= len(out):
                    break
                out[i + k] += a * b
        return Laurent(val, out, prec)


def j_series(terms):
    """j(q) = E4^3 / Delta as q^-1 + 744 + ..., exact through q^(terms-2)."""
    n = terms + 1
    e4 = [1] + [240 * sigma3(k) for k in range(1, n)]
    e4_3 = [0] * n
    sq = [sum(e4[i] * e4[k - i] for i in range(k + 1)) for k in range(n)]
    for k in range(n):
        e4_3[k] = sum(sq[i] * e4[k - i] for i in range(k + 1))
    # prod (1 - q^m)^24, then invert
    p = [1] + [0] * (n - 1)
    for m in range(1, n):
        for _ in range(24):
            for k in range(n - 1, m - 1, -1):
                p[k] -= p[k - m]
    inv = [0] * n
    inv[0] = 1
    for k in range(1, n):
        inv[k] = -sum(p[i] * inv[k - i] for i in range(1, k + 1))
    jq = [sum(e4_3[i] * inv[k - i] for i in range(k + 1)) for k in range(n)]
    return Laurent(-1, jq, n - 1)


def modular_polynomial(N):
    deg = N + 1
    prec = N * deg + 1  # positive precision kept on every intermediate series
    J = j_series(N * (N * deg + prec) + 2)
    # powers of J in q
    powers = [Laurent(0, [1], J.prec)]
    for _ in range(deg):
        powers.append(powers[-1] * J)
    # power sums P_m
    P = [None]
    for m in range(1, deg + 1):
        Jm = powers[m]
        # J(q^N)^m
        lo = -N * m
        a = [0] * (prec - lo)
        for e in range(Jm.val, Jm.prec):
            if lo <= N * e < prec:
                a[N * e - lo] = Jm.coeff(e)
        s1 = Laurent(lo, a, prec)
        # N * sum_k c_{N k} q^k
        b_lo = -(m // N) - 1
        b = [N * Jm.coeff(N * k) for k in range(b_lo, prec)]
        s2 = Laurent(b_lo, b, prec)
        P.append(s1 + s2)
    # Newton: m e_m = sum_{i=1}^m (-1)^(i-1) e_{m-i} P_i
    E = [Laurent(0, [1], prec + N * deg)]
    for m in range(1, deg + 1):
        acc = None
        for i in range(1, m + 1):
            t = (E[m - i] * P[i]).scale((-1) ** (i - 1))
            acc = t if acc is None else acc + t
        assert all(x % m == 0 for x in acc.c)
        E.append(acc.scale(1) if m == 1 else Laurent(acc.val, [x // m for x in acc.c], acc.prec))
    # express each e_m as a polynomial in j
    Jp = [j_series(4 * N + 8)]
    jpow = [Laurent(0, [1], 2 * N + 4)]
    for _ in range(N + 2):
        jpow.append(jpow[-1] * Jp[0])
    coeffs = {}  # (i, k) -> c, coefficient of X^i Y^k
    for m in range(1, deg + 1):
        assert E[m].prec >= 1
        rem = {e: E[m].coeff(e) for e in range(-N - 3, 1)}
        assert all(rem[e] == 0 for e in range(-N - 3, -N - 1)), "pole too deep"
        poly = {}
        for d in range(N + 1, -1, -1):
            c = rem.get(-d, 0)
            if c:
                poly[d] = c
                for e in range(-d, 1):
                    rem[e] -= c * jpow[d].coeff(e)
        assert all(v == 0 for v in rem.values())
        sign = (-1) ** m
        for d, c in poly.items():
            coeffs[(deg - m, d)] = coeffs.get((deg - m, d), 0) + sign * c
    coeffs[(deg, 0)] = coeffs.get((deg, 0), 0) + 1
    for (i, k), c in coeffs.items():
        assert coeffs.get((k, i), 0) == c, "asymmetric"
    return {key: c for key, c in coeffs.items() if c != 0}


PHI2_PUBLISHED = {
    (3, 0): 1, (2, 2): -1, (2, 1): 1488, (2, 0): -162000, (1, 1): 40773375,
    (1, 0): 8748000000, (0, 0): -157464000000000,
}


def main():
    ns = [int(a) for a in sys.argv[1:]] or [2, 3, 7]
    print("# Classical modular polynomials Phi_N(X, Y).")
    print("# Each line 'N i k c' is the coefficient c of X^i Y^k (and of X^k Y^i); i >= k.")
    print("# Derived by tools/gen_modular_polynomials.py from the q-expansion of j")
    print("# (E4^3/Delta), power sums over the N+1 cosets, Newton identities.")
    for N in ns:
        phi = modular_polynomial(N)
        half = {(i, k): c for (i, k), c in phi.items() if i >= k}
        if N == 2:
            assert half == PHI2_PUBLISHED, "Phi_2 disagrees with the published table"
        print(f"# N = {N}: {len(half)} coefficients")
        for (i, k) in sorted(half, reverse=True):
            print(N, i, k, half[(i, k)])


if __name__ == "__main__":
    main()
