#!/usr/bin/env python3
"""Expand the factored forms in data/tables.src into data/tables.txt.

For every rational-function field `key = expr` in a [family N] block, emits
`key.num` / `key.den` (or `key.coeffs` for F and G) as ascending coefficient
lists. Expansion uses sympy, independently of the C++ parser that re-checks it.

Usage: expand_tables.py data/tables.src > data/tables.txt
"""
import re
import sys

import sympy as sp

POLY_FIELDS = {"F", "G"}
RF_FIELDS = {"jmap", "jpmap", "hC", "hX", "thm1", "thm2.j", "thm2.jp"}
VAR = {"jmap": "h", "jpmap": "h", "F": "h", "G": "h"}


def to_sympy(expr, var):
    s = expr.replace("^", "**")
    # implicit multiplication: 16t, )(, )t, t(
    s = re.sub(r"(\d)\s*([a-z(])", r"\1*\2", s)
    s = re.sub(r"\)\s*([a-z0-9(])", r")*\1", s)
    s = re.sub(r"([a-z])\s*\(", r"\1*(", s)
    s = re.sub(r"([a-z])\s+([a-z])", r"\1*\2", s)
    return sp.sympify(s, locals={var: sp.Symbol(var)})


def coeff_list(poly):
    return " ".join(str(c) for c in reversed(poly.all_coeffs()))


def main():
    src = open(sys.argv[1]).read().splitlines()
    out = []
    for line in src:
        out.append(line)
        m = re.match(r"^([A-Za-z0-9.]+) = (.*)$", line)
        if not m or m.group(1) not in POLY_FIELDS | RF_FIELDS:
            continue
        key, expr = m.groups()
        var = VAR.get(key, "t")
        x = sp.Symbol(var)
        e = sp.cancel(sp.together(to_sympy(expr, var)))
        num, den = sp.fraction(e)
        pn, pd = sp.Poly(num, x), sp.Poly(den, x)
        lc = pd.LC()
        pn, pd = pn * (1 / lc), pd * (1 / lc)
        if key in POLY_FIELDS:
            assert pd.degree() == 0
            out.append(f"{key}.coeffs = {coeff_list(pn)}")
        else:
            out.append(f"{key}.num = {coeff_list(pn)}")
            out.append(f"{key}.den = {coeff_list(pd)}")
    print("# GENERATED by tools/expand_tables.py from data/tables.src; edit the source.")
    print("\n".join(out))


if __name__ == "__main__":
    main()
