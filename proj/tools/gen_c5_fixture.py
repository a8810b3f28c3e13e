#!/usr/bin/env python3
"""Rebuild data/lmfdb_c5_fixture.ndjson without network access.

Cyclic quintic fields in which 5 is totally ramified and 2 is inert are
exactly the fixed fields of order-5 Dirichlet characters chi of conductor
25 * l_1 * ... * l_k (l_i = 1 mod 5) with chi(2) != 1. Each field is given by
the minimal polynomial of the Gaussian period over ker(chi); disc = f^4.

Fields are ordered by |disc| and then by coefficient list; the first
RECORDS of them are written.
"""
import argparse
import itertools
import json
import math
import sys

import mpmath
import sympy

RECORDS = 153
QUERY = {"degree": 5, "galois_label": "5T1", "page_size": 100, "r2": 0, "ramified": [5]}
SOURCE = ("reconstructed offline from order-5 Dirichlet characters of conductor 25*m, "
          "filtered on chi(2) != 1; not an LMFDB download, labels and defining "
          "polynomials need not match LMFDB's")


def dlog_mod5(l, g, x):
    return sympy.discrete_log(l, x % l, g) % 5


def characters(max_conductor):
    """(conductor, kernel test) for every order-5 character up to powers."""
    primes = [l for l in sympy.primerange(11, max_conductor // 25 + 1) if l % 5 == 1]
    roots = {l: sympy.primitive_root(l) for l in primes}
    out = []
    for k in range(0, 4):
        for ls in itertools.combinations(primes, k):
            f = 25 * math.prod(ls)
            if f > max_conductor:
                continue
            for bs in itertools.product(range(1, 5), repeat=k):
                out.append((f, ls, bs))
    return out, roots


def period_polynomial(f, ls, bs, roots):
    def index(x):
        e = sympy.discrete_log(25, x % 25, 2) % 5
        for l, b in zip(ls, bs):
            e += b * dlog_mod5(l, roots[l], x)
        return e % 5

    units = [x for x in range(1, f) if math.gcd(x, f) == 1]
    if index(2) == 0:
        return None  # 2 splits
    ind = {x: index(x) for x in units}
    cos = [mpmath.cos(2 * mpmath.pi * a / f) for a in range(f)]
    periods = [mpmath.mpf(0)] * 5
    for x in units:
        periods[ind[x]] += cos[x]
    x = sympy.Symbol("x")
    poly = sympy.Poly(sympy.prod([x - sympy.Float(str(eta), 60) for eta in periods]), x)
    coeffs = []
    for c in reversed(poly.all_coeffs()):
        r = sympy.Integer(round(c))
        if abs(c - r) > 1e-20:
            raise RuntimeError(f"non-integral coefficient for conductor {f}")
        coeffs.append(int(r))
    exact = sympy.Poly(list(reversed(coeffs)), x)
    if not exact.is_irreducible:
        raise RuntimeError(f"period polynomial reducible for conductor {f}")
    d = int(sympy.discriminant(exact))
    q, rem = divmod(d, f ** 4)
    if rem or sympy.integer_nthroot(q, 2)[1] is False:
        raise RuntimeError(f"disc {d} is not f^4 times a square for conductor {f}")
    return coeffs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="data/lmfdb_c5_fixture.ndjson")
    ap.add_argument("--max-conductor", type=int, default=20000)
    ap.add_argument("--snapshot-date", default="2026-10-18")
    args = ap.parse_args()
    mpmath.mp.dps = 60

    chars, roots = characters(args.max_conductor)
    fields = []
    for f, ls, bs in chars:
        coeffs = period_polynomial(f, ls, bs, roots)
        if coeffs is not None:
            fields.append((f ** 4, coeffs))
    fields.sort()
    if len(fields) < RECORDS:
        sys.exit(f"only {len(fields)} fields below conductor {args.max_conductor}")
    fields = fields[:RECORDS]

    lines = [json.dumps({"fixture": "nf_fields", "query": QUERY, "record_count": RECORDS,
                         "snapshot_date": args.snapshot_date, "source": SOURCE},
                        sort_keys=True, separators=(",", ":"))]
    seen = {}
    for disc, coeffs in fields:
        seen[disc] = seen.get(disc, 0) + 1
        rec = {"coeffs": coeffs, "degree": 5, "disc_abs": disc, "disc_sign": 1,
               "galois_label": "5T1", "label": f"5.5.{disc}.{seen[disc]}"}
        lines.append(json.dumps(rec, sort_keys=True, separators=(",", ":")))
    with open(args.out, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {RECORDS} records, conductors {round(fields[0][0] ** 0.25)}..{round(fields[-1][0] ** 0.25)}")


if __name__ == "__main__":
    main()
