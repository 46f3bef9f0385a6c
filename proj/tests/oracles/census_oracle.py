#!/usr/bin/env python3
"""Brute-force census oracle over Z and Z[i].

Enumerates monic polynomials of bounded height with plain integer (or
Gaussian integer) arithmetic, finds linear factors by trying every candidate
root allowed by the constant term, and prints the counts. With --cli it also
runs `vdw census` and compares the report against the oracle.
"""

import argparse
import itertools
import json
import subprocess
import sys


def gauss_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def gauss_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def evaluate(coeffs, x, d):
    """coeffs low to high, leading 1 included."""
    if d == 1:
        acc = 0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc
    acc = (0, 0)
    for c in reversed(coeffs):
        acc = gauss_add(gauss_mul(acc, x), c)
    return acc


def candidate_roots(coeffs, d):
    """Zero, plus every integer (or Gaussian integer) whose norm divides the
    norm of the lowest nonzero coefficient."""
    zero = 0 if d == 1 else (0, 0)
    low = next(c for c in coeffs if c != zero)
    out = [zero] if coeffs[0] == zero else []
    if d == 1:
        m = abs(low)
        return out + [s * t for t in range(1, m + 1) if m % t == 0 for s in (1, -1)]
    norm = low[0] ** 2 + low[1] ** 2
    r = int(norm ** 0.5) + 1
    return out + [(a, b) for a in range(-r, r + 1) for b in range(-r, r + 1) if 0 < a * a + b * b <= norm]


def is_zero(v, d):
    return v == 0 if d == 1 else v == (0, 0)


def census(n, N, d):
    coord = range(-N, N + 1)
    elems = list(coord) if d == 1 else list(itertools.product(coord, coord))
    one = 1 if d == 1 else (1, 0)
    total = rho1 = 0
    T = {}
    for lower in itertools.product(elems, repeat=n):
        coeffs = list(lower) + [one]
        total += 1
        roots = [x for x in candidate_roots(coeffs, d) if is_zero(evaluate(coeffs, x, d), d)]
        if roots:
            rho1 += 1
        for x in roots:
            T[x] = T.get(x, 0) + 1
    return total, rho1, T


def L_count(n, N, h):
    """Tuples in [-N, N]^n with coordinate sum h."""
    return sum(1 for t in itertools.product(range(-N, N + 1), repeat=n) if sum(t) == h)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", help="path to the vdw binary to compare against")
    args = ap.parse_args()

    total, rho1, T = census(3, 1, 1)
    oracle = {
        "total": total,
        "rho": rho1,  # a reducible cubic has a linear factor
        "T0": T.get(0, 0),
        "T1": T.get(1, 0),
        "L0": L_count(3, 1, 0),
    }
    print("Q n=3 N=1:", json.dumps(oracle, sort_keys=True))

    totq, rhoq, _ = census(2, 1, 2)
    print(f"Q(i) n=2 N=1: total={totq} rho={rhoq}")

    if not args.cli:
        return 0

    failures = []

    def run(*flags):
        out = subprocess.run([args.cli, "census", *flags], check=True, capture_output=True, text=True).stdout
        return json.loads(out.split("\n\n")[0])

    rep = run("--field", "Q", "--n", "3", "--N", "1")["result"]
    got = {
        "total": rep["total"],
        "rho": rep["rho"],
        "T0": rep["T"].get("[0]", 0),
        "T1": rep["T"].get("[1]", 0),
        "L0": next((e["count"] for e in rep["L"] if e["h"] == [0]), None),
    }
    if got != oracle:
        failures.append(f"Q n=3 N=1: cli {got} vs oracle {oracle}")

    rep = run("--field", "Qi", "--n", "2", "--N", "1")["result"]
    if rep["total"] != totq or rep["rho"] != rhoq:
        failures.append(f"Q(i) n=2 N=1: cli total={rep['total']} rho={rep['rho']} vs oracle {totq} {rhoq}")

    for N in (2, 3):
        total, rho1, _ = census(3, N, 1)
        rep = run("--field", "Q", "--n", "3", "--N", str(N))["result"]
        if rep["total"] != total or rep["rho"] != rho1:
            failures.append(f"Q n=3 N={N}: cli {rep['total']} {rep['rho']} vs oracle {total} {rho1}")

    for f in failures:
        print("MISMATCH", f)
    if not failures:
        print("cli matches oracle")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
