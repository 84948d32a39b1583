#!/usr/bin/env python3
"""Finite quotient of the right-angled pentagon reflection group.

The reflection representation with B(s,s) = 1, B(s,t) = 0 for commuting s,t
and B(s,t) = -c otherwise, where c^2 = c + 1, is reduced mod p and made to
act on the projective plane over F_p through the 3-dimensional dual of
V / rad(B). The generator images are written as permutations of the points
of that plane, in the JSON format read by `curvlab coxeter`.

Usage: make_pentagon_quotient.py [--p 19] [--c 5] [--out FILE]
"""

import argparse
import json
import sys


def rank_and_pivots(rows, p):
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(len(m[0])):
        piv = next((i for i in range(r, len(m)) if m[i][col] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][col], p - 2, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    return r, pivots


def solve_coordinates(basis, v, p):
    """Coefficients x with sum x_i basis_i = v (basis rows independent)."""
    k = len(basis)
    n = len(v)
    # augmented system basis^T x = v
    m = [[basis[i][j] for i in range(k)] + [v[j]] for j in range(n)]
    r = 0
    where = [-1] * k
    for col in range(k):
        piv = next((i for i in range(r, n) if m[i][col] % p), None)
        if piv is None:
            raise ValueError("dependent basis")
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][col], p - 2, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(n):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        where[col] = r
        r += 1
    for i in range(r, n):
        if m[i][k] % p:
            raise ValueError("vector outside the span")
    return [m[where[c]][k] for c in range(k)]


def normalise(v, p):
    lead = next(x for x in v if x % p)
    inv = pow(lead, p - 2, p)
    return tuple(x * inv % p for x in v)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=19)
    ap.add_argument("--c", type=int, default=5)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    p, c, n = args.p, args.c, 5
    if (c * c - c - 1) % p:
        sys.exit(f"c = {c} is not a root of x^2 - x - 1 mod {p}")

    def adjacent(s, t):
        return (s - t) % n in (1, n - 1)

    B = [[1 if s == t else (0 if adjacent(s, t) else -c % p) for t in range(n)] for s in range(n)]
    # reflection s acts on row vectors by v -> v M_s, M_s = I - 2 e_s^T B_s
    refl = []
    for s in range(n):
        M = [[int(i == j) for j in range(n)] for i in range(n)]
        for t in range(n):
            M[s][t] = (M[s][t] - 2 * B[s][t]) % p
        refl.append(M)
    # the row space of B is invariant
    rank, _ = rank_and_pivots(B, p)
    basis = []
    for row in B:
        if rank_and_pivots(basis + [row], p)[0] > len(basis):
            basis.append(row)
    assert len(basis) == rank == 3, rank

    def act(v, M):
        return [sum(v[i] * M[i][j] for i in range(n)) % p for j in range(n)]

    A = []
    for M in refl:
        A.append([solve_coordinates(basis, act(b, M), p) for b in basis])

    points = sorted({normalise((x, y, z), p) for x in range(p) for y in range(p) for z in range(p)
                     if (x, y, z) != (0, 0, 0)})
    index = {pt: i for i, pt in enumerate(points)}

    def move(pt, a):
        return normalise(tuple(sum(pt[i] * a[i][j] for i in range(3)) % p for j in range(3)), p)

    perms = [[index[move(pt, a)] for pt in points] for a in A]

    # order of the generated group, by closure over permutations
    ident = tuple(range(len(points)))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in perms:
                h = tuple(s[g[i]] for i in range(len(g)))
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    doc = {
        "description": f"right-angled pentagon group mod {p}, c = {c}, acting on the projective plane",
        "order": len(seen),
        "gen_permutations": perms,
    }
    text = json.dumps(doc, separators=(",", ":")) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as f:
            f.write(text)
    print(f"group order {len(seen)} on {len(points)} points", file=sys.stderr)


if __name__ == "__main__":
    main()
