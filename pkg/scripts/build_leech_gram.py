"""Regenerate src/singprod/_leech.py: a reduced Gram matrix of the Leech lattice.

Construction: the extended binary Golay code from the cyclic code of length
23 with generator polynomial x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1, then the
Leech lattice as the vectors x in Z^24 (scaled by 1/sqrt 8) with

  * x_i all congruent to m mod 2,
  * sum(x) = 4m mod 8,
  * {i : x_i = 2 mod 4} (m = 0) or {i : x_i = 1 mod 4} (m = 1) a codeword.

A generating set is reduced to a basis by integer row echelon form, LLL
reduced (exact arithmetic, delta = 3/4), and the Gram matrix is B B^T / 8.

    python scripts/build_leech_gram.py [--check]
"""

import argparse
import pathlib
import sys
from fractions import Fraction
from itertools import product

GEN_POLY = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]  # coefficients of x^0 .. x^11

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "singprod" / "_leech.py"


def golay_basis():
    rows = []
    for shift in range(12):
        word = [0] * 23
        for i, c in enumerate(GEN_POLY):
            word[i + shift] = c
        rows.append(word + [sum(word) % 2])
    return rows


def golay_code(basis):
    words = set()
    for coeffs in product((0, 1), repeat=len(basis)):
        w = [0] * 24
        for c, b in zip(coeffs, basis):
            if c:
                w = [(x + y) % 2 for x, y in zip(w, b)]
        words.add(tuple(w))
    return words


def generating_set(basis):
    gens = [[2 * x for x in w] for w in basis]
    for j in range(1, 24):
        for s in (1, -1):
            v = [0] * 24
            v[0], v[j] = 4, 4 * s
            gens.append(v)
    gens.append([-3] + [1] * 23)
    return gens


def row_echelon(rows):
    rows = [list(r) for r in rows]
    basis = []
    for col in range(24):
        while True:
            live = [r for r in rows if r[col] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            for r in live[1:]:
                q = r[col] // piv[col]
                for k in range(24):
                    r[k] -= q * piv[k]
        live = [r for r in rows if r[col] != 0]
        if live:
            piv = live[0]
            rows.remove(piv)
            basis.append(piv)
    assert len(basis) == 24
    return basis


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def lll(b, delta=Fraction(3, 4)):
    b = [list(r) for r in b]
    n = len(b)

    def gso():
        bstar, mu = [], [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                mu[i][j] = Fraction(dot(b[i], bstar[j])) / dot(bstar[j], bstar[j])
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
            bstar.append(v)
        return bstar, mu

    bstar, mu = gso()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                bstar, mu = gso()
        if dot(bstar[k], bstar[k]) >= (delta - mu[k][k - 1] ** 2) * dot(bstar[k - 1], bstar[k - 1]):
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            bstar, mu = gso()
            k = max(k - 1, 1)
    return b


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare with the shipped matrix instead of writing")
    args = ap.parse_args(argv)

    basis = golay_basis()
    code = golay_code(basis)
    weights = sorted({sum(w) for w in code})
    assert len(code) == 4096 and weights == [0, 8, 12, 16, 24], weights

    b = lll(row_echelon(generating_set(basis)))
    gram = [[dot(u, v) for v in b] for u in b]
    assert all(x % 8 == 0 for row in gram for x in row)
    gram = [[x // 8 for x in row] for row in gram]

    body = ",\n".join("    (" + ", ".join(f"{x:2d}" for x in row) + ")" for row in gram)
    text = (
        '"""Gram matrix of the Leech lattice (generated by scripts/build_leech_gram.py)."""\n\n'
        f"LEECH_GRAM = (\n{body},\n)\n"
    )
    if args.check:
        same = OUT.exists() and OUT.read_text() == text
        print("shipped Leech Gram matrix is", "up to date" if same else "STALE")
        return 0 if same else 1
    OUT.write_text(text)
    print(f"wrote {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
