"""Independent brute-force oracles and random generators for the test suite.

Nothing here calls the enumeration, SNF or fiber code under test.
"""

import random
from fractions import Fraction
from itertools import permutations, product
from math import gcd, isqrt

from singprod.lattice import GramLattice


def quad(gram, x, y=None):
    y = x if y is None else y
    return sum(Fraction(x[i]) * gram[i][j] * y[j] for i in range(len(x)) for j in range(len(x)))


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


def box_short_vectors(gram, t):
    """All ``v`` with ``v^T G v == t`` found by scanning the box ``|v_i| <= sqrt(t (G^-1)_ii)``."""
    n = len(gram)
    det = leibniz_det(gram)
    # (G^-1)_ii = det(minor_ii) / det(G)
    inv_diag = [Fraction(leibniz_det([[gram[a][b] for b in range(n) if b != i] for a in range(n) if a != i]), det)
                for i in range(n)]
    bounds = [isqrt(int(t * inv_diag[i])) + 1 for i in range(n)]
    out = []
    for v in product(*(range(-b, b + 1) for b in bounds)):
        if quad(gram, v) == t:
            out.append(v)
    return out


def canonical_half(vectors):
    def first_pos(v):
        for x in v:
            if x:
                return x > 0
        return False
    return sorted(tuple(Fraction(x) for x in v) for v in vectors if first_pos(v))


def e8_orthonormal_roots():
    """Norm-2 vectors of E8 in R^8: D8 roots plus the half-integer vectors with even sum of signs."""
    roots = [v for v in product((-1, 0, 1), repeat=8) if sum(x * x for x in v) == 2]
    for signs in product((-1, 1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(tuple(Fraction(s, 2) for s in signs))
    return roots


def brute_mk(gram, bound=5):
    g = 0
    for v in product(range(-bound, bound + 1), repeat=len(gram)):
        g = gcd(g, int(quad(gram, v) / 2))
    return g


def bookkeeping_search(s, w, m_max, limit):
    """Minimal ``(a, d)`` with ``a, d <= limit``, ``s a = w d`` and ``m_max d <= a``, scanning every d."""
    s, w = Fraction(s), Fraction(w)
    for d in range(1, limit + 1):
        a = w * d / s
        if a.denominator == 1 and 1 <= a <= limit and m_max * d <= a:
            return int(a), d
    return None


def random_unimodular(rng, n, steps=6):
    p = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            p = [[-x for x in row] for row in p]
            continue
        k = rng.choice((-2, -1, 1, 2))
        for row in p:
            row[j] += k * row[i]
    return p


def conjugate(gram, p):
    n = len(gram)
    return [[sum(p[a][i] * gram[a][b] * p[b][j] for a in range(n) for b in range(n))
             for j in range(n)] for i in range(n)]


def solve_unimodular(p, x):
    """``p^-1 x`` by exact Gaussian elimination."""
    n = len(p)
    m = [[Fraction(p[i][j]) for j in range(n)] + [Fraction(x[i])] for i in range(n)]
    for k in range(n):
        piv = next(i for i in range(k, n) if m[i][k] != 0)
        m[k], m[piv] = m[piv], m[k]
        m[k] = [a / m[k][k] for a in m[k]]
        for i in range(n):
            if i != k and m[i][k]:
                f = m[i][k]
                m[i] = [a - f * b for a, b in zip(m[i], m[k])]
    return tuple(row[n] for row in m)


_DEFINITE_PARTS = {
    0: [[]],
    1: [[[2]], [[4]], [[6]]],
    2: [[[2, -1], [-1, 2]], [[2, 0], [0, 2]], [[2, 1], [1, 4]], [[4, 1], [1, 2]]],
}


class RandomLorentzian:
    """A random Lorentzian lattice ``P^T (U(k) + D) P`` with an isotropic-vector sampler."""

    def __init__(self, rng, rank):
        self.rng = rng
        k = rng.choice((1, 1, 2, 3))
        d = rng.choice(_DEFINITE_PARTS[rank - 2])
        n = rank
        base = [[0] * n for _ in range(n)]
        base[0][1] = base[1][0] = k
        for i, row in enumerate(d):
            for j, x in enumerate(row):
                base[2 + i][2 + j] = x
        self.k, self.d, self.base = k, d, base
        self.p = random_unimodular(rng, n)
        self.gram = conjugate(base, self.p)
        self.lattice = GramLattice(tuple(map(tuple, self.gram)))

    def rational(self, lo=-3, hi=3, den=(1, 1, 2, 3)):
        return Fraction(self.rng.randint(lo, hi), self.rng.choice(den))

    def isotropic(self):
        """A random nonzero rational isotropic vector, in the lattice basis."""
        rng = self.rng
        w = [self.rational() for _ in self.d]
        ww = sum(w[i] * self.d[i][j] * w[j] for i in range(len(w)) for j in range(len(w))) if w else 0
        if rng.random() < 0.15 and ww == 0:
            base = [Fraction(rng.randint(1, 3)), Fraction(0)] if rng.random() < 0.5 else [Fraction(0), Fraction(rng.randint(1, 3))]
        else:
            a = Fraction(rng.choice((-3, -2, -1, 1, 2, 3)), rng.choice((1, 2)))
            b = -ww / (2 * self.k * a)
            base = [a, b]
        x = tuple(base + w)
        return solve_unimodular(self.p, x)

    def positive_vector(self):
        """A random integral vector of positive norm: ``a, b >= 1`` in the ``U(k)`` part."""
        rng = self.rng
        sign = rng.choice((-1, 1))
        x = [sign * rng.randint(1, 3), sign * rng.randint(1, 3)] + [rng.randint(-2, 2) for _ in self.d]
        return solve_unimodular(self.p, x)

    def any_vector(self):
        return tuple(self.rational() for _ in range(self.lattice.rank))


def reflect(gram, v, lam):
    """Independent reflection of ``lam`` in ``v``: ``lam - 2 (lam, v)/(v, v) v``."""
    f = 2 * quad(gram, lam, v) / quad(gram, v)
    return tuple(a - f * b for a, b in zip(lam, v))


def random_singular_vanishing(rng, lor, v, max_pairs=4):
    """A random singular series (as a term list) whose fiber sums along ``v`` all vanish.

    Isotropic exponents are drawn at random, some together with their mirror
    image; coefficients are random and the last coefficient of every fiber is
    then fixed so the fiber sums to zero. Fibers with a single term are dropped.
    """
    gram = lor.gram
    vv = quad(gram, v)
    terms = {}
    for _ in range(rng.randint(1, max_pairs)):
        lam = lor.isotropic()
        if all(x == 0 for x in lam):
            continue
        terms[lam] = terms.get(lam, 0) + Fraction(rng.randint(-5, 5) or 1, rng.choice((1, 2)))
        if rng.random() < 0.8:
            mirror = reflect(gram, v, lam)
            terms[mirror] = terms.get(mirror, 0) + Fraction(rng.randint(-5, 5) or 1)
    fibers = {}
    for lam, c in terms.items():
        if c == 0:
            continue
        t = quad(gram, lam, v)
        mu = tuple(a - t / vv * b for a, b in zip(lam, v))
        fibers.setdefault(mu, []).append([lam, c])
    out = []
    for entries in fibers.values():
        if len(entries) < 2:
            continue
        entries[-1][1] = -sum(c for _, c in entries[:-1])
        out += [(lam, c) for lam, c in entries if c]
    return out


def random_symmetric(rng, n, lo=-4, hi=4, even=False):
    while True:
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                x = rng.randint(lo, hi)
                if i == j and even:
                    x *= 2
                g[i][j] = g[j][i] = x
        if leibniz_det(g) != 0:
            return g


def make_rng(seed):
    return random.Random(seed)
