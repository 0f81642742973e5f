"""Integral lattices given by a Gram matrix, with exact arithmetic throughout.

Vectors are tuples of :class:`fractions.Fraction` holding coordinates in
the lattice basis. Use :func:`vec` to build one from ints or ``"p/q"``
strings.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import ceil, floor, isqrt

from . import linalg


class LatticeError(ValueError):
    """Malformed input: wrong dimensions, degenerate Gram matrix, etc."""


class DomainError(ValueError):
    """Input outside an operation's domain (norm-zero reflection vector...)."""


def vec(*coords):
    if len(coords) == 1 and not isinstance(coords[0], (int, str, Fraction)):
        coords = tuple(coords[0])
    return tuple(linalg.to_fraction(x) for x in coords)


def is_integral(v):
    return all(Fraction(x).denominator == 1 for x in v)


@dataclass(frozen=True)
class GramLattice:
    """A nondegenerate integral lattice ``Z^rank`` with the given Gram matrix."""

    gram: tuple
    rank: int = field(default=None)

    def __post_init__(self):
        rows = tuple(tuple(int(x) if not isinstance(x, Fraction) or x.denominator == 1 else x
                           for x in row) for row in self.gram)
        n = len(rows)
        if self.rank is not None and self.rank != n:
            raise LatticeError(f"rank {self.rank} does not match a {n}x? Gram matrix")
        if n == 0 or any(len(r) != n for r in rows):
            raise LatticeError("Gram matrix must be square and nonempty")
        if any(not isinstance(x, int) for r in rows for x in r):
            raise LatticeError("Gram matrix must have integer entries")
        if any(rows[i][j] != rows[j][i] for i in range(n) for j in range(i)):
            raise LatticeError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", rows)
        object.__setattr__(self, "rank", n)
        if self.det == 0:
            raise LatticeError("Gram matrix is degenerate (det = 0)")

    @cached_property
    def det(self):
        return linalg.det(self.gram)

    @cached_property
    def inverse_gram(self):
        return linalg.inverse(self.gram)

    def __repr__(self):
        return f"GramLattice(rank={self.rank}, det={self.det})"

    def _check(self, *vs):
        for v in vs:
            if len(v) != self.rank:
                raise LatticeError(f"vector of length {len(v)} in a rank-{self.rank} lattice")

    def bilinear(self, x, y):
        self._check(x, y)
        g = self.gram
        return sum(Fraction(xi) * sum(g[i][j] * yj for j, yj in enumerate(y) if yj)
                   for i, xi in enumerate(x) if xi) + Fraction(0)

    def norm(self, x):
        return self.bilinear(x, x)

    @cached_property
    def signature(self):
        diag = linalg.congruence_diagonal(self.gram)
        return sum(1 for d in diag if d > 0), sum(1 for d in diag if d < 0)

    @cached_property
    def is_even(self):
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def is_positive_definite(self):
        return self.signature == (self.rank, 0)


def bilinear(lattice, x, y):
    return lattice.bilinear(x, y)


def signature(lattice):
    return lattice.signature


def is_even(lattice):
    return lattice.is_even


def is_in_dual(lattice, v):
    lattice._check(v)
    return all(Fraction(x).denominator == 1 for x in linalg.matvec(lattice.gram, v))


@dataclass(frozen=True)
class DiscriminantData:
    """``L'/L`` as a product of cyclic groups with chosen dual generators.

    ``generators[i]`` has order ``invariant_factors[i]``. ``_to_gen`` maps
    the Gram image ``G x`` of a dual vector ``x`` to its (integer) coordinates
    on the generators.
    """

    invariant_factors: tuple
    generators: tuple
    _to_gen: tuple = field(repr=False, default=())

    @property
    def order(self):
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    @property
    def exponent(self):
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def coordinates(self, lattice, x):
        """Coordinates of the class of ``x`` on the generators, reduced mod the orders."""
        if not is_in_dual(lattice, x):
            raise LatticeError(f"{x} is not in the dual lattice")
        gx = [int(c) for c in linalg.matvec(lattice.gram, x)]
        coords = linalg.matvec(self._to_gen, gx)
        return tuple(int(c) % d for c, d in zip(coords, self.invariant_factors))

    def element(self, coords):
        rank = len(self.generators[0]) if self.generators else 0
        out = [Fraction(0)] * rank
        for a, g in zip(coords, self.generators):
            if a:
                out = [o + a * gi for o, gi in zip(out, g)]
        return tuple(out)

    def canonical(self, lattice, x):
        """The canonical representative of ``x + L``: generator coordinates in ``[0, d_i)``."""
        if not self.generators:
            if not is_integral(x):
                raise LatticeError(f"{x} is not in the dual lattice")
            return (Fraction(0),) * lattice.rank
        return self.element(self.coordinates(lattice, x))


def discriminant_group(lattice):
    diag, u, v = linalg.smith_normal_form(lattice.gram)
    keep = [i for i, d in enumerate(diag) if d != 1]
    factors = tuple(diag[i] for i in keep)
    # U G V = D  =>  G^{-1} = V D^{-1} U, so the columns V[:, i] / d_i generate L'/L
    gens = tuple(tuple(Fraction(v[r][i], diag[i]) for r in range(lattice.rank)) for i in keep)
    # x = V D^{-1} a  <=>  a = U G x
    to_gen = tuple(tuple(u[i]) for i in keep)
    return DiscriminantData(factors, gens, to_gen)


def rescale(lattice, d):
    if not isinstance(d, int) or d <= 0:
        raise LatticeError(f"rescaling factor must be a positive integer, got {d!r}")
    return GramLattice(tuple(tuple(d * x for x in row) for row in lattice.gram))


def direct_sum(*lattices):
    n = sum(L.rank for L in lattices)
    rows = []
    offset = 0
    for L in lattices:
        for row in L.gram:
            rows.append((0,) * offset + tuple(row) + (0,) * (n - offset - L.rank))
        offset += L.rank
    return GramLattice(tuple(rows))


def reflection_matrix(lattice, lam):
    """Matrix (acting on coordinate columns) of ``v -> v - 2(lam, v)/(lam, lam) lam``."""
    lattice._check(lam)
    nn = lattice.norm(lam)
    if nn == 0:
        raise DomainError("reflection in a norm-zero vector is undefined")
    g_lam = linalg.matvec(lattice.gram, lam)
    n = lattice.rank
    return [[Fraction(int(i == j)) - 2 * Fraction(lam[i]) * g_lam[j] / nn for j in range(n)]
            for i in range(n)]


def is_integral_reflection(lattice, lam):
    r = reflection_matrix(lattice, lam)
    return all(x.denominator == 1 for row in r for x in row)


def _interval(center, radius_sq):
    """All integers x with (x - center)^2 <= radius_sq."""
    if radius_sq < 0:
        return range(0)
    s = isqrt(floor(radius_sq)) + 1
    lo, hi = floor(center) - s, ceil(center) + s
    while (lo - center) ** 2 > radius_sq and lo <= hi:
        lo += 1
    while (hi - center) ** 2 > radius_sq and hi >= lo:
        hi -= 1
    return range(lo, hi + 1)


def _canonical_sign(v):
    for x in v:
        if x:
            return x > 0
    return False


def short_vectors(lattice, t):
    """All ``v`` in the lattice with ``(v, v) == t``, one of each pair ``+-v``.

    Fincke-Pohst enumeration over an exact LDL^T decomposition. Each vector
    has its first nonzero coordinate positive; the list is sorted
    lexicographically.
    """
    if not isinstance(t, int) or t <= 0:
        raise LatticeError(f"norm must be a positive integer, got {t!r}")
    if not lattice.is_positive_definite():
        raise DomainError("short vector enumeration needs a positive definite lattice")
    n = lattice.rank
    lo, d = linalg.ldl(lattice.gram)
    # Q(x) = sum_i d_i (x_i + sum_{j>i} lo[j][i] x_j)^2
    found = []
    x = [0] * n

    def search(i, budget):
        center = -sum(lo[j][i] * x[j] for j in range(i + 1, n) if x[j])
        for xi in _interval(center, budget / d[i]):
            x[i] = xi
            rest = budget - d[i] * (xi - center) ** 2
            if i == 0:
                if rest == 0:
                    found.append(tuple(x))
            else:
                search(i - 1, rest)
        x[i] = 0

    search(n - 1, Fraction(t))
    return sorted(tuple(Fraction(c) for c in v) for v in found if _canonical_sign(v))


def norm_ideal_generator(lattice):
    """The positive generator of the ideal spanned by ``v^2/2``, ``v`` in an even lattice."""
    if not lattice.is_even:
        raise DomainError("the norm ideal generator needs an even lattice")
    g = lattice.gram
    n = lattice.rank
    vals = [g[i][i] // 2 for i in range(n)] + [g[i][j] for i in range(n) for j in range(i + 1, n)]
    return linalg.gcd_all(vals)


def unimodular_conjugate(lattice, p):
    """The Gram matrix ``p^T G p`` for an integer basis change ``p``."""
    return GramLattice(tuple(tuple(row) for row in
                             linalg.matmul(linalg.transpose(p), linalg.matmul(lattice.gram, p))))


__all__ = [
    "DiscriminantData", "DomainError", "GramLattice", "LatticeError", "bilinear",
    "direct_sum", "discriminant_group", "is_even", "is_in_dual",
    "is_integral", "is_integral_reflection", "norm_ideal_generator", "reflection_matrix",
    "rescale", "short_vectors", "signature", "unimodular_conjugate", "vec",
]
