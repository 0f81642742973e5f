"""Finitely supported Fourier series on a tube domain over a Lorentzian lattice.

A series ``F = sum c(lam) q^lam`` with ``q^lam = exp(2 pi i (lam, Z))`` is
stored as a dict from rational coordinate tuples to nonzero Fractions. All
statements computed here are about the finite series as represented; the
transcendental constants ``-2 pi^2`` (Laplacian) and ``(2 pi i)^k / k!``
(Taylor coefficients) are nonzero and dropped.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .lattice import DomainError, GramLattice, LatticeError, reflection_matrix, vec

INFINITY = math.inf


@dataclass(frozen=True)
class TubeDatum:
    """A Lorentzian lattice, signature ``(rank - 1, 1)``."""

    lorentzian: GramLattice

    def __post_init__(self):
        n = self.lorentzian.rank
        if self.lorentzian.signature != (n - 1, 1):
            raise LatticeError(
                f"tube domain needs signature ({n - 1}, 1), got {self.lorentzian.signature}")


def _tube(lattice):
    return lattice if isinstance(lattice, TubeDatum) else TubeDatum(lattice)


class FourierSeries:
    """An immutable finite sum ``sum c(lam) q^lam``."""

    __slots__ = ("tube", "terms")

    def __init__(self, lattice, terms=()):
        tube = _tube(lattice)
        items = terms.items() if isinstance(terms, dict) else terms
        acc = {}
        n = tube.lorentzian.rank
        for lam, c in items:
            key = vec(lam)
            if len(key) != n:
                raise LatticeError(f"exponent {lam} has the wrong length for rank {n}")
            acc[key] = acc.get(key, Fraction(0)) + linalg.to_fraction(c)
        object.__setattr__(self, "tube", tube)
        object.__setattr__(self, "terms", {k: c for k, c in sorted(acc.items()) if c})

    def __setattr__(self, name, value):
        raise AttributeError("FourierSeries is immutable")

    @classmethod
    def monomial(cls, lattice, lam, c=1):
        return cls(lattice, [(lam, c)])

    @property
    def lattice(self):
        return self.tube.lorentzian

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coefficient(self, lam):
        return self.terms.get(vec(lam), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, FourierSeries):
            return NotImplemented
        return self.lattice == other.lattice and self.terms == other.terms

    def __hash__(self):
        return hash((self.lattice, tuple(self.terms.items())))

    def _same(self, other):
        if self.lattice != other.lattice:
            raise LatticeError("series live on different lattices")

    def __add__(self, other):
        self._same(other)
        return FourierSeries(self.tube, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return FourierSeries(self.tube, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        s = linalg.to_fraction(scalar)
        return FourierSeries(self.tube, {k: s * c for k, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "FourierSeries(0)"
        body = " + ".join(f"{c}*q^({', '.join(map(str, k))})" for k, c in self.terms.items())
        return f"FourierSeries({body})"


def laplace_normalized(F):
    """Holomorphic Laplacian divided by ``-2 pi^2``: ``q^lam -> (lam, lam) q^lam``."""
    L = F.lattice
    return FourierSeries(F.tube, {lam: L.norm(lam) * c for lam, c in F})


def is_singular(F):
    L = F.lattice
    return all(L.norm(lam) == 0 for lam, _ in F)


def _check_isometry(lattice, g):
    n = lattice.rank
    if len(g) != n or any(len(row) != n for row in g):
        raise LatticeError(f"isometry must be a {n}x{n} matrix")
    g = [[linalg.to_fraction(x) for x in row] for row in g]
    if linalg.matmul(linalg.transpose(g), linalg.matmul(lattice.gram, g)) != [list(r) for r in lattice.gram]:
        raise LatticeError("matrix does not preserve the Gram matrix")
    return g


def apply_isometry(F, g):
    """``F|g`` with ``(F|g)(Z) = F(gZ)``: the coefficient at ``lam`` is ``c(g lam)``."""
    g = _check_isometry(F.lattice, g)
    g_inv = linalg.inverse(g)
    return FourierSeries(F.tube, {tuple(linalg.matvec(g_inv, lam)): c for lam, c in F})


@dataclass(frozen=True)
class FiberDecomposition:
    """Series terms grouped by their projection ``mu`` onto ``v``-perp.

    ``fibers[mu]`` lists ``(t, c)`` with ``t = (lam, v)``, sorted by ``t``.
    """

    v: tuple
    vv: Fraction
    fibers: dict

    def reassemble(self, lattice):
        terms = []
        for mu, entries in self.fibers.items():
            for t, c in entries:
                terms.append((tuple(m + t / self.vv * x for m, x in zip(mu, self.v)), c))
        return FourierSeries(lattice, terms)

    def largest(self):
        return max((len(e) for e in self.fibers.values()), default=0)


def _positive(L, v):
    v = vec(v)
    vv = L.norm(v)
    if vv <= 0:
        raise DomainError(f"direction vector must have positive norm, got {vv}")
    return v, vv


def fiber_decompose(F, v):
    L = F.lattice
    v, vv = _positive(L, v)
    fibers = {}
    for lam, c in F:
        t = L.bilinear(lam, v)
        mu = tuple(x - t / vv * y for x, y in zip(lam, v))
        fibers.setdefault(mu, []).append((t, c))
    return FiberDecomposition(v, vv, {mu: tuple(sorted(e)) for mu, e in sorted(fibers.items())})


def order_along(F, v):
    """Vanishing order of ``F`` along ``v``-perp, or ``INFINITY`` for ``F = 0``.

    The ``z^k`` Taylor coefficient in the ``v`` direction is, fiber by fiber,
    ``sum c t^k``. A fiber with ``s`` distinct ``t`` values cannot have all of
    its first ``s`` power sums vanish (Vandermonde), so ``k`` never needs to
    exceed the largest fiber size.
    """
    fib = fiber_decompose(F, v)
    if not fib.fibers:
        return INFINITY
    for k in range(fib.largest()):
        if any(sum(c * t ** k for t, c in entries) for entries in fib.fibers.values()):
            return k
    raise AssertionError("nonzero series with all fiber power sums zero")


def is_anti_invariant(F, v):
    v = vec(v)
    if F.lattice.norm(v) == 0:
        raise DomainError("reflection in a norm-zero vector is undefined")
    return apply_isometry(F, reflection_matrix(F.lattice, v)) == -F


@dataclass(frozen=True)
class WitnessReport:
    singular: bool
    order: object
    anti_invariant: bool
    passed: bool

    @property
    def verdict(self):
        return "pass" if self.passed else "fail"

    @property
    def vacuous(self):
        return not (self.singular and self.order != INFINITY and self.order >= 1)


def theorem1_witness(F, v):
    """Check, on this instance, that singular + vanishing along ``v``-perp forces
    a simple zero there and anti-invariance under the reflection in ``v``."""
    order = order_along(F, v)
    singular = is_singular(F)
    anti = is_anti_invariant(F, v)
    if singular and order != INFINITY and order >= 1:
        passed = order == 1 and anti
    else:
        passed = True
    return WitnessReport(singular, order, anti, passed)
