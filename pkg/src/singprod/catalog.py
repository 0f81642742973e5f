"""Built-in lattices and known singular/reflective forms.

Lattices are built lazily on first lookup and self-checked (signature,
determinant, parity) before being handed out.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ._leech import LEECH_GRAM
from .audit import CandidateProduct, PrincipalPart
from .lattice import GramLattice, direct_sum, rescale


class CatalogError(KeyError):
    pass


def hyperbolic_plane():
    return GramLattice(((0, 1), (1, 0)))


def root_lattice_A(n):
    return GramLattice(tuple(tuple(2 if i == j else -1 if abs(i - j) == 1 else 0
                                   for j in range(n)) for i in range(n)))


def root_lattice_D(n):
    """D_n on the simple roots e_i - e_{i+1} (i < n) and e_{n-1} + e_n."""
    if n < 3:
        raise ValueError("D_n needs n >= 3")
    g = [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n)] for i in range(n)]
    g[n - 1][n - 2] = g[n - 2][n - 1] = 0
    g[n - 1][n - 3] = g[n - 3][n - 1] = -1
    return GramLattice(tuple(map(tuple, g)))


def root_lattice_E8():
    g = [[2 if i == j else -1 if abs(i - j) == 1 and max(i, j) < 7 else 0 for j in range(8)]
         for i in range(8)]
    g[2][7] = g[7][2] = -1
    return GramLattice(tuple(map(tuple, g)))


def d_vector_class(n):
    """The norm-1 dual vector e_1 of D_n in simple-root coordinates."""
    return tuple(Fraction(1) for _ in range(n - 2)) + (Fraction(1, 2), Fraction(1, 2))


@dataclass(frozen=True)
class NamedLattice:
    name: str
    lattice: GramLattice
    signature: tuple
    det: int
    even: bool
    min_norm: int = None

    def __post_init__(self):
        L = self.lattice
        if L.signature != self.signature:
            raise AssertionError(f"{self.name}: signature {L.signature} != {self.signature}")
        if L.det != self.det:
            raise AssertionError(f"{self.name}: det {L.det} != {self.det}")
        if L.is_even != self.even:
            raise AssertionError(f"{self.name}: parity check failed")


def _u():
    return hyperbolic_plane()


_BUILDERS = {
    "U": (lambda: _u(), (1, 1), -1, True, None),
    "A1": (lambda: root_lattice_A(1), (1, 0), 2, True, 2),
    "A2": (lambda: root_lattice_A(2), (2, 0), 3, True, 2),
    "D4": (lambda: root_lattice_D(4), (4, 0), 4, True, 2),
    "E8": (lambda: root_lattice_E8(), (8, 0), 1, True, 2),
    "D20": (lambda: root_lattice_D(20), (20, 0), 4, True, 2),
    "Leech": (lambda: GramLattice(LEECH_GRAM), (24, 0), 1, True, 4),
    "U+Leech": (lambda: direct_sum(_u(), GramLattice(LEECH_GRAM)), (25, 1), -1, True, None),
    "2U+Leech": (lambda: direct_sum(_u(), _u(), GramLattice(LEECH_GRAM)), (26, 2), 1, True, None),
    "U+D20": (lambda: direct_sum(_u(), root_lattice_D(20)), (21, 1), -4, True, None),
    "2U+D20": (lambda: direct_sum(_u(), _u(), root_lattice_D(20)), (22, 2), 4, True, None),
}
ALIASES = {"II26,2": "2U+Leech", "II_26,2": "2U+Leech"}

_RESCALED_U = re.compile(r"^U\((\d+)\)$")


def lattice_names():
    return sorted(_BUILDERS) + ["U(m)"]


def get_lattice(name):
    return _get_lattice(ALIASES.get(name, name))


@lru_cache(maxsize=None)
def _get_lattice(name):
    match = _RESCALED_U.match(name)
    if match:
        m = int(match.group(1))
        if m < 1:
            raise CatalogError(f"U(m) needs m >= 1, got {name}")
        return NamedLattice(name, rescale(_u(), m), (1, 1), -m * m, True)
    if name not in _BUILDERS:
        raise CatalogError(f"unknown lattice {name!r}; known: {', '.join(lattice_names())}")
    build, sig, det, even, min_norm = _BUILDERS[name]
    return NamedLattice(name, build(), sig, det, even, min_norm)


@dataclass(frozen=True)
class KnownForm:
    """A known form on ``home = U + K``.

    ``divisor`` lists ``(norm, in_dual, multiplicity)``: divisor vectors of the
    given norm lying in the lattice (``in_dual=False``) or only in its dual.
    """

    name: str
    home: str
    K: str
    weight: Fraction
    divisor: tuple
    principal: tuple = None
    c00: int = None

    def candidate(self):
        if self.principal is None:
            raise CatalogError(f"{self.name} has no recorded principal part")
        return CandidateProduct(get_lattice(self.K).lattice, self.weight,
                                PrincipalPart(self.principal), c00=self.c00, name=self.name)


_FORMS = {
    "Phi12": KnownForm(
        name="Phi12", home="2U+Leech", K="U+Leech", weight=Fraction(12),
        divisor=((2, False, 1),),
        principal=(((0,) * 26, 1, 1),),
        c00=24,
    ),
    # divisor u^perp (u^2 = 1, u in the dual) multiplicity 8 and v^perp (v^2 = 2) multiplicity 1;
    # 2u lies in the lattice with norm 4 and carries no extra coefficient
    "Psi24": KnownForm(
        name="Psi24", home="2U+D20", K="U+D20", weight=Fraction(24),
        divisor=((2, False, 1), (1, True, 8)),
        principal=(((0,) * 22, 1, 1), ((0, 0) + d_vector_class(20), Fraction(1, 2), 8)),
        c00=48,
    ),
}


def form_names():
    return sorted(_FORMS)


def get_form(name):
    if name not in _FORMS:
        raise CatalogError(f"unknown form {name!r}; known: {', '.join(form_names())}")
    return _FORMS[name]
