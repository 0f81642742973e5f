"""Auditing candidate Borcherds products on lattices ``M = U + K``.

Coordinates on ``M`` are ``(a, b, r)``: ``a, b`` on the hyperbolic plane
``U`` (Gram ``[[0, 1], [1, 0]]``) followed by ``r`` in the basis of ``K``.
The divisor vector attached to a class ``(y, m)`` is

    v_r = (1, m - r^2/2, r),    (v_r, v_r) = 2 (m - r^2/2) + r^2 = 2m,

with ``r`` the canonical lift of ``y`` to ``K'``.
"""

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, isqrt

from . import linalg
from .lattice import (GramLattice, direct_sum, discriminant_group, is_in_dual,
                      is_integral_reflection, norm_ideal_generator, vec)

U = GramLattice(((0, 1), (1, 0)))


class AuditInputError(ValueError):
    pass


@dataclass(frozen=True)
class PrincipalTerm:
    """One term ``c q^{-n} e_x`` of a principal part."""

    coset: tuple
    n: Fraction
    c: int

    def __post_init__(self):
        object.__setattr__(self, "coset", vec(self.coset))
        object.__setattr__(self, "n", linalg.to_fraction(self.n))
        if isinstance(self.c, bool) or not isinstance(self.c, int):
            raise AuditInputError(f"coefficient must be an integer, got {self.c!r}")
        if self.n <= 0:
            raise AuditInputError(f"exponent n must be positive, got {self.n}")
        if self.c == 0:
            raise AuditInputError("principal part coefficients must be nonzero")


@dataclass(frozen=True)
class PrincipalPart:
    entries: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(
            e if isinstance(e, PrincipalTerm) else PrincipalTerm(*e) for e in self.entries))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


class RankVerdict(enum.Enum):
    NONE_EXISTS = "NONE_EXISTS"
    ONLY_PHI12 = "ONLY_PHI12"
    EXISTS = "EXISTS"
    UNKNOWN = "UNKNOWN"


EXISTING_RANKS = frozenset({3, 4, 6, 8, 10, 12, 14, 18})


def _check_l(l):
    if isinstance(l, bool) or not isinstance(l, int) or l < 3:
        raise AuditInputError(f"l must be an integer >= 3, got {l!r}")


def singular_weight(l):
    _check_l(l)
    return Fraction(l, 2) - 1


def rank_verdict(l):
    _check_l(l)
    if l == 26:
        return RankVerdict.ONLY_PHI12
    if l >= 21:
        return RankVerdict.NONE_EXISTS
    if l in EXISTING_RANKS:
        return RankVerdict.EXISTS
    return RankVerdict.UNKNOWN


@dataclass(frozen=True)
class Bookkeeping:
    feasible: bool
    witness: tuple = None


def bookkeeping_feasible(s, w, m_max):
    """Is there ``a, d >= 1`` with ``s a = w d`` and ``m_max d <= a``?

    Solutions are exactly the multiples of ``(p, q)`` where ``w/s = p/q`` in
    lowest terms, so the smallest one decides.
    """
    s, w = linalg.to_fraction(s), linalg.to_fraction(w)
    if isinstance(m_max, bool) or not isinstance(m_max, int):
        raise AuditInputError(f"m_max must be an integer, got {m_max!r}")
    if s <= 0 or w <= 0 or m_max <= 0:
        raise AuditInputError("bookkeeping inputs must be positive")
    ratio = w / s
    p, q = ratio.numerator, ratio.denominator
    if m_max * q <= p:
        return Bookkeeping(True, (p, q))
    return Bookkeeping(False)


@dataclass(frozen=True)
class DivisorClass:
    coset: tuple
    m: Fraction
    representative: tuple
    multiplicity: int

    @property
    def norm(self):
        return 2 * self.m


@dataclass(frozen=True)
class CandidateProduct:
    """A weight and a principal part on ``M = U + K``, ``K`` even Lorentzian."""

    K: GramLattice
    weight: Fraction
    principal: PrincipalPart
    c00: int = None
    name: str = "candidate"

    def __post_init__(self):
        object.__setattr__(self, "weight", linalg.to_fraction(self.weight))
        if not isinstance(self.principal, PrincipalPart):
            object.__setattr__(self, "principal", PrincipalPart(tuple(self.principal)))
        if not self.K.is_even:
            raise AuditInputError("K must be an even lattice")
        if self.weight < 0:
            raise AuditInputError("weight must be nonnegative")
        p, q = self.M.signature
        if q != 2 or p < 3:
            raise AuditInputError(f"U + K must have signature (l, 2) with l >= 3, got {(p, q)}")
        for e in self.principal:
            if len(e.coset) != self.K.rank:
                raise AuditInputError(f"coset {e.coset} has the wrong length for rank {self.K.rank}")

    @cached_property
    def M(self):
        return direct_sum(U, self.K)

    @property
    def l(self):
        return self.M.signature[0]

    @cached_property
    def disc(self):
        return discriminant_group(self.K)

    def canonical(self, x):
        return self.disc.canonical(self.K, x)

    def half_norm(self, x):
        return self.K.norm(x) / 2


def validate_principal(cand):
    """Check exponent consistency, symmetry and uniqueness; return the coefficient table."""
    table = {}
    for e in cand.principal:
        if not is_in_dual(cand.K, e.coset):
            raise AuditInputError(f"coset vector {e.coset} is not in the dual lattice K'")
        if (e.n - cand.half_norm(e.coset)).denominator != 1:
            raise AuditInputError(
                f"exponent n = {e.n} is inconsistent with x^2/2 = {cand.half_norm(e.coset)} mod 1")
        key = (cand.canonical(e.coset), e.n)
        if key in table:
            raise AuditInputError(f"duplicate principal part entry for coset {key[0]}, n = {e.n}")
        table[key] = e.c
    for (x, n), c in table.items():
        mirror = (cand.canonical(tuple(-a for a in x)), n)
        if table.get(mirror) != c:
            raise AuditInputError(f"principal part is not symmetric under x -> -x at coset {x}, n = {n}")
    return table


def _solve_multiple(disc, K, d, x):
    """All classes ``y`` in ``K'/K`` with ``d y = x``, as generator coordinates."""
    if not disc.invariant_factors:
        return [()]
    b = disc.coordinates(K, x)
    options = []
    for bi, di in zip(b, disc.invariant_factors):
        g = gcd(d, di)
        if bi % g:
            return []
        mod = di // g
        a0 = (bi // g) * pow(d // g, -1, mod) % mod if mod > 1 else 0
        options.append([a0 + k * mod for k in range(g)])
    out = [()]
    for opts in options:
        out = [prev + (a,) for prev in out for a in opts]
    return out


def divisor_classes(cand):
    """Divisor classes ``(y, m)`` with multiplicity ``sum_{d>=1} c(d y, -d^2 m)``.

    Every pair ``(y, m)`` reachable from an entry by ``(x, n) = (d y, d^2 m)``
    with ``m - y^2/2`` integral is considered; zero multiplicities are dropped.
    """
    table = validate_principal(cand)
    if not table:
        return []
    K, disc = cand.K, cand.disc
    e2 = disc.exponent ** 2
    n_max = max(n for _, n in table)
    pairs = set()
    for x, n in table:
        for d in range(1, isqrt(e2 * n.numerator) + 2):
            m = n / (d * d)
            for coords in _solve_multiple(disc, K, d, x):
                y = disc.element(coords) if coords else (Fraction(0),) * K.rank
                if (m - cand.half_norm(y)).denominator == 1:
                    pairs.add((y, m))
    out = []
    for y, m in pairs:
        mult = 0
        d = 1
        while d * d * m <= n_max:
            mult += table.get((cand.canonical(tuple(d * a for a in y)), d * d * m), 0)
            d += 1
        if mult:
            b = m - cand.half_norm(y)
            rep = (Fraction(1), b) + tuple(y)
            out.append(DivisorClass(y, m, rep, mult))
    out.sort(key=lambda dc: (dc.m, dc.coset))
    return out


@dataclass(frozen=True)
class MKEntry:
    coset: tuple
    n: Fraction
    c: int
    ratio: Fraction
    passed: bool


@dataclass(frozen=True)
class MKReport:
    m_K: int
    entries: tuple
    passed: bool


def mk_verdicts(K, entries):
    """``m_K / n`` integrality for each ``(x, n, c)`` with ``c != 0``."""
    mk = norm_ideal_generator(K)
    rows = []
    for e in entries:
        e = e if isinstance(e, PrincipalTerm) else PrincipalTerm(*e)
        ratio = mk / e.n
        rows.append(MKEntry(e.coset, e.n, e.c, ratio, ratio.denominator == 1))
    return MKReport(mk, tuple(rows), all(r.passed for r in rows))


def check_mK(cand):
    return mk_verdicts(cand.K, cand.principal)


def check_simple_zeros(cand, classes=None):
    classes = divisor_classes(cand) if classes is None else classes
    return all(dc.multiplicity == 1 for dc in classes)


def check_holomorphic(cand, classes=None):
    classes = divisor_classes(cand) if classes is None else classes
    return all(dc.multiplicity >= 0 for dc in classes)


def check_reflective(cand, classes=None):
    """Every divisor reflection is integral on ``M``.

    Vectors of type ``v_r`` for a fixed class form a single orbit of the
    discriminant kernel, so one representative decides each class.
    """
    classes = divisor_classes(cand) if classes is None else classes
    return all(is_integral_reflection(cand.M, dc.representative) for dc in classes)


def check_singular(cand):
    return cand.weight > 0 and cand.weight == singular_weight(cand.l)


def _rank_compatible(cand, verdict, classes):
    if verdict is RankVerdict.NONE_EXISTS:
        return False
    if verdict is RankVerdict.ONLY_PHI12:
        zero = (Fraction(0),) * cand.K.rank
        return abs(cand.K.det) == 1 and [(dc.coset, dc.m, dc.multiplicity) for dc in classes] == [(zero, 1, 1)]
    return True


ANCHORS = {
    "singular": "singular weight is l/2 - 1 for signature (l, 2)",
    "holomorphic": "holomorphic products have nonnegative divisor multiplicities",
    "simple_zeros": "special forms of singular weight have only simple zeros",
    "reflective": "special forms of singular weight are reflective",
    "m_K": "c(x, -n) != 0 forces m_K / n integral on U + K",
    "rank": "no singular special forms for l >= 21 except Phi_12 at l = 26",
}


@dataclass
class AuditReport:
    name: str
    signature: tuple
    weight: Fraction
    singular_weight: Fraction
    m_K: int
    classes: list
    reflective_by_class: list
    singular: bool
    holomorphic: bool
    simple_zeros: bool
    reflective: bool
    mk: MKReport
    rank: RankVerdict
    rank_compatible: bool
    verdict: str
    warnings: list = field(default_factory=list)
    assumptions: list = field(default_factory=list)

    @property
    def passed(self):
        return self.verdict == "PASS"

    def to_dict(self):
        fs = linalg.fraction_str

        def v(x):
            return [fs(a) for a in x]

        def check(key, ok, **extra):
            return {"passed": ok, "anchor": ANCHORS[key], **extra}

        return {
            "candidate": self.name,
            "signature": list(self.signature),
            "weight": fs(self.weight),
            "singular_weight": fs(self.singular_weight),
            "m_K": self.m_K,
            "divisor": [
                {"coset": v(dc.coset), "m": fs(dc.m), "norm": fs(dc.norm),
                 "representative": v(dc.representative), "multiplicity": dc.multiplicity,
                 "reflective": refl}
                for dc, refl in zip(self.classes, self.reflective_by_class)
            ],
            "checks": {
                "singular": check("singular", self.singular),
                "holomorphic": check("holomorphic", self.holomorphic),
                "simple_zeros": check("simple_zeros", self.simple_zeros),
                "reflective": check("reflective", self.reflective),
                "m_K": check("m_K", self.mk.passed, entries=[
                    {"coset": v(e.coset), "n": fs(e.n), "c": e.c, "m_K/n": fs(e.ratio), "passed": e.passed}
                    for e in self.mk.entries]),
                "rank": check("rank", self.rank_compatible, l=self.signature[0], verdict=self.rank.value),
            },
            "warnings": list(self.warnings),
            "assumptions": list(self.assumptions),
            "verdict": self.verdict,
        }

    def to_text(self):
        fs = linalg.fraction_str
        lines = [
            f"candidate {self.name}: signature {self.signature}, weight {fs(self.weight)} "
            f"(singular weight {fs(self.singular_weight)}), m_K = {self.m_K}",
            "divisor classes:",
        ]
        if not self.classes:
            lines.append("  (none)")
        for dc, refl in zip(self.classes, self.reflective_by_class):
            lines.append(f"  y = ({', '.join(map(fs, dc.coset))}), m = {fs(dc.m)}, "
                         f"norm {fs(dc.norm)}, multiplicity {dc.multiplicity}, "
                         f"reflection {'integral' if refl else 'NOT integral'}")
        for key, ok in [("singular", self.singular), ("holomorphic", self.holomorphic),
                        ("simple_zeros", self.simple_zeros), ("reflective", self.reflective),
                        ("m_K", self.mk.passed)]:
            lines.append(f"  [{'ok' if ok else '--'}] {key}: {ANCHORS[key]}")
        lines.append(f"  [{'ok' if self.rank_compatible else '--'}] rank: "
                     f"l = {self.signature[0]} -> {self.rank.value}")
        lines += [f"warning: {w}" for w in self.warnings]
        lines += [f"assumption: {a}" for a in self.assumptions]
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def audit(cand):
    """Run every check on a candidate.

    A candidate of singular weight passes only if it is holomorphic, has
    simple zeros, is reflective, satisfies the m_K condition and does not
    contradict the rank classification. Other weights get ``NOT_SINGULAR``.
    """
    classes = divisor_classes(cand)
    l = cand.l
    refl = [is_integral_reflection(cand.M, dc.representative) for dc in classes]
    singular = check_singular(cand)
    holo = check_holomorphic(cand, classes)
    simple = check_simple_zeros(cand, classes)
    mk = check_mK(cand)
    verdict_l = rank_verdict(l)
    compatible = _rank_compatible(cand, verdict_l, classes)
    warnings = []
    if cand.c00 is not None and Fraction(cand.c00, 2) != cand.weight:
        warnings.append(f"weight {linalg.fraction_str(cand.weight)} differs from c(0,0)/2 = "
                        f"{linalg.fraction_str(Fraction(cand.c00, 2))}")
    assumptions = [
        "exponents satisfy n - x^2/2 in Z",
        "principal part symmetric: c(x, -n) = c(-x, -n)",
        "certificates are necessary conditions on the finite divisor data only",
    ]
    if singular:
        ok = holo and simple and all(refl) and mk.passed and compatible
        verdict = "PASS" if ok else "FAIL"
    else:
        verdict = "NOT_SINGULAR"
    return AuditReport(cand.name, cand.M.signature, cand.weight, singular_weight(l),
                       mk.m_K, classes, refl, singular, holo, simple, all(refl), mk,
                       verdict_l, compatible, verdict, warnings, assumptions)


__all__ = [
    "AuditInputError", "AuditReport", "Bookkeeping", "CandidateProduct", "DivisorClass",
    "MKReport", "PrincipalPart", "PrincipalTerm", "RankVerdict", "audit", "bookkeeping_feasible",
    "check_holomorphic", "check_mK", "check_reflective", "check_simple_zeros", "check_singular",
    "divisor_classes", "mk_verdicts", "rank_verdict", "singular_weight", "validate_principal",
]
