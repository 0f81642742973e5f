"""Random sweep of the singular-series mirror property.

Draws random Lorentzian lattices of rank 2-4, a positive vector v and a
singular series whose fiber sums along v vanish, then tallies the order of
vanishing and anti-invariance. Also runs the same draws without the
singularity constraint to show how often order >= 2 appears there.

    python scripts/mirror_sweep.py --cases 5000 --seed 1
"""

import argparse
import collections
import pathlib
import sys
import time
from fractions import Fraction

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "tests"))

import oracles  # noqa: E402
from singprod.series import FourierSeries, is_anti_invariant, order_along  # noqa: E402


def general_vanishing(rng, lor, v):
    """Random (not necessarily singular) terms with all fiber sums zero."""
    terms = {}
    for _ in range(rng.randint(2, 6)):
        lam = lor.any_vector()
        terms[lam] = Fraction(rng.randint(-3, 3) or 1)
        terms[oracles.reflect(lor.gram, v, lam)] = Fraction(rng.randint(-3, 3) or 1)
    vv = oracles.quad(lor.gram, v)
    fibers = collections.defaultdict(list)
    for lam, c in terms.items():
        t = oracles.quad(lor.gram, lam, v)
        fibers[tuple(a - t / vv * b for a, b in zip(lam, v))].append([lam, c])
    out = []
    for entries in fibers.values():
        if len(entries) > 1:
            entries[-1][1] = -sum(c for _, c in entries[:-1])
            out += [(lam, c) for lam, c in entries if c]
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cases", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = oracles.make_rng(args.seed)

    start = time.perf_counter()
    singular = collections.Counter()
    general = collections.Counter()
    done = 0
    while done < args.cases:
        lor = oracles.RandomLorentzian(rng, rng.randint(2, 4))
        v = lor.positive_vector()
        F = FourierSeries(lor.lattice, oracles.random_singular_vanishing(rng, lor, v))
        if not F:
            continue
        done += 1
        singular[(order_along(F, v), is_anti_invariant(F, v))] += 1
        G = FourierSeries(lor.lattice, general_vanishing(rng, lor, v))
        if G:
            general[(order_along(G, v), is_anti_invariant(G, v))] += 1
    elapsed = time.perf_counter() - start

    print(f"{done} singular series in {elapsed:.1f}s")
    for (k, anti), n in sorted(singular.items()):
        print(f"  singular   order {k}  anti-invariant {anti}: {n}")
    for (k, anti), n in sorted(general.items()):
        print(f"  general    order {k}  anti-invariant {anti}: {n}")


if __name__ == "__main__":
    main()
