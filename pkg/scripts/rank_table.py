"""Print the existence verdict and singular weight for signatures (l, 2),
together with the bookkeeping check for a reflective form of weight w
against a singular form of weight l/2 - 1.

    python scripts/rank_table.py --lmax 30
    python scripts/rank_table.py --bookkeep 24 --mmax 8
"""

import argparse

from singprod.audit import bookkeeping_feasible, rank_verdict, singular_weight
from singprod.linalg import fraction_str


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lmax", type=int, default=30)
    ap.add_argument("--bookkeep", metavar="W", help="weight w of the reflective form")
    ap.add_argument("--mmax", type=int, default=8)
    args = ap.parse_args()

    print(f"{'l':>3}  {'weight':>6}  verdict" + ("      bookkeeping" if args.bookkeep else ""))
    for l in range(3, args.lmax + 1):
        s = singular_weight(l)
        row = f"{l:>3}  {fraction_str(s):>6}  {rank_verdict(l).value:<11}"
        if args.bookkeep:
            res = bookkeeping_feasible(s, args.bookkeep, args.mmax)
            row += f"  {'a, d = ' + str(res.witness) if res.feasible else 'infeasible'}"
        print(row)


if __name__ == "__main__":
    main()
