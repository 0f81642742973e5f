"""Audit every catalog form and print the reports with timings.

    python scripts/audit_catalog.py [--json]
"""

import argparse
import time

from singprod import io
from singprod.audit import audit
from singprod.catalog import form_names, get_form


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    for name in form_names():
        start = time.perf_counter()
        rep = audit(get_form(name).candidate())
        elapsed = time.perf_counter() - start
        print(io.dumps(rep.to_dict()) if args.json else rep.to_text())
        print(f"# {name}: {elapsed:.2f}s\n")


if __name__ == "__main__":
    main()
