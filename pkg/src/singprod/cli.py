"""Command-line front end.

Exit codes: 0 when the information was produced or every check passed,
1 when a mathematical check failed, 2 on bad input.
"""

import argparse
import sys

from . import catalog, io
from .audit import AuditInputError, audit, bookkeeping_feasible, rank_verdict, singular_weight
from .lattice import (DomainError, LatticeError, discriminant_group, norm_ideal_generator,
                      short_vectors)
from .linalg import fraction_str
from .series import (INFINITY, is_anti_invariant, is_singular, laplace_normalized, order_along,
                     theorem1_witness)

OK, CHECK_FAILED, INPUT_ERROR = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(INPUT_ERROR)


def _emit(args, payload, text):
    if args.json:
        sys.stdout.write(io.dumps(payload))
    else:
        print(text)


def _order_str(k):
    return "inf" if k == INFINITY else k


def cmd_lattice_info(args):
    L = io.resolve_lattice(args.lattice)
    p, q = L.signature
    disc = discriminant_group(L)
    payload = {
        "lattice": args.lattice,
        "rank": L.rank,
        "signature": [p, q],
        "det": L.det,
        "even": L.is_even,
        "discriminant_invariants": list(disc.invariant_factors),
        "discriminant_generators": [io.write_vector(g) for g in disc.generators],
        "m_K": norm_ideal_generator(L) if L.is_even else None,
    }
    text = "\n".join([
        f"lattice {args.lattice}: rank {L.rank}, signature ({p}, {q}), det {L.det}",
        f"even: {L.is_even}",
        f"discriminant group: {' x '.join(f'Z/{d}' for d in disc.invariant_factors) or 'trivial'}",
        f"m_K: {payload['m_K'] if L.is_even else 'n/a (odd lattice)'}",
    ])
    _emit(args, payload, text)
    return OK


def cmd_enumerate(args):
    L = io.resolve_lattice(args.lattice)
    vs = short_vectors(L, args.norm)
    payload = {"lattice": args.lattice, "norm": args.norm, "pairs": len(vs),
               "total": 2 * len(vs), "vectors": [io.write_vector(v) for v in vs]}
    lines = [f"{len(vs)} vector pairs (+-v) of norm {args.norm}, {2 * len(vs)} vectors total"]
    lines += ["  (" + ", ".join(io.write_vector(v)) + ")" for v in vs]
    _emit(args, payload, "\n".join(lines))
    return OK


def cmd_series(args):
    L = io.resolve_lattice(args.lattice)
    F = io.series_from_json(io.load_json(args.series), L)
    payload = {"operation": args.operation, "terms": len(F)}
    status = OK
    if args.operation == "laplace":
        G = laplace_normalized(F)
        payload.update(result=io.series_to_json(G), singular=is_singular(F))
        text = f"normalized Laplacian: {len(G)} terms (singular: {is_singular(F)})"
        text += "".join(f"\n  {fraction_str(c)} q^({', '.join(io.write_vector(lam))})" for lam, c in G)
    else:
        if args.v is None:
            raise io.FormatError(f"series {args.operation} needs --v")
        v = io.read_vector(args.v)
        payload["v"] = io.write_vector(v)
        if args.operation == "order":
            k = order_along(F, v)
            payload["order"] = _order_str(k)
            text = f"order of vanishing along v-perp: {_order_str(k)}"
        elif args.operation == "antiinv":
            anti = is_anti_invariant(F, v)
            payload["anti_invariant"] = anti
            text = f"anti-invariant under the reflection in v: {anti}"
            status = OK if anti else CHECK_FAILED
        else:
            w = theorem1_witness(F, v)
            payload.update(singular=w.singular, order=_order_str(w.order),
                           anti_invariant=w.anti_invariant, vacuous=w.vacuous, verdict=w.verdict)
            text = (f"singular: {w.singular}\norder: {_order_str(w.order)}\n"
                    f"anti-invariant: {w.anti_invariant}\nverdict: {w.verdict}"
                    + (" (vacuous)" if w.vacuous else ""))
            status = OK if w.passed else CHECK_FAILED
    _emit(args, payload, text)
    return status


def cmd_audit(args):
    cand = io.candidate_from_json(io.load_json(args.candidate), name=args.candidate)
    report = audit(cand)
    _emit(args, report.to_dict(), report.to_text())
    return CHECK_FAILED if report.verdict == "FAIL" else OK


def cmd_rank_verdict(args):
    verdict = rank_verdict(args.l)
    payload = {"l": args.l, "singular_weight": fraction_str(singular_weight(args.l)),
               "verdict": verdict.value}
    _emit(args, payload, verdict.value)
    return OK


def cmd_bookkeep(args):
    s, w = io.read_rational(args.s), io.read_rational(args.w)
    res = bookkeeping_feasible(s, w, args.mmax)
    payload = {"s": fraction_str(s), "w": fraction_str(w), "m_max": args.mmax,
               "feasible": res.feasible, "witness": list(res.witness) if res.feasible else None}
    if res.feasible:
        a, d = res.witness
        text = f"feasible: minimal witness a = {a}, d = {d}"
    else:
        text = (f"infeasible: no positive integers a, d with {fraction_str(s)} a = "
                f"{fraction_str(w)} d and {args.mmax} d <= a")
    _emit(args, payload, text)
    return OK if res.feasible else CHECK_FAILED


def cmd_catalog(args):
    if args.action == "list":
        payload = {"lattices": catalog.lattice_names(), "forms": catalog.form_names()}
        text = ("lattices: " + ", ".join(payload["lattices"]) + "\nforms: "
                + ", ".join(payload["forms"]))
    else:
        if not args.name:
            raise io.FormatError("catalog show needs a name")
        if args.name in catalog.form_names():
            f = catalog.get_form(args.name)
            payload = {
                "form": f.name, "home": f.home, "K": f.K, "weight": fraction_str(f.weight),
                "divisor": [{"norm": fraction_str(n), "in_dual": dual, "multiplicity": m}
                            for n, dual, m in f.divisor],
                "candidate": io.candidate_to_json(f.candidate(), K_ref=f.K),
            }
            text = (f"{f.name}: weight {fraction_str(f.weight)} on {f.home}\n"
                    + "\n".join(f"  divisor norm {fraction_str(n)} ({'dual' if dual else 'lattice'}"
                                f" vector), multiplicity {m}" for n, dual, m in f.divisor))
        else:
            try:
                nl = catalog.get_lattice(args.name)
            except catalog.CatalogError as exc:
                raise io.FormatError(exc.args[0]) from exc
            payload = {"name": nl.name, "signature": list(nl.signature), "det": nl.det,
                       "even": nl.even, "min_norm": nl.min_norm, **io.gram_to_json(nl.lattice)}
            text = (f"{nl.name}: rank {nl.lattice.rank}, signature {nl.signature}, det {nl.det}, "
                    f"even {nl.even}" + (f", minimal norm {nl.min_norm}" if nl.min_norm else ""))
    _emit(args, payload, text)
    return OK


def build_parser():
    parser = _Parser(prog="singprod", description="Exact audits of singular Borcherds products.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("lattice-info", cmd_lattice_info, "signature, determinant, discriminant group, m_K")
    p.add_argument("lattice", help="catalog name or JSON Gram file")

    p = add("enumerate", cmd_enumerate, "vectors of a given norm in a positive definite lattice")
    p.add_argument("lattice")
    p.add_argument("--norm", type=int, required=True)

    p = add("series", cmd_series, "operations on a finitely supported Fourier series")
    p.add_argument("operation", choices=["laplace", "order", "antiinv", "witness"])
    p.add_argument("--series", required=True, help="JSON list of {lambda, c} terms")
    p.add_argument("--lattice", required=True, help="Lorentzian lattice (name or file)")
    p.add_argument("--v", help='direction vector, e.g. "1,0,1/2"')

    p = add("audit", cmd_audit, "audit a candidate product file")
    p.add_argument("candidate")

    p = add("rank-verdict", cmd_rank_verdict, "existence verdict for signature (l, 2)")
    p.add_argument("l", type=int)

    p = add("bookkeep", cmd_bookkeep, "decide s a = w d with m_max d <= a")
    p.add_argument("--s", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--mmax", type=int, required=True)

    p = add("catalog", cmd_catalog, "list or show built-in lattices and forms")
    p.add_argument("action", nargs="?", choices=["list", "show"], default="list")
    p.add_argument("name", nargs="?")
    return parser


def run(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (io.FormatError, LatticeError, DomainError, AuditInputError, catalog.CatalogError,
            ZeroDivisionError) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"singprod {args.command}: error: {msg}", file=sys.stderr)
        return INPUT_ERROR


def main(argv=None):
    try:
        code = run(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else INPUT_ERROR
    sys.exit(code)

