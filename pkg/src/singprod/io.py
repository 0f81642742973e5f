"""JSON file formats: Gram matrices, vectors, series and candidate products.

Rationals are written as strings ``"p/q"`` (or ``"p"``), never floats.
"""

import json
import pathlib

from . import catalog
from .audit import CandidateProduct, PrincipalPart, PrincipalTerm
from .lattice import GramLattice
from .linalg import fraction_str, to_fraction
from .series import FourierSeries


class FormatError(ValueError):
    pass


def read_rational(x):
    if isinstance(x, float):
        raise FormatError(f"floats are not accepted as exact rationals: {x!r}")
    try:
        return to_fraction(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {x!r}") from exc


def read_vector(data):
    """A vector from a JSON list or a comma-separated string like ``"1,0,1/2"``."""
    if isinstance(data, str):
        text = data.strip()
        if text.startswith("["):
            try:
                data = json.loads(text)
            except json.JSONDecodeError as exc:
                raise FormatError(f"bad vector {text!r}") from exc
        else:
            data = [p for p in text.split(",") if p.strip()]
    if not isinstance(data, list):
        raise FormatError(f"a vector must be a list, got {data!r}")
    return tuple(read_rational(x) for x in data)


def write_vector(v):
    return [fraction_str(x) for x in v]


def gram_from_json(obj):
    if not isinstance(obj, dict) or "gram" not in obj:
        raise FormatError('a lattice object needs a "gram" field')
    gram = obj["gram"]
    if not isinstance(gram, list) or not all(isinstance(r, list) for r in gram):
        raise FormatError("gram must be a list of rows")
    if any(isinstance(x, bool) or not isinstance(x, int) for r in gram for x in r):
        raise FormatError("gram entries must be JSON integers")
    rank = obj.get("rank", len(gram))
    try:
        return GramLattice(tuple(map(tuple, gram)), rank)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def gram_to_json(lattice):
    return {"rank": lattice.rank, "gram": [list(r) for r in lattice.gram]}


def load_json(path):
    try:
        return json.loads(pathlib.Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise FormatError(f"{path} is not valid UTF-8 JSON: {exc}") from exc


def resolve_lattice(ref):
    """A lattice from a catalog name, a JSON file path or an inline object."""
    if isinstance(ref, dict):
        return gram_from_json(ref)
    if not isinstance(ref, str):
        raise FormatError(f"cannot read a lattice from {ref!r}")
    try:
        return catalog.get_lattice(ref).lattice
    except catalog.CatalogError:
        pass
    if pathlib.Path(ref).is_file():
        return gram_from_json(load_json(ref))
    raise FormatError(f"{ref!r} is neither a catalog lattice nor a readable file")


def series_from_json(data, lattice):
    if not isinstance(data, list):
        raise FormatError("a series file must hold a JSON list of terms")
    terms = []
    for item in data:
        if not isinstance(item, dict) or "lambda" not in item or "c" not in item:
            raise FormatError('each series term needs "lambda" and "c"')
        lam = read_vector(item["lambda"])
        if len(lam) != lattice.rank:
            raise FormatError(f"term {item['lambda']} has the wrong length for rank {lattice.rank}")
        terms.append((lam, read_rational(item["c"])))
    try:
        return FourierSeries(lattice, terms)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def series_to_json(F):
    return [{"lambda": write_vector(lam), "c": fraction_str(c)} for lam, c in F]


def candidate_from_json(obj, name="candidate"):
    if not isinstance(obj, dict):
        raise FormatError("a candidate file must hold a JSON object")
    for key in ("K", "weight", "principal_part"):
        if key not in obj:
            raise FormatError(f'candidate is missing "{key}"')
    K = resolve_lattice(obj["K"])
    entries = []
    for item in obj["principal_part"]:
        if not isinstance(item, dict) or not {"coset", "n", "c"} <= set(item):
            raise FormatError('principal part entries need "coset", "n" and "c"')
        c = item["c"]
        if isinstance(c, bool) or not isinstance(c, int):
            raise FormatError(f"principal part coefficient must be an integer, got {c!r}")
        try:
            entries.append(PrincipalTerm(read_vector(item["coset"]), read_rational(item["n"]), c))
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    c00 = obj.get("c00")
    if c00 is not None and (isinstance(c00, bool) or not isinstance(c00, int)):
        raise FormatError("c00 must be an integer")
    try:
        return CandidateProduct(K, read_rational(obj["weight"]), PrincipalPart(tuple(entries)),
                                c00=c00, name=obj.get("name", name))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def candidate_to_json(cand, K_ref=None):
    out = {
        "name": cand.name,
        "K": K_ref if K_ref is not None else gram_to_json(cand.K),
        "weight": fraction_str(cand.weight),
        "principal_part": [{"coset": write_vector(e.coset), "n": fraction_str(e.n), "c": e.c}
                           for e in cand.principal],
    }
    if cand.c00 is not None:
        out["c00"] = cand.c00
    return out


def dumps(obj):
    """Stable JSON text: insertion-ordered keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"

