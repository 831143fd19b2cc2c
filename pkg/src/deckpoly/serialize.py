"""JSON payloads shared by the library and the CLI.

Every top-level payload carries "format_version": 1. Rationals are
serialized as strings ("p/q", or a plain decimal string for integers) so
no precision is lost in transit.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import polynomials
from .digraphs import Digraph
from .graph_polys import Deck, kind_name, parse_kind
from .polynomials import Polynomial
from .reconstruct import Inconsistent, OneParameterFamily, Unique

FORMAT_VERSION = 1


class FormatError(ValueError):
    """A payload does not match the documented file formats."""


def _check_version(obj: dict) -> None:
    version = obj.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise FormatError(f"unsupported format_version {version!r}")


def _require_int(value, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise FormatError(f"{what} must be an integer, got {value!r}")
    return value


def fraction_from_str(text) -> Fraction:
    if not isinstance(text, str):
        raise FormatError(f"rational values must be strings, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {text!r}: {exc}") from exc


def poly_to_strings(p: Polynomial) -> list[str]:
    return [str(Fraction(c)) for c in p]


def poly_from_strings(items) -> Polynomial:
    if not isinstance(items, list) or not items:
        raise FormatError("a polynomial must be a non-empty array of coefficient strings")
    return polynomials.normalize(fraction_from_str(c) for c in items)


def matrix_to_strings(matrix) -> list[list[str]]:
    return [[str(Fraction(x)) for x in row] for row in matrix]


def digraph_to_obj(g: Digraph) -> dict:
    obj = {
        "format_version": FORMAT_VERSION,
        "n": g.n,
        "arcs": [[s, t] for s, t in g.arcs],
    }
    if g.weights is not None:
        obj["weights"] = [str(w) for w in g.weights]
    return obj


def digraph_from_obj(obj) -> Digraph:
    if not isinstance(obj, dict):
        raise FormatError("a digraph payload must be a JSON object")
    _check_version(obj)
    n = _require_int(obj.get("n"), '"n"')
    arcs = obj.get("arcs")
    if not isinstance(arcs, list):
        raise FormatError('"arcs" must be an array of [source, target] pairs')
    pairs = []
    for arc in arcs:
        if not isinstance(arc, list) or len(arc) != 2:
            raise FormatError(f"arc {arc!r} must be a [source, target] pair")
        pairs.append((_require_int(arc[0], "arc source"), _require_int(arc[1], "arc target")))
    weights = None
    if obj.get("weights") is not None:
        raw = obj["weights"]
        if not isinstance(raw, list) or len(raw) != len(pairs):
            raise FormatError('"weights" must be an array parallel to "arcs"')
        weights = tuple(fraction_from_str(w) for w in raw)
    return Digraph(n=n, arcs=tuple(pairs), weights=weights)


def deck_to_obj(d: Deck) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "n": d.n,
        "kind": kind_name(d.kind),
        "polys": [poly_to_strings(p) for p in d.polys],
    }


def deck_from_obj(obj) -> Deck:
    if not isinstance(obj, dict):
        raise FormatError("a deck payload must be a JSON object")
    _check_version(obj)
    n = _require_int(obj.get("n"), '"n"')
    if n < 1:
        raise FormatError(f'"n" must be >= 1, got {n}')
    try:
        kind = parse_kind(obj.get("kind", ""))
    except (ValueError, TypeError, AttributeError) as exc:
        raise FormatError(f"bad deck kind: {exc}") from exc
    raw = obj.get("polys")
    if not isinstance(raw, list) or not raw:
        raise FormatError('"polys" must be a non-empty array of polynomials')
    polys = []
    for item in raw:
        p = poly_from_strings(item)
        if polynomials.degree(p) != n:
            raise FormatError(f"deck member has degree {polynomials.degree(p)}, expected {n}")
        polys.append(p)
    return Deck(n, kind, tuple(sorted(polys)))


def value_to_obj(value):
    """Serialize a scalar or polynomial identity side."""
    if isinstance(value, tuple):
        return poly_to_strings(value)
    return str(Fraction(value))


def report_to_obj(report) -> dict:
    return {
        "identity": report.identity,
        "instance": report.instance,
        "lhs": value_to_obj(report.lhs),
        "rhs": value_to_obj(report.rhs),
        "verdict": report.verdict,
    }


def result_to_obj(result) -> dict:
    if isinstance(result, Unique):
        return {"result": "unique", "poly": poly_to_strings(result.poly)}
    if isinstance(result, OneParameterFamily):
        return {
            "result": "one_parameter_family",
            "base": poly_to_strings(result.base),
            "free_exponent": result.free_exponent,
        }
    if isinstance(result, Inconsistent):
        return {"result": "inconsistent", "detail": result.detail}
    raise TypeError(f"not a reconstruction result: {result!r}")


def collision_group_to_obj(group) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": kind_name(group.kind),
        "n": group.n,
        "m": group.m,
        "deck_signature": [poly_to_strings(p) for p in group.deck_signature],
        "members": [
            {"digraph": digraph_to_obj(g), "poly": poly_to_strings(p)}
            for g, p in group.members
        ],
    }


def to_canonical_json(obj) -> str:
    """One fixed rendering so identical runs emit identical bytes."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def dump_json(obj, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_canonical_json(obj) + "\n")
