"""JSON input parsing and deterministic JSON output.

Rationals travel as strings ("3/4", "-2"); integers are accepted on input
for convenience.  Output is canonical: sorted keys, two-space indent, and
a trailing newline, so identical inputs produce byte-identical documents.
"""
from __future__ import annotations

import json
from dataclasses import fields, is_dataclass
from fractions import Fraction

from .errors import InputError
from .fitzpatrick import MonotoneGraph, graph
from .linalg import Vec
from .polyhedra import (
    ClosedPolyhedron,
    EmptySet,
    GeneratedCone,
    PartiallyOpenPolyhedron,
    VRep,
    make_set,
    whole_set,
)
from .portability import FinitePointSet, point_set
from .scalars import ExtValue, rat, rat_str


def parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"expected a rational, got {value!r}")
    if isinstance(value, (int, str)):
        return rat(value)
    if isinstance(value, float) and value.is_integer():
        return Fraction(int(value))
    raise InputError(f"expected a rational, got {value!r}")


def parse_vector(value, dim: int | None = None) -> Vec:
    if not isinstance(value, (list, tuple)):
        raise InputError(f"expected a vector, got {value!r}")
    out = tuple(parse_rational(q) for q in value)
    if dim is not None and len(out) != dim:
        raise InputError(f"vector has dimension {len(out)}, expected {dim}")
    if not out:
        raise InputError("vectors must have at least one coordinate")
    return out


def parse_set(obj) -> PartiallyOpenPolyhedron | EmptySet:
    """Accepts {"empty": true}, {"space": n}, or {"dim", "rows": [...]}."""
    if not isinstance(obj, dict):
        raise InputError("a set description must be a JSON object")
    if obj.get("empty"):
        dim = obj.get("dim", 1)
        if not isinstance(dim, int) or dim < 1:
            raise InputError("empty-set dimension must be a positive integer")
        return EmptySet(dim)
    if "space" in obj:
        dim = obj["space"]
        if not isinstance(dim, int) or dim < 1:
            raise InputError("space dimension must be a positive integer")
        return whole_set(dim)
    if "dim" not in obj or "rows" not in obj:
        raise InputError('a set description needs "dim" and "rows"')
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise InputError("dimension must be a positive integer")
    rows = []
    if not isinstance(obj["rows"], list):
        raise InputError('"rows" must be a list')
    for row in obj["rows"]:
        if not isinstance(row, dict) or "normal" not in row or "offset" not in row:
            raise InputError('each row needs "normal" and "offset"')
        strict = row.get("strict", False)
        if not isinstance(strict, bool):
            raise InputError('"strict" must be a boolean')
        rows.append(
            (parse_vector(row["normal"], dim), parse_rational(row["offset"]), strict)
        )
    return make_set(dim, rows)


def parse_points(obj) -> FinitePointSet:
    if not isinstance(obj, dict) or "points" not in obj:
        raise InputError('a point set needs "points"')
    pts = obj["points"]
    if not isinstance(pts, list) or not pts:
        raise InputError('"points" must be a nonempty list')
    dim = obj.get("dim")
    first = parse_vector(pts[0], dim)
    return point_set(len(first), [parse_vector(p, len(first)) for p in pts])


def parse_graph(obj) -> MonotoneGraph:
    if not isinstance(obj, dict) or "pairs" not in obj or "dim" not in obj:
        raise InputError('a graph needs "dim" and "pairs"')
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise InputError("graph dimension must be a positive integer")
    pairs = []
    if not isinstance(obj["pairs"], list):
        raise InputError('"pairs" must be a list')
    for p in obj["pairs"]:
        if not isinstance(p, dict) or "a" not in p or "astar" not in p:
            raise InputError('each pair needs "a" and "astar"')
        pairs.append((parse_vector(p["a"], dim), parse_vector(p["astar"], dim)))
    return graph(dim, pairs)


def fmt_vector(v: Vec) -> list[str]:
    return [rat_str(q) for q in v]


def fmt_closed(p: ClosedPolyhedron | EmptySet) -> dict:
    if isinstance(p, EmptySet):
        return {"dim": p.dim, "empty": True}
    if not p.rows:
        return {"space": p.dim}
    return {
        "dim": p.dim,
        "rows": [
            {"normal": fmt_vector(n), "offset": rat_str(o)} for n, o in p.rows
        ],
    }


def fmt_set(c: PartiallyOpenPolyhedron | EmptySet) -> dict:
    if isinstance(c, EmptySet):
        return {"dim": c.dim, "empty": True}
    if not c.carrier.rows:
        return {"space": c.dim}
    rows = []
    for i, (n, o) in enumerate(c.carrier.rows):
        row = {"normal": fmt_vector(n), "offset": rat_str(o)}
        if i in c.strict_rows:
            row["strict"] = True
        rows.append(row)
    return {"dim": c.dim, "rows": rows}


def fmt_graph(g: MonotoneGraph) -> dict:
    return {
        "dim": g.dim,
        "pairs": [
            {"a": fmt_vector(a), "astar": fmt_vector(astar)} for a, astar in g.pairs
        ],
    }


def fmt_points(s: FinitePointSet) -> dict:
    return {"dim": s.dim, "points": [fmt_vector(p) for p in s.points]}


def fmt_vrep(v: VRep) -> dict:
    return {
        "vertices": [fmt_vector(q) for q in v.vertices],
        "rays": [fmt_vector(q) for q in v.rays],
        "lineality": [fmt_vector(q) for q in v.lineality],
    }


def fmt_cone(k: GeneratedCone) -> dict:
    return {"dim": k.dim, "generators": [fmt_vector(g) for g in k.generators]}


def _camel(name: str) -> str:
    head, *rest = name.split("_")
    return head + "".join(part.title() for part in rest)


def jsonable(x):
    """Recursive conversion of result objects to plain JSON values."""
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, (Fraction, ExtValue)):
        return str(x) if isinstance(x, ExtValue) else rat_str(x)
    if isinstance(x, EmptySet) or isinstance(x, ClosedPolyhedron):
        return fmt_closed(x)
    if isinstance(x, PartiallyOpenPolyhedron):
        return fmt_set(x)
    if isinstance(x, MonotoneGraph):
        return fmt_graph(x)
    if isinstance(x, FinitePointSet):
        return fmt_points(x)
    if isinstance(x, VRep):
        return fmt_vrep(x)
    if isinstance(x, GeneratedCone):
        return fmt_cone(x)
    if is_dataclass(x) and not isinstance(x, type):
        return {
            _camel(f.name): jsonable(getattr(x, f.name)) for f in fields(x)
        }
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        if x and all(isinstance(q, Fraction) for q in x):
            return fmt_vector(tuple(x))
        return [jsonable(q) for q in x]
    raise InputError(f"cannot serialize {type(x).__name__}")


def dumps(doc) -> str:
    return json.dumps(jsonable(doc), sort_keys=True, indent=2) + "\n"
