"""Rational polyhedra: halfspace form, generator form, and partial openness.

A ``ClosedPolyhedron`` is a finite system of weak rows ``normal . x <= offset``
in canonical form: normals are primitive integer vectors, no row is implied by
the others, and rows are sorted, so structural equality is meaningful.  The
whole space is the zero-row system; the empty set is the distinguished
``EmptySet`` value and never a row system.

A ``PartiallyOpenPolyhedron`` marks a subset of carrier rows as strict.  For a
canonical carrier the strict region, when nonempty, is automatically dense in
the carrier (faces are extreme, so removing a union of faces keeps convexity
and density), hence the closure of the set is exactly the carrier.  The
constructor enforces this: systems whose strict region is empty collapse to
``EmptySet``, and strict markings that canonicalization would silently lose
while their hyperplane still touches the carrier are refused, because no
carrier-plus-strict-rows value describes that set.

Generator form (``VRep``) lists vertices, extreme rays, and a lineality
basis.  Conversion in both directions is exact and capped at dimension 6 by
default (override with the ``PHK_MAX_DIM`` environment variable): vertices
are enumerated as feasible rank-n active sets, extreme rays as rank-(n-1)
active subsets of the recession cone, with lineality split off first through
an exact nullspace/rowspace restriction.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError, InvalidSetError, ScaleLimitError
from .linalg import (
    Vec,
    dot,
    is_zero_vec,
    linear_rank,
    nullspace_basis,
    primitive,
    primitive_signed,
    rowspace_basis,
    smul,
    solve_square,
    unit_vec,
    vadd,
    vec,
    vneg,
    zero_vec,
)
from .lp import Feasibility, Row, StrictRow, closed_feasible, solve_max, strict_system_feasible
from .scalars import rat

DEFAULT_SCALE_CAP = 6


def scale_cap() -> int:
    raw = os.environ.get("PHK_MAX_DIM")
    if raw is None:
        return DEFAULT_SCALE_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise InputError(f"PHK_MAX_DIM must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise InputError("PHK_MAX_DIM must be at least 1")
    return cap


@dataclass(frozen=True, slots=True)
class ClosedPolyhedron:
    dim: int
    rows: tuple[Row, ...]


@dataclass(frozen=True, slots=True)
class EmptySet:
    """The distinguished empty set.  Carries an ambient dimension for ops
    whose result depends on it (the JSON shorthand leaves it implicit)."""

    dim: int = 1


@dataclass(frozen=True, slots=True)
class PartiallyOpenPolyhedron:
    carrier: ClosedPolyhedron
    strict_rows: frozenset[int]

    @property
    def dim(self) -> int:
        return self.carrier.dim


@dataclass(frozen=True, slots=True)
class VRep:
    vertices: tuple[Vec, ...]
    rays: tuple[Vec, ...]
    lineality: tuple[Vec, ...]


@dataclass(frozen=True, slots=True)
class GeneratedCone:
    dim: int
    generators: tuple[Vec, ...]


@dataclass(frozen=True, slots=True)
class Validation:
    nonempty: bool
    closure_is_carrier: bool


def space(n: int) -> ClosedPolyhedron:
    if n < 1:
        raise InputError("ambient dimension must be at least 1")
    return ClosedPolyhedron(n, ())


def whole_set(n: int) -> PartiallyOpenPolyhedron:
    return PartiallyOpenPolyhedron(space(n), frozenset())


def closed_as_set(p: ClosedPolyhedron) -> PartiallyOpenPolyhedron:
    """Wrap a closed polyhedron as a partially open one with no strict rows."""
    return PartiallyOpenPolyhedron(p, frozenset())


def system_of(c: PartiallyOpenPolyhedron) -> tuple[StrictRow, ...]:
    return tuple(
        (normal, offset, i in c.strict_rows)
        for i, (normal, offset) in enumerate(c.carrier.rows)
    )


def _normalize_row(normal: Vec, offset: Fraction) -> Row:
    p = primitive(normal)
    pivot = next((i for i, a in enumerate(normal) if a != 0), None)
    if pivot is None:
        return (p, offset)
    t = p[pivot] / normal[pivot]
    return (p, offset * t)


def _merge_parallel(rows: list[StrictRow]) -> tuple[list[StrictRow], list[Row]]:
    """Keep the tightest row per normal direction.  Returns (kept, dropped
    strict rows) so the caller can audit what the merge discarded."""
    best: dict[Vec, tuple[Fraction, bool]] = {}
    dropped_strict: list[Row] = []
    for normal, offset, strict in rows:
        cur = best.get(normal)
        if cur is None:
            best[normal] = (offset, strict)
            continue
        coff, cstrict = cur
        if offset < coff:
            if cstrict:
                dropped_strict.append((normal, coff))
            best[normal] = (offset, strict)
        elif offset == coff:
            best[normal] = (offset, strict or cstrict)
        elif strict:
            dropped_strict.append((normal, offset))
    kept = sorted((n, o, s) for n, (o, s) in best.items())
    return kept, dropped_strict


def _screen_rows(
    dim: int, rows: Sequence[tuple[Sequence, object, bool]]
) -> tuple[list[StrictRow], bool]:
    """Normalize scales, resolve zero-normal rows.  Second result is False
    when a zero-normal row is unsatisfiable (the system is empty)."""
    out: list[StrictRow] = []
    for normal, offset, strict in rows:
        nv = vec(normal)
        off = rat(offset)  # type: ignore[arg-type]
        if len(nv) != dim:
            raise InputError(f"row dimension {len(nv)} != ambient dimension {dim}")
        if is_zero_vec(nv):
            if off < 0 or (strict and off == 0):
                return [], False
            continue
        pn, po = _normalize_row(nv, off)
        out.append((pn, po, bool(strict)))
    return out, True


def _irredundant(rows: list[StrictRow]) -> tuple[list[StrictRow], list[Row]]:
    """One sequential pass of exact redundancy removal over the closed rows.

    Each row is tested against all other currently surviving rows; removal
    preserves the set at every step and the final system is irredundant.
    """
    survivors = list(rows)
    dropped_strict: list[Row] = []
    i = 0
    while i < len(survivors):
        normal, offset, strict = survivors[i]
        others = [(r[0], r[1]) for j, r in enumerate(survivors) if j != i]
        if others:
            out = solve_max(normal, others)
            if out.status == "optimal" and out.value is not None and out.value <= offset:
                if strict:
                    dropped_strict.append((normal, offset))
                survivors.pop(i)
                continue
        i += 1
    return survivors, dropped_strict


def canonicalize(dim: int, rows: Sequence[tuple[Sequence, object]]) -> ClosedPolyhedron | EmptySet:
    """Irredundant canonical form of a weak-row system, or ``EmptySet``."""
    screened, ok = _screen_rows(dim, [(n, o, False) for n, o in rows])
    if not ok:
        return EmptySet(dim)
    merged, _ = _merge_parallel(screened)
    closed = [(r[0], r[1]) for r in merged]
    if not closed_feasible(closed, dim).feasible:
        return EmptySet(dim)
    survivors, _ = _irredundant(merged)
    return ClosedPolyhedron(dim, tuple((r[0], r[1]) for r in survivors))


def make_set(
    dim: int, rows: Sequence[tuple[Sequence, object, bool]]
) -> PartiallyOpenPolyhedron | EmptySet:
    """Build a partially open polyhedron from raw (normal, offset, strict) rows.

    The carrier is canonicalized with strict flags tracked through merging and
    redundancy removal.  If the strict region is empty the value is
    ``EmptySet``.  If a strict row had to be dropped although its hyperplane
    still touches the carrier, the set cannot be written as carrier plus
    strict markings and ``InvalidSetError`` is raised.
    """
    screened, ok = _screen_rows(dim, rows)
    if not ok:
        return EmptySet(dim)
    merged, dropped_a = _merge_parallel(screened)
    closed = [(r[0], r[1]) for r in merged]
    if not closed_feasible(closed, dim).feasible:
        return EmptySet(dim)
    survivors, dropped_b = _irredundant(merged)
    carrier_rows = tuple((r[0], r[1]) for r in survivors)
    for normal, offset in dropped_a + dropped_b:
        face = list(carrier_rows) + [(vneg(normal), -offset)]
        if closed_feasible(face, dim).feasible:
            raise InvalidSetError(
                "strict row was redundant for the carrier but its hyperplane "
                "touches the set; not representable as carrier + strict rows"
            )
    strict = frozenset(i for i, r in enumerate(survivors) if r[2])
    cand = PartiallyOpenPolyhedron(ClosedPolyhedron(dim, carrier_rows), strict)
    if strict:
        if not strict_system_feasible(system_of(cand)).feasible:
            return EmptySet(dim)
    return cand


def validate(c: PartiallyOpenPolyhedron | EmptySet) -> Validation:
    """Diagnostic check: is the set nonempty, and is its closure the carrier?"""
    if isinstance(c, EmptySet):
        return Validation(False, False)
    if any(i < 0 or i >= len(c.carrier.rows) for i in c.strict_rows):
        raise InputError("strict row index out of range")
    rows = system_of(c)
    if not rows:
        return Validation(True, True)
    nonempty = strict_system_feasible(rows).feasible
    canonical = canonicalize(c.dim, c.carrier.rows) == c.carrier
    return Validation(nonempty, nonempty and canonical)


@lru_cache(maxsize=None)
def _validated(c: PartiallyOpenPolyhedron) -> Validation:
    return validate(c)


def require_valid(c: PartiallyOpenPolyhedron | EmptySet) -> None:
    """Operations reject sets that fail validation."""
    if isinstance(c, EmptySet):
        return
    v = _validated(c)
    if not (v.nonempty and v.closure_is_carrier):
        raise InvalidSetError(
            "operation requires a validated set (nonempty, closure equal to carrier)"
        )


def closed_contains(p: ClosedPolyhedron, x: Sequence) -> bool:
    xv = vec(x)
    if len(xv) != p.dim:
        raise InputError("point dimension does not match the polyhedron")
    return all(dot(normal, xv) <= offset for normal, offset in p.rows)


def contains(c: PartiallyOpenPolyhedron | EmptySet, x: Sequence) -> bool:
    if isinstance(c, EmptySet):
        return False
    xv = vec(x)
    if len(xv) != c.dim:
        raise InputError("point dimension does not match the set")
    for i, (normal, offset) in enumerate(c.carrier.rows):
        v = dot(normal, xv)
        if i in c.strict_rows:
            if v >= offset:
                return False
        elif v > offset:
            return False
    return True


def closed_subset_of(
    p: ClosedPolyhedron | EmptySet, c: PartiallyOpenPolyhedron | EmptySet
) -> bool:
    """Exact containment of a closed polyhedron in a partially open one.

    Per row the criterion is a support-value comparison: weak rows need
    ``sup <= offset``, strict rows need ``sup < offset`` (a nonempty closed
    polyhedron attains its finite support values, so the strict comparison is
    exactly containment in the open halfspace).
    """
    if isinstance(p, EmptySet):
        return True
    if isinstance(c, EmptySet):
        return not closed_feasible(p.rows, p.dim).feasible
    if p.dim != c.dim:
        raise InputError("dimension mismatch between the two sets")
    if not closed_feasible(p.rows, p.dim).feasible:
        return True
    for i, (normal, offset) in enumerate(c.carrier.rows):
        out = solve_max(normal, p.rows)
        if out.status == "unbounded":
            return False
        assert out.status == "optimal" and out.value is not None
        if i in c.strict_rows:
            if out.value >= offset:
                return False
        elif out.value > offset:
            return False
    return True


def lineality_space(p: ClosedPolyhedron) -> tuple[Vec, ...]:
    """Basis of the lineality space {d : normal . d = 0 for every row}."""
    if not closed_feasible(p.rows, p.dim).feasible:
        raise InputError("lineality space of the empty set is undefined")
    normals = [normal for normal, _ in p.rows]
    return tuple(nullspace_basis(normals, p.dim))


# -- generator form ---------------------------------------------------------


def cone_generators(m_rows: Sequence[Vec], k: int) -> tuple[list[Vec], list[Vec]]:
    """Lineality basis and extreme rays of the cone {y : M y <= 0}."""
    lin = nullspace_basis(m_rows, k)
    if lin:
        w = rowspace_basis(m_rows)
        kk = len(w)
        if kk == 0:
            return lin, []
        reduced = [tuple(dot(row, wj) for wj in w) for row in m_rows]
        _, inner_rays = cone_generators(reduced, kk)
        rays = [_combine(w, r) for r in inner_rays]
        return lin, [primitive(r) for r in rays]
    if k == 0:
        return [], []
    rays: set[Vec] = set()
    idx = range(len(m_rows))
    for sub in combinations(idx, k - 1):
        chosen = [m_rows[i] for i in sub]
        null = nullspace_basis(chosen, k)
        if len(null) != 1:
            continue
        d = null[0]
        for cand in (d, vneg(d)):
            if all(dot(row, cand) <= 0 for row in m_rows):
                rays.add(primitive(cand))
    return [], sorted(rays)


def _combine(basis: Sequence[Vec], coeffs: Vec) -> Vec:
    n = len(basis[0])
    out = zero_vec(n)
    for c, b in zip(coeffs, basis):
        if c:
            out = vadd(out, smul(c, b))
    return out


def _pointed_vertices(normals: Sequence[Vec], offsets: Sequence[Fraction], k: int) -> list[Vec]:
    if k == 0:
        return [()]
    verts: set[Vec] = set()
    idx = range(len(normals))
    for sub in combinations(idx, k):
        sol = solve_square([normals[i] for i in sub], [offsets[i] for i in sub])
        if sol is None:
            continue
        if all(dot(normals[i], sol) <= offsets[i] for i in idx):
            verts.add(sol)
    return sorted(verts)


def _generators(p: ClosedPolyhedron) -> VRep:
    normals = [normal for normal, _ in p.rows]
    offsets = [offset for _, offset in p.rows]
    lin = nullspace_basis(normals, p.dim)
    if lin:
        w = rowspace_basis(normals)
        kk = len(w)
        if kk == 0:
            return VRep((zero_vec(p.dim),), (), tuple(lin))
        reduced = [tuple(dot(nr, wj) for wj in w) for nr in normals]
        verts = _pointed_vertices(reduced, offsets, kk)
        _, inner_rays = cone_generators(reduced, kk)
        return VRep(
            tuple(sorted(_combine(w, v) for v in verts)),
            tuple(sorted(primitive(_combine(w, r)) for r in inner_rays)),
            tuple(sorted(lin)),
        )
    verts = _pointed_vertices(normals, offsets, p.dim)
    _, rays = cone_generators(normals, p.dim)
    return VRep(tuple(verts), tuple(rays), ())


def h_to_v(p: ClosedPolyhedron | EmptySet) -> VRep:
    """Vertices, extreme rays, and lineality of a closed polyhedron."""
    if isinstance(p, EmptySet):
        return VRep((), (), ())
    cap = scale_cap()
    if p.dim > cap:
        raise ScaleLimitError(
            f"generator conversion is capped at dimension {cap} (PHK_MAX_DIM)"
        )
    if not closed_feasible(p.rows, p.dim).feasible:
        return VRep((), (), ())
    return _generators(p)


def v_to_h(v: VRep, dim: int | None = None) -> ClosedPolyhedron | EmptySet:
    """Canonical halfspace form of a generator description."""
    if not v.vertices:
        return EmptySet(dim if dim is not None else 1)
    n = len(v.vertices[0])
    cap = scale_cap()
    if n > cap:
        raise ScaleLimitError(
            f"generator conversion is capped at dimension {cap} (PHK_MAX_DIM)"
        )
    # Valid inequalities (a, beta) with a . x <= beta on the whole set form a
    # cone in dimension n+1; its generators are the facets and implicit
    # equalities of the set.
    m_rows: list[Vec] = []
    for vert in v.vertices:
        m_rows.append(tuple(vert) + (Fraction(-1),))
    for ray in v.rays:
        if len(ray) != n:
            raise InputError("ray dimension mismatch in generator form")
        m_rows.append(tuple(ray) + (Fraction(0),))
    for line in v.lineality:
        m_rows.append(tuple(line) + (Fraction(0),))
        m_rows.append(tuple(vneg(line)) + (Fraction(0),))
    lin, rays = cone_generators(m_rows, n + 1)
    out_rows: list[tuple[Vec, Fraction]] = []
    for g in rays:
        a, beta = g[:n], g[n]
        if not is_zero_vec(a):
            out_rows.append((a, beta))
    for g in lin:
        a, beta = g[:n], g[n]
        if not is_zero_vec(a):
            out_rows.append((a, beta))
            out_rows.append((vneg(a), -beta))
    return canonicalize(n, out_rows)


def is_bounded(p: ClosedPolyhedron) -> bool:
    g = h_to_v(p)
    return not g.rays and not g.lineality


# -- finitely generated cones ----------------------------------------------


def cone(dim: int, generators: Iterable[Sequence]) -> GeneratedCone:
    gens = []
    for g in generators:
        gv = vec(g)
        if len(gv) != dim:
            raise InputError("generator dimension mismatch")
        if not is_zero_vec(gv):
            gens.append(gv)
    return GeneratedCone(dim, tuple(gens))


def cone_contains(k: GeneratedCone, x: Sequence) -> bool:
    """Exact membership of a vector in a finitely generated cone."""
    xv = vec(x)
    if len(xv) != k.dim:
        raise InputError("vector dimension does not match the cone")
    if is_zero_vec(xv):
        return True
    if not k.generators:
        return False
    g = len(k.generators)
    rows: list[Row] = [(vneg(unit_vec(g, j)), Fraction(0)) for j in range(g)]
    for t in range(k.dim):
        coeffs = tuple(k.generators[j][t] for j in range(g))
        rows.append((coeffs, xv[t]))
        rows.append((vneg(coeffs), -xv[t]))
    return closed_feasible(rows, g).feasible


def cones_equal(a: GeneratedCone, b: GeneratedCone) -> bool:
    if a.dim != b.dim:
        raise InputError("cone dimension mismatch")
    return all(cone_contains(b, g) for g in a.generators) and all(
        cone_contains(a, g) for g in b.generators
    )
