"""Support function, normal cones, and the portable hull membership test.

Everything here is exact.  The support function of a partially open
polyhedron equals the support function of its carrier, but whether the
supremum is *attained inside the set* depends on the strict rows, so the
evaluation carries an attainment flag and, when attained, a witness point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InputError
from .linalg import Vec, dot, vec
from .lp import closed_feasible, solve_max, strict_system_feasible
from .polyhedra import (
    EmptySet,
    GeneratedCone,
    PartiallyOpenPolyhedron,
    contains,
    require_valid,
    system_of,
)
from .scalars import ExtValue, NEG_INF, POS_INF, fin


@dataclass(frozen=True, slots=True)
class SupportEvaluation:
    """Value of the support function at one direction, with attainment data."""

    value: ExtValue
    attained_in_set: bool
    witness: Vec | None


@dataclass(frozen=True, slots=True)
class RangeMembership:
    member: bool
    witness: Vec | None


def support_value(c: PartiallyOpenPolyhedron | EmptySet, xstar) -> SupportEvaluation:
    """sup of <xstar, x> over the set, as an ExtValue.

    The empty set gives -inf.  An unbounded direction gives +inf (never
    attained).  A finite value is attained on the carrier by construction;
    the flag records whether some maximizer survives the strict rows, and
    the witness is such a point when one exists.
    """
    if isinstance(c, EmptySet):
        x = vec(xstar)
        if len(x) != c.dim:
            raise InputError(f"direction has dimension {len(x)}, expected {c.dim}")
        return SupportEvaluation(NEG_INF, False, None)
    require_valid(c)
    x = vec(xstar)
    if len(x) != c.dim:
        raise InputError(f"direction has dimension {len(x)}, expected {c.dim}")
    return _support_cached(c, x)


@lru_cache(maxsize=None)
def _support_cached(c: PartiallyOpenPolyhedron, xstar: Vec) -> SupportEvaluation:
    out = solve_max(xstar, c.carrier.rows)
    if out.status == "unbounded":
        return SupportEvaluation(POS_INF, False, None)
    assert out.status == "optimal", "a valid set is nonempty"
    level = out.value
    face = system_of(c) + (
        (xstar, level, False),
        (tuple(-q for q in xstar), -level, False),
    )
    feasible, witness = strict_system_feasible(face)
    return SupportEvaluation(fin(level), feasible, witness)


def supporting_rows(c: PartiallyOpenPolyhedron) -> tuple[int, ...]:
    """Indices of carrier rows whose hyperplane meets the set itself."""
    require_valid(c)
    return tuple(i for i, _ in _supporting_data(c))


def supporting_row_witnesses(c: PartiallyOpenPolyhedron) -> tuple[tuple[int, Vec], ...]:
    """(row index, point of the set on that row's hyperplane) pairs."""
    require_valid(c)
    return _supporting_data(c)


@lru_cache(maxsize=None)
def _supporting_data(c: PartiallyOpenPolyhedron) -> tuple[tuple[int, Vec], ...]:
    base = system_of(c)
    found = []
    for i, (normal, offset) in enumerate(c.carrier.rows):
        face = base + ((tuple(-q for q in normal), -offset, False),)
        feasible, witness = strict_system_feasible(face)
        if feasible:
            found.append((i, witness))
    return tuple(found)


def in_portable_hull(c: PartiallyOpenPolyhedron | EmptySet, x) -> bool:
    """Membership in the intersection of the supporting half-spaces.

    For the empty set that intersection is the whole space.
    """
    if isinstance(c, EmptySet):
        p = vec(x)
        if len(p) != c.dim:
            raise InputError(f"point has dimension {len(p)}, expected {c.dim}")
        return True
    require_valid(c)
    p = vec(x)
    if len(p) != c.dim:
        raise InputError(f"point has dimension {len(p)}, expected {c.dim}")
    rows = c.carrier.rows
    return all(dot(rows[i][0], p) <= rows[i][1] for i in supporting_rows(c))


def normal_cone_at(c: PartiallyOpenPolyhedron, x) -> GeneratedCone:
    """Cone generated by the normals of the rows active at a point of the set."""
    require_valid(c)
    p = vec(x)
    if not contains(c, p):
        raise InputError("normal cone requested at a point outside the set")
    active = tuple(
        normal for normal, offset in c.carrier.rows if dot(normal, p) == offset
    )
    return GeneratedCone(c.dim, active)


def in_normal_cone(c: PartiallyOpenPolyhedron, x, xstar) -> bool:
    """Graph membership: x in the set and <xstar, x> equals the support value."""
    require_valid(c)
    p = vec(x)
    d = vec(xstar)
    if len(p) != c.dim or len(d) != c.dim:
        raise InputError("dimension mismatch")
    if not contains(c, p):
        return False
    return support_value(c, d).value == fin(dot(p, d))


def in_range(c: PartiallyOpenPolyhedron, xstar) -> RangeMembership:
    """Is some point of the set a maximizer of <xstar, .>?"""
    ev = support_value(c, xstar)
    if ev.value.is_finite and ev.attained_in_set:
        return RangeMembership(True, ev.witness)
    return RangeMembership(False, None)


def interior_point_of_carrier(c: PartiallyOpenPolyhedron) -> Vec | None:
    """A point satisfying every carrier row strictly, if one exists."""
    require_valid(c)
    rows = tuple((normal, offset, True) for normal, offset in c.carrier.rows)
    if not rows:
        return tuple(Fraction(0) for _ in range(c.dim))
    feasible, witness = strict_system_feasible(rows)
    return witness if feasible else None


def strictly_inside(c: PartiallyOpenPolyhedron, x) -> bool:
    p = vec(x)
    if len(p) != c.dim:
        raise InputError(f"point has dimension {len(p)}, expected {c.dim}")
    return all(dot(normal, p) < offset for normal, offset in c.carrier.rows)


def set_member_witness(c: PartiallyOpenPolyhedron) -> Vec:
    """Some point of a valid (hence nonempty) set."""
    require_valid(c)
    feasible, witness = (
        strict_system_feasible(system_of(c))
        if c.carrier.rows
        else (True, tuple(Fraction(0) for _ in range(c.dim)))
    )
    assert feasible, "validated sets are nonempty"
    return witness
