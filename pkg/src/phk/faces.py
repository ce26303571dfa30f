"""Face lattice of a partially open polyhedron's carrier.

Faces are recovered from the generator description: every nonempty face of
the carrier contains at least one of the representative vertices, so the
active-row sets of the faces are exactly the intersections of the tight-row
sets of the generators it contains.  That makes enumeration a small closure
computation instead of a walk over row subsets.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ScaleLimitError
from .linalg import Vec, dot
from .lp import strict_system_feasible
from .polyhedra import (
    PartiallyOpenPolyhedron,
    VRep,
    h_to_v,
    require_valid,
    system_of,
)

FACE_DIM_CAP = 3


@dataclass(frozen=True, slots=True)
class Face:
    """One closed face of the carrier, with its trace on the set."""

    active: frozenset[int]
    generators: VRep
    meets_set: bool
    rep_point: Vec | None


def enumerate_faces(c: PartiallyOpenPolyhedron) -> tuple[Face, ...]:
    """All nonempty closed faces of the carrier, the carrier itself included.

    Capped at dimension 3: the count grows too fast beyond that for the
    exact arithmetic used here.
    """
    require_valid(c)
    if c.dim > FACE_DIM_CAP:
        raise ScaleLimitError(
            f"face enumeration supports dimension <= {FACE_DIM_CAP}, got {c.dim}"
        )
    return _faces_cached(c)


@lru_cache(maxsize=None)
def _faces_cached(c: PartiallyOpenPolyhedron) -> tuple[Face, ...]:
    rows = c.carrier.rows
    gen = h_to_v(c.carrier)
    assert gen.vertices, "a valid set has a nonempty carrier"

    def tight(point: Vec, homogeneous: bool) -> frozenset[int]:
        if homogeneous:
            return frozenset(i for i, (n, _) in enumerate(rows) if dot(n, point) == 0)
        return frozenset(i for i, (n, b) in enumerate(rows) if dot(n, point) == b)

    vertex_tight = [tight(v, False) for v in gen.vertices]
    ray_tight = [tight(r, True) for r in gen.rays]

    # Closure of the vertex tight-sets under intersection with every
    # generator tight-set; each resulting set is the active set of the
    # smallest face containing those generators.
    seen: set[frozenset[int]] = set(vertex_tight)
    work = list(seen)
    while work:
        a = work.pop()
        for t in vertex_tight + ray_tight:
            b = a & t
            if b not in seen:
                seen.add(b)
                work.append(b)

    base = system_of(c)
    faces = []
    for active in seen:
        vs = tuple(v for v, t in zip(gen.vertices, vertex_tight) if t >= active)
        rs = tuple(r for r, t in zip(gen.rays, ray_tight) if t >= active)
        eqs = tuple(
            (tuple(-q for q in rows[i][0]), -rows[i][1], False) for i in sorted(active)
        )
        if base + eqs:
            meets, witness = strict_system_feasible(base + eqs)
        else:
            meets, witness = True, gen.vertices[0]
        faces.append(
            Face(
                active=active,
                generators=VRep(vs, rs, gen.lineality),
                meets_set=meets,
                rep_point=witness,
            )
        )
    faces.sort(key=lambda f: (len(f.active), sorted(f.active)))
    return tuple(faces)


def proper_faces(c: PartiallyOpenPolyhedron) -> tuple[Face, ...]:
    """Faces cut out by at least one active row."""
    return tuple(f for f in enumerate_faces(c) if f.active)
