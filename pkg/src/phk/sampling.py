"""Deterministic sample generation for sets, duals, and graph pairs.

Everything is seeded: the same ``SampleSpec`` and set always produce the
same points in the same order, which keeps the command line output and the
test suite reproducible.  Samples are exact rationals built from the
vertex/ray description of the carrier where that is available.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import ScaleLimitError
from .linalg import Vec, dot, unit_vec, vadd, vsub, smul, zero_vec
from .polyhedra import (
    PartiallyOpenPolyhedron,
    VRep,
    contains,
    h_to_v,
    require_valid,
)


@dataclass(frozen=True, slots=True)
class SampleSpec:
    seed: int = 0
    count: int = 40


def _rng(spec: SampleSpec, salt: str) -> random.Random:
    return random.Random(f"{spec.seed}:{salt}")


def _rational(rng: random.Random, span: int = 3) -> Fraction:
    return Fraction(rng.randint(-span * 4, span * 4), rng.choice((1, 2, 3, 4)))


def _dedupe(points: list[Vec]) -> list[Vec]:
    seen = set()
    out = []
    for p in points:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def _carrier_geometry(c: PartiallyOpenPolyhedron) -> VRep:
    try:
        return h_to_v(c.carrier)
    except ScaleLimitError:
        return VRep((), (), ())


def _inner_point(c: PartiallyOpenPolyhedron) -> Vec:
    from .normal_cones import set_member_witness

    return set_member_witness(c)


def points_in(c: PartiallyOpenPolyhedron, spec: SampleSpec) -> list[Vec]:
    """Deterministic points of the set: a witness, surviving vertices and
    midpoints, then seeded convex combinations (plus recession pokes)."""
    require_valid(c)
    rng = _rng(spec, "in")
    inner = _inner_point(c)
    geo = _carrier_geometry(c)
    features = [inner]
    features += [v for v in geo.vertices if contains(c, v)]
    for a, b in combinations(geo.vertices, 2):
        mid = smul(Fraction(1, 2), vadd(a, b))
        if contains(c, mid):
            features.append(mid)
    out = list(features)
    base = _dedupe(features)
    for _ in range(spec.count):
        weights = [Fraction(rng.randint(0, 4)) for _ in base]
        total = sum(weights)
        if total == 0:
            continue
        p = zero_vec(c.dim)
        for w, f in zip(weights, base):
            p = vadd(p, smul(w / total, f))
        out.append(p)
    for r in geo.rays:
        step = Fraction(rng.randint(1, 3), rng.choice((1, 2)))
        out.append(vadd(inner, smul(step, r)))
    for l in geo.lineality:
        out.append(vadd(inner, l))
        out.append(vsub(inner, l))
    return _dedupe(out)


def cloud_points(c: PartiallyOpenPolyhedron, spec: SampleSpec) -> list[Vec]:
    """Points in and around the set, membership not guaranteed."""
    require_valid(c)
    rng = _rng(spec, "cloud")
    geo = _carrier_geometry(c)
    inner = _inner_point(c)
    out = list(points_in(c, spec))
    for v in geo.vertices:
        out.append(vadd(v, vsub(v, inner)))
        for j in range(c.dim):
            out.append(vadd(v, unit_vec(c.dim, j)))
            out.append(vsub(v, unit_vec(c.dim, j)))
    for _ in range(spec.count):
        out.append(tuple(_rational(rng) for _ in range(c.dim)))
    return _dedupe(out)


def dual_vectors(dim: int, c: PartiallyOpenPolyhedron | None, spec: SampleSpec) -> list[Vec]:
    """Dual directions: zero, units, row normals, their sums, seeded extras."""
    rng = _rng(spec, "dual")
    out: list[Vec] = [zero_vec(dim)]
    for j in range(dim):
        out.append(unit_vec(dim, j))
        out.append(smul(Fraction(-1), unit_vec(dim, j)))
    if c is not None:
        normals = [normal for normal, _ in c.carrier.rows]
        out += normals
        for a, b in combinations(normals, 2):
            out.append(vadd(a, b))
    for _ in range(spec.count):
        out.append(tuple(_rational(rng) for _ in range(dim)))
    return _dedupe(out)


def graph_pairs(
    c: PartiallyOpenPolyhedron, spec: SampleSpec
) -> list[tuple[Vec, Vec]]:
    """Pairs (x, x*) with x in the set and x* in the cone of active normals."""
    from .normal_cones import normal_cone_at

    require_valid(c)
    rng = _rng(spec, "pairs")
    # Both knobs scale with the requested count so that asking for more
    # samples keeps producing new pairs even when the set has few distinct
    # boundary points (one-dimensional sets in particular).
    combos = max(1, spec.count // 8)
    span = max(3, spec.count // 4)
    pairs: list[tuple[Vec, Vec]] = []
    for x in points_in(c, spec):
        gens = normal_cone_at(c, x).generators
        pairs.append((x, zero_vec(c.dim)))
        for g in gens:
            pairs.append((x, g))
        for _ in range(combos if gens else 0):
            weights = [Fraction(rng.randint(0, span)) for _ in gens]
            combo = zero_vec(c.dim)
            for w, g in zip(weights, gens):
                combo = vadd(combo, smul(w, g))
            pairs.append((x, combo))
    return _dedupe(pairs)


def boundary_points(c: PartiallyOpenPolyhedron, spec: SampleSpec) -> list[Vec]:
    """Points of the set lying on at least one carrier hyperplane."""
    from .faces import FACE_DIM_CAP, enumerate_faces
    from .normal_cones import supporting_row_witnesses

    require_valid(c)
    rng = _rng(spec, "boundary")
    out: list[Vec] = [w for _, w in supporting_row_witnesses(c)]
    if c.dim <= FACE_DIM_CAP:
        for face in enumerate_faces(c):
            if not face.active or not face.meets_set:
                continue
            if face.rep_point is not None:
                out.append(face.rep_point)
            members = [v for v in face.generators.vertices if contains(c, v)]
            out += members
            anchors = members + (
                [face.rep_point] if face.rep_point is not None else []
            )
            for a, b in combinations(anchors, 2):
                t = Fraction(rng.randint(1, 3), 4)
                out.append(vadd(smul(1 - t, a), smul(t, b)))
    return _dedupe(out)


def rational_grid(lo: Vec, hi: Vec, step: Fraction) -> list[Vec]:
    """Lattice of rationals with the given spacing covering the box."""
    axes = []
    for a, b in zip(lo, hi):
        ticks = []
        t = a
        while t <= b:
            ticks.append(t)
            t += step
        axes.append(ticks)
    return [tuple(p) for p in product(*axes)]


def bounding_box(c: PartiallyOpenPolyhedron, margin: Fraction = Fraction(1)) -> tuple[Vec, Vec]:
    """A box around the carrier's vertices (rays ignored), padded by margin."""
    geo = _carrier_geometry(c)
    vs = geo.vertices or (zero_vec(c.dim),)
    lo = tuple(min(v[j] for v in vs) - margin for j in range(c.dim))
    hi = tuple(max(v[j] for v in vs) + margin for j in range(c.dim))
    return lo, hi
