"""Supporting-half-space hulls, portability verdicts, and separation.

A partially open polyhedron is *portable* when the intersection of its
supporting half-spaces adds nothing: that intersection always contains the
closure of the set, and the gap between the two is what the reports and
certificates below make visible.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .faces import FACE_DIM_CAP, enumerate_faces
from .fitzpatrick import (
    monotonically_related,
    normal_cone_fitzpatrick,
)
from .linalg import Vec, dot, vec
from .lp import closed_feasible, strict_system_feasible
from .normal_cones import (
    in_normal_cone,
    in_portable_hull,
    in_range,
    normal_cone_at,
    support_value,
    supporting_row_witnesses,
    supporting_rows,
)
from .polyhedra import (
    ClosedPolyhedron,
    EmptySet,
    PartiallyOpenPolyhedron,
    canonicalize,
    closed_as_set,
    closed_contains,
    closed_subset_of,
    cones_equal,
    contains,
    is_bounded,
    lineality_space,
    require_valid,
    space,
    system_of,
)
from .sampling import (
    SampleSpec,
    boundary_points,
    cloud_points,
    dual_vectors,
    graph_pairs,
    points_in,
)
from .scalars import POS_INF, fin


@dataclass(frozen=True, slots=True)
class FinitePointSet:
    dim: int
    points: tuple[Vec, ...]


def point_set(dim: int, points) -> FinitePointSet:
    if dim < 1:
        raise InputError(f"dimension must be positive, got {dim}")
    out = []
    for p in points:
        q = vec(p)
        if len(q) != dim:
            raise InputError("point dimension mismatch")
        out.append(q)
    return FinitePointSet(dim, tuple(sorted(set(out))))


@dataclass(frozen=True, slots=True)
class SeparationCertificate:
    """A supporting half-space violated by the queried point."""

    normal: Vec
    support_point: Vec
    margin: Fraction


@dataclass(frozen=True, slots=True)
class PortabilityReport:
    maximal_on_samples: bool
    coupling_identity_on_samples: bool
    hull_adds_nothing: bool
    hull_equals_carrier: bool
    hull: ClosedPolyhedron
    related_pairs_checked: int
    identity_pairs_checked: int
    failure_pair: tuple[Vec, Vec] | None


def portable_hull(c: PartiallyOpenPolyhedron | EmptySet) -> ClosedPolyhedron:
    """Intersection of the supporting half-spaces, in canonical form."""
    if isinstance(c, EmptySet):
        return space(c.dim)
    require_valid(c)
    rows = [c.carrier.rows[i] for i in supporting_rows(c)]
    out = canonicalize(c.dim, rows)
    assert isinstance(out, ClosedPolyhedron), "the hull contains the set"
    return out


def portable_hull_by_faces(c: PartiallyOpenPolyhedron | EmptySet) -> ClosedPolyhedron:
    """Definitional route: keep rows active on some closed face meeting the set."""
    if isinstance(c, EmptySet):
        return space(c.dim)
    require_valid(c)
    keep: set[int] = set()
    for face in enumerate_faces(c):
        if face.meets_set:
            keep |= face.active
    out = canonicalize(c.dim, [c.carrier.rows[i] for i in sorted(keep)])
    assert isinstance(out, ClosedPolyhedron)
    return out


def partial_supporting_rows(
    c: PartiallyOpenPolyhedron,
    s: PartiallyOpenPolyhedron | FinitePointSet | EmptySet,
) -> tuple[int, ...]:
    """Carrier rows whose hyperplane meets both the set and the probe set."""
    require_valid(c)
    if s.dim != c.dim:
        raise InputError("probe set dimension mismatch")
    if isinstance(s, EmptySet):
        return ()
    if isinstance(s, FinitePointSet):
        return tuple(
            i
            for i, (normal, offset) in enumerate(c.carrier.rows)
            if any(contains(c, p) and dot(normal, p) == offset for p in s.points)
        )
    require_valid(s)
    base = system_of(c) + system_of(s)
    kept = []
    for i, (normal, offset) in enumerate(c.carrier.rows):
        face = base + ((tuple(-q for q in normal), -offset, False),)
        if strict_system_feasible(face).feasible:
            kept.append(i)
    return tuple(kept)


def partial_portable_hull(
    c: PartiallyOpenPolyhedron,
    s: PartiallyOpenPolyhedron | FinitePointSet | EmptySet,
) -> ClosedPolyhedron:
    """Intersection of the half-spaces kept by ``partial_supporting_rows``."""
    keep = [c.carrier.rows[i] for i in partial_supporting_rows(c, s)]
    out = canonicalize(c.dim, keep)
    assert isinstance(out, ClosedPolyhedron), "the partial hull contains the set"
    return out


def is_portable(c: PartiallyOpenPolyhedron | EmptySet) -> bool:
    """Does the supporting half-space intersection equal the set?"""
    if isinstance(c, EmptySet):
        return False
    return closed_subset_of(portable_hull(c), c)


def nonsupporting_witness(
    c: PartiallyOpenPolyhedron,
) -> tuple[int, Vec] | None:
    """A carrier row missing the set, with a carrier point on its hyperplane.

    Such a point lies in the hull but not in the set, so it certifies a
    portability failure; ``None`` means every row supports.
    """
    require_valid(c)
    supported = set(supporting_rows(c))
    for i, (normal, offset) in enumerate(c.carrier.rows):
        if i in supported:
            continue
        rows = list(c.carrier.rows)
        rows.append((tuple(-q for q in normal), -offset))
        got = closed_feasible(tuple(rows), c.dim)
        assert got.feasible, "carrier rows are irredundant, every face is nonempty"
        return i, got.witness
    return None


def separation_certificate(
    c: PartiallyOpenPolyhedron, x
) -> SeparationCertificate | None:
    """Separate x from the set by a supporting half-space, if one is violated.

    Requires x outside the set.  ``None`` means no supporting half-space
    separates, i.e. x already lies in the portable hull.
    """
    require_valid(c)
    p = vec(x)
    if len(p) != c.dim:
        raise InputError(f"point has dimension {len(p)}, expected {c.dim}")
    if contains(c, p):
        raise InputError("separation requested for a point of the set")
    for i, witness in supporting_row_witnesses(c):
        normal, offset = c.carrier.rows[i]
        if dot(normal, p) > offset:
            return SeparationCertificate(normal, witness, dot(normal, p) - offset)
    return None


def verify_certificate(
    c: PartiallyOpenPolyhedron, x, cert: SeparationCertificate
) -> bool:
    """Exact re-check: support point in the set, normal in its cone, margin right."""
    p = vec(x)
    w = cert.support_point
    if not contains(c, w):
        return False
    if not in_normal_cone(c, w, cert.normal):
        return False
    sigma = support_value(c, cert.normal)
    if not sigma.value.is_finite:
        return False
    return cert.margin == dot(cert.normal, p) - sigma.value.finite_value and cert.margin > 0


def portability_report(
    c: PartiallyOpenPolyhedron, spec: SampleSpec | None = None
) -> PortabilityReport:
    """Check the four equivalent portability conditions on one set.

    Two conditions are exact (the hull comparisons); the two about the
    normal-cone graph are checked on a deterministic sample cloud that
    always includes a targeted witness when the set is not portable.
    """
    require_valid(c)
    spec = spec or SampleSpec()
    hull = portable_hull(c)
    hull_adds_nothing = closed_subset_of(hull, c)
    hull_equals_carrier = closed_subset_of(hull, closed_as_set(c.carrier)) and closed_subset_of(c.carrier, closed_as_set(hull))

    pairs = list(graph_pairs(c, spec))
    for x in cloud_points(c, spec):
        pairs.append((x, tuple(Fraction(0) for _ in range(c.dim))))
    witness = nonsupporting_witness(c)
    if witness is not None:
        zero = tuple(Fraction(0) for _ in range(c.dim))
        pairs.insert(0, (witness[1], zero))

    identity_ok = True
    maximal_ok = True
    failure = None
    related = 0
    checked = 0
    for x, xstar in pairs:
        checked += 1
        lhs = normal_cone_fitzpatrick(c, x, xstar)
        rhs = support_value(c, xstar).value if contains(c, x) else POS_INF
        if lhs != rhs:
            identity_ok = False
            failure = failure or (x, xstar)
        if monotonically_related(c, x, xstar):
            related += 1
            if not in_normal_cone(c, x, xstar):
                maximal_ok = False
                failure = failure or (x, xstar)
    return PortabilityReport(
        maximal_on_samples=maximal_ok,
        coupling_identity_on_samples=identity_ok,
        hull_adds_nothing=hull_adds_nothing,
        hull_equals_carrier=hull_equals_carrier,
        hull=hull,
        related_pairs_checked=related,
        identity_pairs_checked=checked,
        failure_pair=failure,
    )


def hull_extension_report(
    c: PartiallyOpenPolyhedron, spec: SampleSpec | None = None
) -> dict:
    """How the portable hull extends the set while preserving its graph."""
    require_valid(c)
    spec = spec or SampleSpec()
    hull = portable_hull(c)
    hull_set = closed_as_set(hull)
    again = portable_hull(hull_set)
    idempotent = closed_subset_of(again, hull_set) and closed_subset_of(
        hull, closed_as_set(again)
    )
    portable = is_portable(hull_set)
    contains_set = closed_subset_of(c.carrier, hull_set)

    preserved = True
    extended = True
    cones_checked = 0
    pair_witness = None
    for x in points_in(c, spec):
        cones_checked += 1
        if not cones_equal(normal_cone_at(c, x), normal_cone_at(hull_set, x)):
            preserved = False
            pair_witness = pair_witness or x
    pairs_checked = 0
    for x, xstar in graph_pairs(c, spec):
        pairs_checked += 1
        if not in_normal_cone(hull_set, x, xstar):
            extended = False
            pair_witness = pair_witness or x
    return {
        "hull": hull,
        "idempotent": idempotent,
        "hullPortable": portable,
        "hullContainsClosure": contains_set,
        "conesPreservedOnSamples": preserved,
        "graphExtendedOnSamples": extended,
        "conesChecked": cones_checked,
        "pairsChecked": pairs_checked,
        "witness": pair_witness,
        "ok": idempotent and portable and contains_set and preserved and extended,
    }


def partial_hull_report(
    c: PartiallyOpenPolyhedron,
    s: PartiallyOpenPolyhedron | FinitePointSet | EmptySet,
    spec: SampleSpec | None = None,
) -> dict:
    """Restriction-to-probe-set checks for the partial hull.

    The exact part: the partial hull is unchanged by taking its own hull
    (full or partial), and its trace on the probe set equals the set's
    trace iff the normal-cone graphs agree there, which is corroborated on
    samples and refuted constructively when the traces differ.
    """
    require_valid(c)
    spec = spec or SampleSpec()
    partial = partial_portable_hull(c, s)
    pset = closed_as_set(partial)

    again_partial = partial_portable_hull(pset, s)
    again_full = portable_hull(pset)
    collapse = (
        closed_subset_of(again_partial, pset)
        and closed_subset_of(partial, closed_as_set(again_partial))
        and closed_subset_of(again_full, pset)
        and closed_subset_of(partial, closed_as_set(again_full))
    )

    # Trace comparison on the probe set: the partial hull contains the set,
    # so the traces differ exactly when some probe point lies in the hull
    # but outside the set.
    trace_equal = True
    trace_witness: Vec | None = None
    if isinstance(s, EmptySet):
        pass
    elif isinstance(s, FinitePointSet):
        for p in s.points:
            if closed_contains(partial, p) and not contains(c, p):
                trace_equal = False
                trace_witness = p
                break
    else:
        for i, (normal, offset) in enumerate(c.carrier.rows):
            # Weak rows are violated strictly, strict rows weakly.
            negated = (tuple(-q for q in normal), -offset, i not in c.strict_rows)
            system = (
                system_of(s)
                + tuple((n, o, False) for n, o in partial.rows)
                + (negated,)
            )
            got = strict_system_feasible(system)
            if got.feasible:
                trace_equal = False
                trace_witness = got.witness
                break

    cones_agree = True
    cone_witness = None
    cones_checked = 0
    sample_points: list[Vec] = []
    if isinstance(s, FinitePointSet):
        sample_points = [p for p in s.points if contains(c, p)]
    elif isinstance(s, PartiallyOpenPolyhedron):
        joint = system_of(c) + system_of(s)
        got = strict_system_feasible(joint) if joint else None
        if got is not None and got.feasible:
            sample_points.append(got.witness)
        for p in points_in(c, spec):
            if contains(s, p):
                sample_points.append(p)
    for p in sample_points:
        cones_checked += 1
        if not cones_equal(normal_cone_at(c, p), normal_cone_at(pset, p)):
            cones_agree = False
            cone_witness = cone_witness or p
    if not trace_equal:
        # A point of the hull's trace outside the set has a nonempty normal
        # cone for the hull and no graph at all for the set.
        cones_agree = False
        cone_witness = cone_witness or trace_witness

    return {
        "partialHull": partial,
        "collapse": collapse,
        "traceEqual": trace_equal,
        "traceWitness": trace_witness,
        "graphsAgreeOnTrace": cones_agree,
        "graphWitness": cone_witness,
        "restrictionBiconditional": trace_equal == cones_agree,
        "conesChecked": cones_checked,
        "ok": collapse and (trace_equal == cones_agree),
    }


def line_free_report(
    c: PartiallyOpenPolyhedron, spec: SampleSpec | None = None
) -> dict:
    """Closed-set checks tying portability to the absence of lines.

    Input must be closed (no strict rows).  A line-free closed polyhedron
    is portable, the support function is finite exactly on the directions
    attained by some point, and boundedness attains every direction.
    """
    require_valid(c)
    if c.strict_rows:
        raise InputError("these checks apply to closed sets only")
    spec = spec or SampleSpec()
    p = c.carrier
    line_free = lineality_space(p) == ()
    portable = is_portable(c)
    bounded = is_bounded(p)

    agree = True
    witness = None
    duals_checked = 0
    attained_all = True
    for xstar in dual_vectors(c.dim, c, spec):
        duals_checked += 1
        ev = support_value(c, xstar)
        member = in_range(c, xstar).member
        if ev.value.is_finite != member:
            # A closed set attains every finite support value.
            agree = False
            witness = witness or xstar
        if not member:
            attained_all = False
    return {
        "lineFree": line_free,
        "portable": portable,
        "lineFreeImpliesPortable": portable or not line_free,
        "domainMatchesRange": agree,
        "dualsChecked": duals_checked,
        "bounded": bounded,
        "boundedAttainsAll": attained_all or not bounded,
        "witness": witness,
        "ok": (portable or not line_free)
        and agree
        and (attained_all or not bounded),
    }


def boundary_support_report(
    c: PartiallyOpenPolyhedron, spec: SampleSpec | None = None
) -> dict:
    """Probe: every sampled boundary point of the set is a support point."""
    require_valid(c)
    spec = spec or SampleSpec()
    if not c.carrier.rows:
        return {
            "sampled": 0,
            "allSupport": True,
            "vacuous": True,
            "witness": None,
            "ok": True,
        }
    sampled = 0
    all_support = True
    witness = None
    for x in boundary_points(c, spec):
        sampled += 1
        gens = normal_cone_at(c, x).generators
        if not any(any(q != 0 for q in g) for g in gens):
            all_support = False
            witness = witness or x
    return {
        "sampled": sampled,
        "allSupport": all_support,
        "vacuous": False,
        "witness": witness,
        "ok": all_support,
    }
