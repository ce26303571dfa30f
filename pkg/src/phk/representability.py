"""Convexified coupling values for finite graphs and operator sums.

The central object is the least convex lower-semicontinuous function that
agrees with the coupling on a finite graph.  On the graph's convex hull it
is a finite minimum over barycentric weights, which is a small exact LP;
off the hull it is +inf.  For a graph summed with a polyhedral normal-cone
operator the same value is computed by a joint program over weights and
row multipliers, and independently by brute-force enumeration of the basic
solutions of that program, so the two routes can be played against each
other in tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InputError
from .fitzpatrick import MonotoneGraph, graph, is_monotone, vec_check
from .linalg import Vec, dot, rref, vec, vadd, smul, zero_vec
from .lp import LPProblem, Row, lp_solve
from .normal_cones import normal_cone_at, strictly_inside
from .polyhedra import (
    ClosedPolyhedron,
    EmptySet,
    PartiallyOpenPolyhedron,
    contains,
    require_valid,
)
from .portability import FinitePointSet, partial_portable_hull, point_set
from .sampling import bounding_box, rational_grid
from .scalars import ExtValue, POS_INF, fin


@dataclass(frozen=True, slots=True)
class PsiEvaluation:
    """Value plus the data that certifies it: barycentric weights over the
    graph pairs and, for operator sums, the dual vector handed to the
    half-space part."""

    value: ExtValue
    coefficients: tuple[Fraction, ...] | None
    dual_shift: Vec | None


@dataclass(frozen=True, slots=True)
class SumMembership:
    lhs: bool
    rhs: bool
    agrees: bool
    value: ExtValue
    shift: Vec | None
    cone_part: Vec | None


@dataclass(frozen=True, slots=True)
class GridSpec:
    step: Fraction = Fraction(1, 2)
    halfwidth: int = 2


@dataclass(frozen=True, slots=True)
class ProbeReport:
    verdict: str
    witness: tuple[Vec, Vec] | None
    grid_points: int
    dual_points: int
    pairs_checked: int


def _simplex_rows(g: MonotoneGraph, x: Vec, xstar: Vec) -> list[Row]:
    """Equality-as-two-inequalities encoding of barycentric representation."""
    k = len(g.pairs)
    rows: list[Row] = []
    for j in range(k):
        e = [Fraction(0)] * k
        e[j] = Fraction(-1)
        rows.append((tuple(e), Fraction(0)))
    ones = tuple(Fraction(1) for _ in range(k))
    rows.append((ones, Fraction(1)))
    rows.append((tuple(-q for q in ones), Fraction(-1)))
    for coord in range(g.dim):
        a_row = tuple(a[coord] for a, _ in g.pairs)
        rows.append((a_row, x[coord]))
        rows.append((tuple(-q for q in a_row), -x[coord]))
        d_row = tuple(astar[coord] for _, astar in g.pairs)
        rows.append((d_row, xstar[coord]))
        rows.append((tuple(-q for q in d_row), -xstar[coord]))
    return rows


def rep_value(g: MonotoneGraph, x, xstar) -> PsiEvaluation:
    """Least lsc convex function matching the coupling on the graph.

    Finite exactly when (x, xstar) is a barycenter of graph pairs; the
    value is then the matching combination of the pair couplings.
    """
    p, d = vec_check(g.dim, x, xstar)
    if not g.pairs:
        return PsiEvaluation(POS_INF, None, None)
    couplings = tuple(dot(a, astar) for a, astar in g.pairs)
    out = lp_solve(
        LPProblem(tuple(-q for q in couplings), tuple(_simplex_rows(g, p, d)))
    )
    if out.status == "infeasible":
        return PsiEvaluation(POS_INF, None, None)
    assert out.status == "optimal", "weights live in a bounded simplex"
    return PsiEvaluation(fin(-out.value), out.primal, None)


def rep_equality(g: MonotoneGraph, x, xstar) -> bool:
    """Does the convexified coupling equal the raw coupling at this pair?"""
    p, d = vec_check(g.dim, x, xstar)
    v = rep_value(g, p, d)
    return v.value.is_finite and v.value.finite_value == dot(p, d)


def restrict_graph(
    g: MonotoneGraph, c: PartiallyOpenPolyhedron | EmptySet
) -> MonotoneGraph:
    """Drop pairs whose primal point lies outside the set."""
    if isinstance(c, EmptySet):
        if c.dim != g.dim:
            raise InputError("dimension mismatch")
        return MonotoneGraph(g.dim, ())
    require_valid(c)
    if c.dim != g.dim:
        raise InputError("dimension mismatch")
    return MonotoneGraph(g.dim, tuple(p for p in g.pairs if contains(c, p[0])))


def graph_domain(g: MonotoneGraph) -> FinitePointSet:
    return point_set(g.dim, [a for a, _ in g.pairs])


def _sum_program(
    tc: MonotoneGraph, hull: ClosedPolyhedron, x: Vec, xstar: Vec
) -> tuple[tuple[Fraction, ...], list[Row]]:
    """Joint objective and rows for the operator-sum value.

    Variables are the graph weights followed by one multiplier per hull
    row; the multipliers price the half-space part at the shifted dual.
    """
    k = len(tc.pairs)
    m = len(hull.rows)
    total = k + m
    costs = [dot(a, astar) for a, astar in tc.pairs]
    costs += [offset for _, offset in hull.rows]
    rows: list[Row] = []
    for j in range(total):
        e = [Fraction(0)] * total
        e[j] = Fraction(-1)
        rows.append((tuple(e), Fraction(0)))
    ones = tuple(Fraction(1) if j < k else Fraction(0) for j in range(total))
    rows.append((ones, Fraction(1)))
    rows.append((tuple(-q for q in ones), Fraction(-1)))
    for coord in range(tc.dim):
        a_row = tuple(
            tc.pairs[j][0][coord] if j < k else Fraction(0) for j in range(total)
        )
        rows.append((a_row, x[coord]))
        rows.append((tuple(-q for q in a_row), -x[coord]))
        d_row = tuple(
            tc.pairs[j][1][coord]
            if j < k
            else hull.rows[j - k][0][coord]
            for j in range(total)
        )
        rows.append((d_row, xstar[coord]))
        rows.append((tuple(-q for q in d_row), -xstar[coord]))
    return tuple(Fraction(-c) for c in costs), rows


def rep_sum_value(
    t: MonotoneGraph, c: PartiallyOpenPolyhedron, x, xstar
) -> PsiEvaluation:
    """Convexified coupling of the graph summed with the set's normal cones.

    Requires a graph domain point strictly inside the carrier; the value is
    a single joint LP whose half-space part runs over the partial hull of
    the set probed at the graph's domain points.
    """
    require_valid(c)
    if t.dim != c.dim:
        raise InputError("dimension mismatch")
    p, d = vec_check(c.dim, x, xstar)
    if not any(strictly_inside(c, a) for a, _ in t.pairs):
        raise InputError(
            "the graph needs a domain point strictly inside the set's carrier"
        )
    tc = restrict_graph(t, c)
    if not tc.pairs:
        return PsiEvaluation(POS_INF, None, None)
    hull = partial_portable_hull(c, graph_domain(t))
    objective, rows = _sum_program(tc, hull, p, d)
    out = lp_solve(LPProblem(objective, tuple(rows)))
    if out.status == "infeasible":
        return PsiEvaluation(POS_INF, None, None)
    assert out.status == "optimal", "the sum value is bounded below"
    k = len(tc.pairs)
    lam = out.primal[:k]
    shift = d
    for w, (_, astar) in zip(lam, tc.pairs):
        shift = tuple(s - w * q for s, q in zip(shift, astar))
    return PsiEvaluation(fin(-out.value), lam, shift)


def rep_sum_value_by_enumeration(
    t: MonotoneGraph, c: PartiallyOpenPolyhedron, x, xstar
) -> ExtValue:
    """Same value by enumerating basic solutions of the joint program.

    Any attained minimum of a bounded program over a pointed feasible
    region sits at a basic solution, whose support picks linearly
    independent columns; checking every independent column subset of the
    equality system is therefore complete, if slow.
    """
    require_valid(c)
    p, d = vec_check(c.dim, x, xstar)
    if not any(strictly_inside(c, a) for a, _ in t.pairs):
        raise InputError(
            "the graph needs a domain point strictly inside the set's carrier"
        )
    tc = restrict_graph(t, c)
    if not tc.pairs:
        return POS_INF
    hull = partial_portable_hull(c, graph_domain(t))
    k = len(tc.pairs)
    m = len(hull.rows)
    total = k + m
    n = c.dim
    # Equality system E w = h over nonnegative w.
    e_rows: list[list[Fraction]] = []
    h: list[Fraction] = []
    e_rows.append([Fraction(1) if j < k else Fraction(0) for j in range(total)])
    h.append(Fraction(1))
    for coord in range(n):
        e_rows.append(
            [tc.pairs[j][0][coord] if j < k else Fraction(0) for j in range(total)]
        )
        h.append(p[coord])
    for coord in range(n):
        e_rows.append(
            [
                tc.pairs[j][1][coord] if j < k else hull.rows[j - k][0][coord]
                for j in range(total)
            ]
        )
        h.append(d[coord])
    costs = [dot(a, astar) for a, astar in tc.pairs]
    costs += [offset for _, offset in hull.rows]

    best: ExtValue = POS_INF
    neq = len(e_rows)
    for size in range(0, min(total, neq) + 1):
        for cols in combinations(range(total), size):
            aug = [[e_rows[i][j] for j in cols] + [h[i]] for i in range(neq)]
            reduced, pivots = rref(aug)
            if size in pivots:
                continue  # inconsistent
            if len(pivots) < size:
                continue  # dependent columns; a smaller support covers this
            w = [Fraction(0)] * total
            for r, j in enumerate(pivots):
                w[cols[j]] = reduced[r][size]
            if any(q < 0 for q in w):
                continue
            value = fin(sum(cw * q for cw, q in zip(costs, w)))
            if value < best:
                best = value
    return best


def sum_graph_membership(
    t: MonotoneGraph, c: PartiallyOpenPolyhedron, x, xstar
) -> SumMembership:
    """Two routes to graph membership for the sum operator.

    The left route asks whether the convexified coupling of the sum equals
    the raw coupling.  The right route looks for an explicit split of the
    dual vector into a graph part attaining the convexified coupling of
    the restricted graph and a normal-cone part at x; a found split is
    re-verified exactly before being believed.
    """
    require_valid(c)
    p, d = vec_check(c.dim, x, xstar)
    ev = rep_sum_value(t, c, p, d)
    lhs = ev.value.is_finite and ev.value.finite_value == dot(p, d)

    rhs = False
    shift: Vec | None = None
    cone_part: Vec | None = None
    if contains(c, p):
        tc = restrict_graph(t, c)
        gens = normal_cone_at(c, p).generators
        k = len(tc.pairs)
        g = len(gens)
        if k:
            total = k + g
            costs = [dot(a, astar) for a, astar in tc.pairs]
            prices = [dot(p, gen) for gen in gens]
            rows: list[Row] = []
            for j in range(total):
                e = [Fraction(0)] * total
                e[j] = Fraction(-1)
                rows.append((tuple(e), Fraction(0)))
            ones = tuple(
                Fraction(1) if j < k else Fraction(0) for j in range(total)
            )
            rows.append((ones, Fraction(1)))
            rows.append((tuple(-q for q in ones), Fraction(-1)))
            for coord in range(c.dim):
                a_row = tuple(
                    tc.pairs[j][0][coord] if j < k else Fraction(0)
                    for j in range(total)
                )
                rows.append((a_row, p[coord]))
                rows.append((tuple(-q for q in a_row), -p[coord]))
                d_row = tuple(
                    tc.pairs[j][1][coord]
                    if j < k
                    else gens[j - k][coord]
                    for j in range(total)
                )
                rows.append((d_row, d[coord]))
                rows.append((tuple(-q for q in d_row), -d[coord]))
            price_row = tuple(
                costs[j] if j < k else prices[j - k] for j in range(total)
            )
            rows.append((price_row, dot(p, d)))
            got = lp_solve(
                LPProblem(tuple(Fraction(0) for _ in range(total)), tuple(rows))
            )
            if got.status == "optimal":
                weights = got.primal
                np = zero_vec(c.dim)
                for w, gen in zip(weights[k:], gens):
                    np = vadd(np, smul(w, gen))
                tp = tuple(q - r for q, r in zip(d, np))
                check = rep_value(tc, p, tp)
                if (
                    check.value.is_finite
                    and check.value.finite_value == dot(p, tp)
                ):
                    rhs = True
                    shift = tp
                    cone_part = np
    return SumMembership(
        lhs=lhs,
        rhs=rhs,
        agrees=lhs == rhs,
        value=ev.value,
        shift=shift,
        cone_part=cone_part,
    )


def representability_probe(
    t: MonotoneGraph,
    c: PartiallyOpenPolyhedron,
    grid: GridSpec | None = None,
) -> ProbeReport:
    """Grid search for points where the convexified coupling touches the
    coupling away from the restricted graph.

    Refuses non-monotone input.  Every restricted graph pair must attain
    equality; a non-pair grid point attaining it falsifies the candidate,
    and a clean sweep is reported as verified on this grid only.
    """
    require_valid(c)
    if t.dim != c.dim:
        raise InputError("dimension mismatch")
    grid = grid or GridSpec()
    if not is_monotone(t):
        return ProbeReport("refused-not-monotone", None, 0, 0, 0)
    tc = restrict_graph(t, c)
    pairs = set(tc.pairs)
    checked = 0
    for a, astar in tc.pairs:
        checked += 1
        if not rep_equality(tc, a, astar):
            return ProbeReport("falsified", (a, astar), 0, 0, checked)

    lo, hi = bounding_box(c, margin=Fraction(0))
    xs = [q for q in rational_grid(lo, hi, grid.step) if contains(c, q)]
    half = Fraction(grid.halfwidth)
    dlo = tuple(-half for _ in range(c.dim))
    dhi = tuple(half for _ in range(c.dim))
    ds = rational_grid(dlo, dhi, grid.step)
    for xg in xs:
        for dg in ds:
            checked += 1
            if (xg, dg) in pairs:
                continue
            if rep_equality(tc, xg, dg):
                return ProbeReport(
                    "falsified", (xg, dg), len(xs), len(ds), checked
                )
    return ProbeReport(
        "candidate-verified-on-grid", None, len(xs), len(ds), checked
    )
