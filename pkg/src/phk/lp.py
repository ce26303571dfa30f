"""Exact linear programming over the rationals.

``lp_solve`` maximizes a rational linear objective over a system of weak
inequality rows ``normal . x <= offset`` with free variables, and always
returns a certificate that can be re-verified exactly:

* ``optimal``   carries the primal point, the optimal value, and dual
                multipliers with ``A^T lambda = c``, ``lambda >= 0`` and
                ``lambda . b = value`` (strong duality, exact);
* ``unbounded`` carries a ray ``d`` with ``A d <= 0`` and ``c . d > 0``;
* ``infeasible`` carries Farkas multipliers ``lambda >= 0`` with
                ``lambda^T A = 0`` and ``lambda . b < 0``.

The pivot rule is Bland's anti-cycling rule (lowest eligible column index
enters; ties in the ratio test break toward the lowest basic variable index),
which makes every run deterministic.

Free variables are encoded by splitting ``x = u - v`` with ``u, v >= 0``; a
slack turns each row into an equation, and a full set of artificial variables
provides the phase-1 basis.  The artificial block doubles as an explicit
basis inverse, which is where the exact dual multipliers come from.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .linalg import Vec, dot, is_zero_vec, primitive, vec, zero_vec
from .scalars import rat

Row = tuple[Vec, Fraction]
StrictRow = tuple[Vec, Fraction, bool]


@dataclass(frozen=True, slots=True)
class LPProblem:
    """Maximize ``objective . x`` subject to ``normal . x <= offset`` per row."""

    objective: Vec
    rows: tuple[Row, ...]

    @property
    def dim(self) -> int:
        return len(self.objective)


def problem(objective: Sequence, rows: Sequence[tuple[Sequence, object]]) -> LPProblem:
    obj = vec(objective)
    if not obj:
        raise InputError("LP dimension must be at least 1")
    rs = []
    for normal, offset in rows:
        nv = vec(normal)
        if len(nv) != len(obj):
            raise InputError(f"row dimension {len(nv)} != objective dimension {len(obj)}")
        rs.append((nv, rat(offset)))  # type: ignore[arg-type]
    return LPProblem(obj, tuple(rs))


@dataclass(frozen=True, slots=True)
class LPOutcome:
    status: str  # "optimal" | "unbounded" | "infeasible"
    value: Fraction | None = None
    primal: Vec | None = None
    dual: Vec | None = None
    ray: Vec | None = None
    farkas: Vec | None = None


@dataclass(frozen=True, slots=True)
class Feasibility:
    feasible: bool
    witness: Vec | None = None

    def __iter__(self):
        return iter((self.feasible, self.witness))

    def __bool__(self) -> bool:
        return self.feasible


def _pivot(tab: list[list[Fraction]], red: list[Fraction], basis: list[int], i: int, j: int) -> None:
    row = tab[i]
    pv = row[j]
    inv = 1 / pv
    tab[i] = row = [x * inv for x in row]
    for r in range(len(tab)):
        if r != i:
            f = tab[r][j]
            if f:
                tab[r] = [a - f * b for a, b in zip(tab[r], row)]
    f = red[j]
    if f:
        red[:] = [a - f * b for a, b in zip(red, row)]
    basis[i] = j


def _reduced_costs(tab: list[list[Fraction]], basis: list[int], costs: list[Fraction]) -> list[Fraction]:
    width = len(tab[0]) if tab else 0
    red = list(costs) + [Fraction(0)] * (width - len(costs))
    for i, b in enumerate(basis):
        cb = costs[b] if b < len(costs) else Fraction(0)
        if cb:
            red = [a - cb * t for a, t in zip(red, tab[i])]
    return red


def _run_simplex(
    tab: list[list[Fraction]],
    red: list[Fraction],
    basis: list[int],
    eligible_end: int,
) -> int | None:
    """Iterate Bland pivots to optimality.

    Columns ``0 .. eligible_end-1`` may enter.  Returns None on optimality, or
    the entering column index when the problem is unbounded in that column.
    """
    while True:
        enter = next((j for j in range(eligible_end) if red[j] < 0), None)
        if enter is None:
            return None
        best_ratio: Fraction | None = None
        leave = -1
        leave_var = -1
        for i, row in enumerate(tab):
            coef = row[enter]
            if coef > 0:
                ratio = row[-1] / coef
                if best_ratio is None or ratio < best_ratio or (
                    ratio == best_ratio and basis[i] < leave_var
                ):
                    best_ratio = ratio
                    leave = i
                    leave_var = basis[i]
        if leave < 0:
            return enter
        _pivot(tab, red, basis, leave, enter)


def lp_solve(p: LPProblem) -> LPOutcome:
    n = p.dim
    if n < 1:
        raise InputError("LP dimension must be at least 1")
    m = len(p.rows)
    obj = p.objective

    if m == 0:
        if is_zero_vec(obj):
            return LPOutcome("optimal", value=Fraction(0), primal=zero_vec(n), dual=())
        return LPOutcome("unbounded", ray=primitive(obj))

    # Standard form: columns are (u | v | s), one artificial per row.
    nstruct = 2 * n + m
    signs = [Fraction(1) if off >= 0 else Fraction(-1) for _, off in p.rows]
    tab: list[list[Fraction]] = []
    for i, (normal, offset) in enumerate(p.rows):
        d = signs[i]
        row = [d * a for a in normal]
        row += [-d * a for a in normal]
        row += [d if k == i else Fraction(0) for k in range(m)]
        row += [Fraction(1) if k == i else Fraction(0) for k in range(m)]
        row.append(d * offset)
        tab.append(row)
    basis = [nstruct + i for i in range(m)]

    # Phase 1: minimize the sum of artificials.
    costs1 = [Fraction(0)] * nstruct + [Fraction(1)] * m
    red = _reduced_costs(tab, basis, costs1)
    hit = _run_simplex(tab, red, basis, nstruct + m)
    assert hit is None, "phase-1 objective is bounded below by zero"
    infeas = sum((tab[i][-1] for i in range(len(tab)) if basis[i] >= nstruct), Fraction(0))
    if infeas > 0:
        pi = [
            sum((tab[i][nstruct + j] for i in range(len(tab)) if basis[i] >= nstruct), Fraction(0))
            for j in range(m)
        ]
        farkas = tuple(-signs[j] * pi[j] for j in range(m))
        return LPOutcome("infeasible", farkas=primitive(farkas))

    # Expel artificials still basic at level zero; drop dependent rows.
    for i in range(len(tab) - 1, -1, -1):
        if basis[i] >= nstruct:
            j = next((c for c in range(nstruct) if tab[i][c] != 0), None)
            if j is None:
                del tab[i]
                del basis[i]
            else:
                _pivot(tab, red, basis, i, j)

    # Phase 2: minimize -objective over the structural columns.
    costs2 = [Fraction(0)] * nstruct
    for t in range(n):
        costs2[t] = -obj[t]
        costs2[n + t] = obj[t]
    red = _reduced_costs(tab, basis, costs2)
    hit = _run_simplex(tab, red, basis, nstruct)
    if hit is not None:
        zray = [Fraction(0)] * nstruct
        zray[hit] = Fraction(1)
        for i, b in enumerate(basis):
            zray[b] = -tab[i][hit]
        ray = primitive(tuple(zray[t] - zray[n + t] for t in range(n)))
        return LPOutcome("unbounded", ray=ray)

    zval = [Fraction(0)] * nstruct
    for i, b in enumerate(basis):
        zval[b] = tab[i][-1]
    x = tuple(zval[t] - zval[n + t] for t in range(n))
    pi = [
        sum((costs2[basis[i]] * tab[i][nstruct + j] for i in range(len(tab))), Fraction(0))
        for j in range(m)
    ]
    dual = tuple(-signs[j] * pi[j] for j in range(m))
    return LPOutcome("optimal", value=dot(obj, x), primal=x, dual=dual)


def verify_outcome(p: LPProblem, o: LPOutcome) -> bool:
    """Exact certificate re-verification; no tolerance anywhere."""
    if o.status == "optimal":
        if o.primal is None or o.dual is None or o.value is None:
            return False
        if len(o.dual) != len(p.rows):
            return False
        if any(dot(normal, o.primal) > offset for normal, offset in p.rows):
            return False
        if dot(p.objective, o.primal) != o.value:
            return False
        if any(l < 0 for l in o.dual):
            return False
        combo = [Fraction(0)] * p.dim
        paid = Fraction(0)
        for (normal, offset), l in zip(p.rows, o.dual):
            if l:
                combo = [c + l * a for c, a in zip(combo, normal)]
                paid += l * offset
        return tuple(combo) == p.objective and paid == o.value
    if o.status == "unbounded":
        if o.ray is None or is_zero_vec(o.ray):
            return False
        if any(dot(normal, o.ray) > 0 for normal, _ in p.rows):
            return False
        return dot(p.objective, o.ray) > 0
    if o.status == "infeasible":
        if o.farkas is None or len(o.farkas) != len(p.rows):
            return False
        if any(l < 0 for l in o.farkas):
            return False
        combo = [Fraction(0)] * p.dim
        paid = Fraction(0)
        for (normal, offset), l in zip(p.rows, o.farkas):
            if l:
                combo = [c + l * a for c, a in zip(combo, normal)]
                paid += l * offset
        return is_zero_vec(combo) and paid < 0
    return False


def strict_system_feasible(rows: Sequence[StrictRow]) -> Feasibility:
    """Decide feasibility of a mixed strict/weak system, with witness.

    Auxiliary program: maximize a margin ``t`` with ``t <= 1``, requiring
    ``normal . x + t <= offset`` on strict rows and ``normal . x <= offset``
    on weak ones.  The system is feasible iff the optimum has ``t > 0``, and
    then the x-part of the optimizer satisfies every row (strict rows with
    margin at least ``t``).
    """
    if not rows:
        raise InputError("empty system: dimension is undetermined")
    n = len(rows[0][0])
    aux_rows: list[tuple[Vec, Fraction]] = []
    for normal, offset, strict in rows:
        if len(normal) != n:
            raise InputError("row dimension mismatch in strict system")
        aux_rows.append((tuple(normal) + (Fraction(1) if strict else Fraction(0),), offset))
    aux_rows.append((zero_vec(n) + (Fraction(1),), Fraction(1)))
    aux = LPProblem(zero_vec(n) + (Fraction(1),), tuple(aux_rows))
    out = lp_solve(aux)
    if out.status == "infeasible":
        return Feasibility(False, None)
    assert out.status == "optimal", "auxiliary margin objective is capped at 1"
    assert out.value is not None and out.primal is not None
    if out.value <= 0:
        return Feasibility(False, None)
    return Feasibility(True, out.primal[:n])


def closed_feasible(rows: Sequence[Row], dim: int) -> Feasibility:
    """Feasibility of a weak-inequality system (witness included)."""
    if dim < 1:
        raise InputError("dimension must be at least 1")
    if not rows:
        return Feasibility(True, zero_vec(dim))
    out = lp_solve(LPProblem(zero_vec(dim), tuple(rows)))
    if out.status == "optimal":
        return Feasibility(True, out.primal)
    return Feasibility(False, None)


def solve_max(objective: Sequence, rows: Sequence[Row]) -> LPOutcome:
    """Convenience wrapper: maximize over weak rows already in internal form."""
    obj = vec(objective)
    return lp_solve(LPProblem(obj, tuple(rows)))
