"""Dense exact linear algebra on rational vectors.

Vectors are tuples of Fraction; matrices are sequences of such tuples.  The
routines here are deliberately small and deterministic: reduced row echelon
form with leftmost-pivot selection, exact rank, nullspace and rowspace bases,
square solves, and primitive integer scaling used to canonicalize rays.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import InputError
from .scalars import rat, RationalLike

Vec = tuple[Fraction, ...]
Matrix = tuple[Vec, ...]


def vec(xs: Iterable[RationalLike]) -> Vec:
    return tuple(rat(x) for x in xs)


def zero_vec(n: int) -> Vec:
    return (Fraction(0),) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise InputError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def smul(t: RationalLike, u: Vec) -> Vec:
    f = rat(t)
    return tuple(f * a for a in u)


def is_zero_vec(u: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in u)


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot column indices)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def linear_rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the linear span of the given vectors (exact elimination)."""
    if not vectors:
        raise InputError("rank of an empty vector list is undefined")
    reduced, _ = rref(vectors)
    return len(reduced)


def nullspace_basis(rows: Sequence[Sequence[Fraction]], n: int) -> list[Vec]:
    """Basis of {x in Q^n : rows @ x = 0}, deterministic and primitive."""
    reduced, pivots = rref(rows) if rows else ([], [])
    free_cols = [c for c in range(n) if c not in pivots]
    basis: list[Vec] = []
    for fc in free_cols:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[fc]
        basis.append(primitive_signed(tuple(v)))
    return basis


def rowspace_basis(rows: Sequence[Sequence[Fraction]]) -> list[Vec]:
    """Basis of the row space, read off the reduced echelon rows."""
    reduced, _ = rref(rows)
    return [primitive_signed(tuple(r)) for r in reduced]


def solve_square(a_rows: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Vec | None:
    """Solve A x = b for square A; None when A is singular."""
    k = len(a_rows)
    if k == 0:
        return ()
    aug = [list(r) + [bb] for r, bb in zip(a_rows, b)]
    reduced, pivots = rref(aug)
    if pivots != list(range(k)):
        # Rank-deficient A, or the right-hand side became a pivot column.
        return None
    return tuple(reduced[i][k] for i in range(k))


def _int_scaled(v: Vec) -> tuple[int, ...]:
    if not v:
        return ()
    lcm = 1
    for x in v:
        d = x.denominator
        lcm = lcm // gcd(lcm, d) * d
    ints = [int(x * lcm) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def primitive(v: Vec) -> Vec:
    """Scale to coprime integers, preserving direction (sign kept)."""
    if is_zero_vec(v):
        return zero_vec(len(v))
    return tuple(Fraction(x) for x in _int_scaled(v))


def primitive_signed(v: Vec) -> Vec:
    """Like :func:`primitive` but flips so the first nonzero entry is positive.

    Used for lineality directions and nullspace bases, where a vector and its
    negation describe the same line.
    """
    p = primitive(v)
    for x in p:
        if x != 0:
            return p if x > 0 else vneg(p)
    return p


def lex_key(v: Vec) -> tuple:
    return tuple(v)
