"""Exact scalar substrate: rationals and extended values.

The rational scalar is the stdlib ``fractions.Fraction``: always stored in
lowest terms with a positive denominator, so structural equality is value
equality and hashing is safe.  ``ExtValue`` adjoins the two infinities and
fixes the arithmetic conventions used throughout this package:

    (+inf) + (-inf) = +inf
    sup over an empty collection = -inf
    inf over an empty collection = +inf

The first convention makes indicator-plus-support sums absorb correctly, the
other two make suprema over empty graphs and minima over infeasible programs
come out right without special cases at the call sites.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .errors import InputError

RationalLike = Union[int, str, Fraction]

_NEG = -1
_FIN = 0
_POS = 1


def rat(x: RationalLike) -> Fraction:
    """Coerce an int, ``"p/q"`` string, or Fraction to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational literal: {x!r}") from exc
    raise InputError(f"cannot interpret {type(x).__name__} as a rational")


def rat_str(q: Fraction) -> str:
    """Canonical string form: ``"p/q"``, or ``"p"`` when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, slots=True)
class ExtValue:
    """A rational extended with -inf and +inf.

    Instances are immutable; build them through :func:`fin`, or use the module
    constants ``NEG_INF`` / ``POS_INF``.
    """

    kind: int
    num: Fraction | None = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def finite(q: RationalLike) -> "ExtValue":
        return ExtValue(_FIN, rat(q))

    # -- predicates --------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.kind == _FIN

    @property
    def is_pos_inf(self) -> bool:
        return self.kind == _POS

    @property
    def is_neg_inf(self) -> bool:
        return self.kind == _NEG

    @property
    def finite_value(self) -> Fraction:
        if self.kind != _FIN or self.num is None:
            raise InputError(f"extended value {self} is not finite")
        return self.num

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "ExtValue | RationalLike") -> "ExtValue":
        o = _coerce(other)
        # +inf dominates: this is the (+inf) + (-inf) = +inf convention.
        if self.kind == _POS or o.kind == _POS:
            return POS_INF
        if self.kind == _NEG or o.kind == _NEG:
            return NEG_INF
        assert self.num is not None and o.num is not None
        return ExtValue(_FIN, self.num + o.num)

    __radd__ = __add__

    def scale(self, t: RationalLike) -> "ExtValue":
        """Multiply by a strictly positive rational (positive homogeneity)."""
        f = rat(t)
        if f <= 0:
            raise InputError("scale factor must be strictly positive")
        if self.kind != _FIN:
            return self
        assert self.num is not None
        return ExtValue(_FIN, self.num * f)

    # -- order -------------------------------------------------------------

    def _key(self) -> tuple[int, Fraction]:
        return (self.kind, self.num if self.num is not None else Fraction(0))

    def __lt__(self, other: "ExtValue | RationalLike") -> bool:
        return self._key() < _coerce(other)._key()

    def __le__(self, other: "ExtValue | RationalLike") -> bool:
        return self._key() <= _coerce(other)._key()

    def __gt__(self, other: "ExtValue | RationalLike") -> bool:
        return self._key() > _coerce(other)._key()

    def __ge__(self, other: "ExtValue | RationalLike") -> bool:
        return self._key() >= _coerce(other)._key()

    def __str__(self) -> str:
        if self.kind == _POS:
            return "+inf"
        if self.kind == _NEG:
            return "-inf"
        assert self.num is not None
        return rat_str(self.num)


NEG_INF = ExtValue(_NEG)
POS_INF = ExtValue(_POS)


def fin(q: RationalLike) -> ExtValue:
    return ExtValue.finite(q)


def _coerce(x: "ExtValue | RationalLike") -> ExtValue:
    if isinstance(x, ExtValue):
        return x
    return ExtValue(_FIN, rat(x))


def sup_ext(values: Iterable[ExtValue | RationalLike]) -> ExtValue:
    """Supremum with sup(emptyset) = -inf."""
    best = NEG_INF
    for v in values:
        c = _coerce(v)
        if c > best:
            best = c
    return best


def inf_ext(values: Iterable[ExtValue | RationalLike]) -> ExtValue:
    """Infimum with inf(emptyset) = +inf."""
    best = POS_INF
    for v in values:
        c = _coerce(v)
        if c < best:
            best = c
    return best


def ext_values(*xs: ExtValue | RationalLike) -> Iterator[ExtValue]:
    for x in xs:
        yield _coerce(x)
