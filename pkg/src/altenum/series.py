"""Truncated exact power series for exponential and Eulerian generating functions.

A series stores normalized coefficients ``a_n = f(n) / D(n)`` for n = 1..N,
with ``D(n) = n!`` (exponential) or ``D(n) = q^C(n,2) [n]_q!`` (Eulerian, in
the complement-space normalization). In that normalization the product of two
generating functions is the plain Cauchy product of coefficient sequences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from altenum import formulas
from altenum.qcalc import IntegrityError, decomposition_count, eulerian_denominator


@dataclass(frozen=True)
class DenomFamily:
    kind: str  # "factorial" or "eulerian"
    q: int = 1

    def __post_init__(self):
        if self.kind not in ("factorial", "eulerian"):
            raise ValueError(f"unknown denominator family {self.kind!r}")
        if self.kind == "factorial" and self.q != 1:
            raise ValueError("factorial family has no q")
        if self.q < 1:
            raise ValueError("q must be >= 1")

    def denom(self, n: int) -> int:
        if self.kind == "factorial":
            return math.factorial(n)
        return eulerian_denominator(n, self.q)

    def __str__(self):
        return "factorial" if self.kind == "factorial" else f"eulerian({self.q})"


FACTORIAL = DenomFamily("factorial")


def eulerian(q: int) -> DenomFamily:
    return DenomFamily("eulerian", q)


def family_for(q: int) -> DenomFamily:
    """Exponential family at q = 1, Eulerian otherwise."""
    return FACTORIAL if q == 1 else eulerian(q)


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum_{n=1..N} coeffs[n-1] x^n``; the constant term is always zero."""

    order: int
    coeffs: tuple[Fraction, ...]
    family: DenomFamily

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if len(self.coeffs) != self.order:
            raise ValueError(f"expected {self.order} coefficients, got {len(self.coeffs)}")

    def coeff(self, n: int) -> Fraction:
        return self.coeffs[n - 1]

    def _check_compatible(self, other: TruncatedSeries) -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        if self.family != other.family:
            raise ValueError(f"family mismatch: {self.family} vs {other.family}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_compatible(other)
        return TruncatedSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.family
        )

    def scale(self, r) -> TruncatedSeries:
        r = Fraction(r)
        return TruncatedSeries(self.order, tuple(a * r for a in self.coeffs), self.family)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return mul(self, other)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def zero(order: int, family: DenomFamily) -> TruncatedSeries:
    return TruncatedSeries(order, (Fraction(0),) * order, family)


def from_counts(values: Mapping[int, int] | Sequence[int], order: int, family: DenomFamily) -> TruncatedSeries:
    """Series of ``f`` from its counts ``values[n]`` for n = 1..order.

    A sequence is read as indexed from 0 (``values[0]`` is ignored).
    """
    coeffs = tuple(Fraction(values[n], family.denom(n)) for n in range(1, order + 1))
    return TruncatedSeries(order, coeffs, family)


def to_counts(s: TruncatedSeries) -> dict[int, int]:
    """Inverse of :func:`from_counts`; fails loudly on non-integer counts."""
    out = {}
    for n in range(1, s.order + 1):
        v = s.coeff(n) * s.family.denom(n)
        if v.denominator != 1:
            raise IntegrityError(f"coefficient {n} of {s.family} series denormalizes to {v}")
        out[n] = v.numerator
    return out


def mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    s._check_compatible(t)
    N = s.order
    coeffs = []
    for n in range(1, N + 1):
        # both factors lack a constant term
        coeffs.append(sum((s.coeffs[k - 1] * t.coeffs[n - k - 1] for k in range(1, n)), Fraction(0)))
    return TruncatedSeries(N, tuple(coeffs), s.family)


def eulerian_convolve(fvals: Mapping[int, int], gvals: Mapping[int, int], n: int, q: int) -> int:
    """Count of the product of two Eulerian (q >= 2) or exponential (q = 1)
    generating functions at ``n``, summed directly over splits ``n = k + (n-k)``
    with the ordered-decomposition weight."""
    return sum(decomposition_count(n, (k, n - k), q) * fvals[k] * gvals[n - k] for k in range(1, n))


def exp_compose(s: TruncatedSeries) -> TruncatedSeries:
    """``sum_{c>=1} s^c / c!`` truncated at the series order (``e^s - 1``)."""
    total = zero(s.order, s.family)
    power = s
    for c in range(1, s.order + 1):
        total = total + power.scale(Fraction(1, math.factorial(c)))
        if c < s.order:
            power = mul(power, s)
            if power.is_zero():
                break
    return total


@dataclass(frozen=True)
class RiddellRow:
    n: int
    lhs: int
    rhs: int | None  # None when the composed side is not an integer count

    @property
    def equal(self) -> bool:
        return self.rhs is not None and self.lhs == self.rhs


@dataclass(frozen=True)
class RiddellReport:
    q: int
    order: int
    lhs_name: str
    rhs_name: str
    rows: tuple[RiddellRow, ...]

    @property
    def all_equal(self) -> bool:
        return all(r.equal for r in self.rows)


def _counts_lenient(s: TruncatedSeries) -> dict[int, int | None]:
    out = {}
    for n in range(1, s.order + 1):
        v = s.coeff(n) * s.family.denom(n)
        out[n] = v.numerator if v.denominator == 1 else None
    return out


def verify_riddell(q: int, order: int, indecomposable=None) -> RiddellReport:
    """Compare ``1 + exp(all)`` with ``e^{exp(indecomposable)}`` coefficient-wise.

    q = 1: all = labelled graphs, indecomposable = connected graphs.
    q >= 2: all = non-degenerate spaces, indecomposable = directly
    indecomposable non-degenerate spaces (Eulerian normalization).
    ``indecomposable`` overrides the indecomposable counts (callable n -> int).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if q < 1:
        raise ValueError("q must be >= 1")
    fam = family_for(q)
    if q == 1:
        whole = {n: formulas.graph_count(n) for n in range(1, order + 1)}
        parts_fn = indecomposable or formulas.connected_graphs
        names = ("graphs", "connected")
    else:
        whole = {n: formulas.nds(n, q) for n in range(1, order + 1)}
        parts_fn = indecomposable or (lambda n: formulas.dis(n, q))
        names = ("nds", "dis")
    parts = {n: parts_fn(n) for n in range(1, order + 1)}
    composed = _counts_lenient(exp_compose(from_counts(parts, order, fam)))
    rows = tuple(RiddellRow(n, whole[n], composed[n]) for n in range(1, order + 1))
    return RiddellReport(q, order, names[0], names[1], rows)
