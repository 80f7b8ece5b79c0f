"""Exact q-calculus over Python integers.

``q`` is always a concrete integer >= 1. ``q = 1`` gives the classical
(labelled-graph) values directly: ``[n]_1 = n``, Gaussian binomials become
ordinary binomials, and so on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence


class IntegrityError(ArithmeticError):
    """An identity that must hold exactly did not (e.g. an inexact division)."""


def exact_div(num: int, den: int, what: str = "division") -> int:
    q, r = divmod(num, den)
    if r:
        raise IntegrityError(f"inexact {what}: {num} / {den} leaves remainder {r}")
    return q


def _check_q(q: int) -> None:
    if q < 1:
        raise ValueError(f"q must be an integer >= 1, got {q}")


def pairs(n: int) -> int:
    """C(n, 2): number of unordered pairs, i.e. dim of Lambda(n, q)."""
    return n * (n - 1) // 2


@dataclass(frozen=True)
class Composition:
    """Ordered tuple of positive parts; ``n`` is their sum."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(k < 1 for k in self.parts):
            raise ValueError(f"composition parts must be positive: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


def q_int(n: int, q: int) -> int:
    """``[n]_q = q^(n-1) + ... + q + 1``."""
    _check_q(q)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if q == 1:
        return n
    return (q**n - 1) // (q - 1)


@lru_cache(maxsize=None)
def q_factorial(n: int, q: int) -> int:
    _check_q(q)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    return q_factorial(n - 1, q) * q_int(n, q)


@lru_cache(maxsize=None)
def gauss_binom(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n (0 outside 0 <= k <= n)."""
    _check_q(q)
    if k < 0 or k > n:
        return 0
    return exact_div(
        q_factorial(n, q), q_factorial(k, q) * q_factorial(n - k, q), "Gaussian binomial"
    )


@lru_cache(maxsize=None)
def galois_number(m: int, q: int) -> int:
    """Total number of subspaces of F_q^m."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return sum(gauss_binom(m, d, q) for d in range(m + 1))


def binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _parts(parts) -> tuple[int, ...]:
    return tuple(parts.parts if isinstance(parts, Composition) else parts)


def multinomial(n: int, parts: Sequence[int] | Composition) -> int:
    parts = _parts(parts)
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    den = 1
    for k in parts:
        den *= math.factorial(k)
    return exact_div(math.factorial(n), den, "multinomial")


def _eulerian_denominator(n: int, q: int) -> int:
    return q ** pairs(n) * q_factorial(n, q)


def eulerian_denominator(n: int, q: int) -> int:
    """``q^C(n,2) * [n]_q!``; equals ``n!`` at q = 1."""
    _check_q(q)
    return _eulerian_denominator(n, q)


def decomposition_count(n: int, parts: Sequence[int] | Composition, q: int) -> int:
    """Ordered direct sum decompositions F_q^n = U_1 + ... + U_c, dim U_i = parts[i]."""
    _check_q(q)
    parts = _parts(parts)
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    den = 1
    for k in parts:
        den *= _eulerian_denominator(k, q)
    return exact_div(_eulerian_denominator(n, q), den, "decomposition count")


def compositions(n: int, c: int) -> Iterator[Composition]:
    """Ordered c-tuples of positive integers summing to n, lexicographically."""
    if n < 0 or c < 1:
        raise ValueError("need n >= 0 and c >= 1")

    def rec(remaining, slots):
        if slots == 1:
            if remaining >= 1:
                yield (remaining,)
            return
        for first in range(1, remaining - slots + 2):
            for rest in rec(remaining - first, slots - 1):
                yield (first,) + rest

    for parts in rec(n, c):
        yield Composition(parts)
