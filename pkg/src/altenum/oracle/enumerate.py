"""Exhaustive enumeration of subspaces and direct sum decompositions of F_p^m."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

import numpy as np

from altenum.oracle.linalg import Subspace, check_prime, rank
from altenum.qcalc import Composition, decomposition_count, galois_number

DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """An enumeration would visit more objects than the configured budget."""


def check_budget(count: int, budget: int | None, what: str) -> None:
    if budget is not None and count > budget:
        raise BudgetExceeded(f"{what}: {count} objects exceeds budget {budget}")


def pivot_classes(m: int) -> list[tuple[int, tuple[int, ...]]]:
    """All (dim, pivot columns) cells of the RREF enumeration, by dimension."""
    return [(d, piv) for d in range(m + 1) for piv in combinations(range(m), d)]


def enumerate_class(m: int, p: int, pivots: tuple[int, ...]) -> Iterator[Subspace]:
    """Every subspace of F_p^m whose RREF basis has exactly these pivots."""
    pivset = set(pivots)
    free = [(r, j) for r, pc in enumerate(pivots) for j in range(pc + 1, m) if j not in pivset]
    template = [[0] * m for _ in pivots]
    for r, pc in enumerate(pivots):
        template[r][pc] = 1
    for values in product(range(p), repeat=len(free)):
        rows = [row[:] for row in template]
        for (r, j), x in zip(free, values):
            rows[r][j] = x
        yield Subspace(m, p, tuple(tuple(row) for row in rows))


def enumerate_subspaces(m: int, q: int, budget: int | None = DEFAULT_BUDGET) -> Iterator[Subspace]:
    """Every subspace of F_q^m exactly once, grouped by increasing dimension."""
    check_prime(q)
    # galois_number only sizes the run here; counts themselves come from the walk
    check_budget(galois_number(m, q), budget, f"subspaces of F_{q}^{m}")
    for _, piv in pivot_classes(m):
        yield from enumerate_class(m, q, piv)


@lru_cache(maxsize=None)
def subspaces_by_dim(m: int, p: int) -> tuple[tuple[Subspace, ...], ...]:
    out = [[] for _ in range(m + 1)]
    for s in enumerate_subspaces(m, p, budget=None):
        out[s.dim].append(s)
    return tuple(tuple(x) for x in out)


@lru_cache(maxsize=None)
def count_subspaces(m: int, p: int) -> int:
    """Number of subspaces of F_p^m, by walking the enumeration."""
    return sum(1 for _ in enumerate_subspaces(m, p, budget=None))


def _parts(parts) -> tuple[int, ...]:
    return tuple(parts.parts if isinstance(parts, Composition) else parts)


def enumerate_ordered_decompositions(
    n: int,
    parts: Sequence[int] | Composition,
    q: int,
    budget: int | None = DEFAULT_BUDGET,
    first: Subspace | None = None,
) -> Iterator[tuple[Subspace, ...]]:
    """Ordered tuples (U_1, ..., U_c), dim U_i = parts[i], F_q^n = U_1 + ... + U_c.

    ``first`` pins U_1 (used to partition work across processes).
    """
    check_prime(q)
    parts = _parts(parts)
    if sum(parts) != n or any(k < 1 for k in parts):
        raise ValueError(f"{parts} is not a composition of {n}")
    check_budget(decomposition_count(n, parts, q), budget, f"decompositions of F_{q}^{n} into {parts}")
    by_dim = subspaces_by_dim(n, q)

    def rec(i, chosen, stacked):
        if i == len(parts):
            yield tuple(chosen)
            return
        pool = by_dim[parts[i]] if not (i == 0 and first is not None) else (first,)
        target = stacked.shape[0] + parts[i]
        for u in pool:
            m = np.vstack([stacked, u.matrix()])
            if rank(m, q) == target:
                chosen.append(u)
                yield from rec(i + 1, chosen, m)
                chosen.pop()

    if first is not None and first.dim != parts[0]:
        return
    yield from rec(0, [], np.zeros((0, n), dtype=np.int64))


def enumerate_unordered_decompositions(
    n: int, partition: Sequence[int], q: int, budget: int | None = DEFAULT_BUDGET
) -> Iterator[tuple[Subspace, ...]]:
    """Each direct sum decomposition with these (nonincreasing) part dims once.

    Parts of equal dimension are listed in increasing basis order.
    """
    partition = tuple(partition)
    if list(partition) != sorted(partition, reverse=True):
        raise ValueError("partition parts must be nonincreasing")
    for d in enumerate_ordered_decompositions(n, partition, q, budget):
        if all(partition[i] != partition[i + 1] or d[i].basis < d[i + 1].basis for i in range(len(d) - 1)):
            yield d


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of n as nonincreasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest
