"""Counting formulas for labelled graphs and alternating matrix spaces.

Graph counts (``q = 1`` world) and their q-analogues for subspaces of
Lambda(n, q). Recursive sequences are built bottom-up into immutable
:class:`SequenceTable` objects and cached per parameter set.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Mapping

from altenum.qcalc import (
    IntegrityError,
    binom,
    compositions,
    decomposition_count,
    exact_div,
    galois_number,
    gauss_binom,
    multinomial,
    pairs,
    q_factorial,
    q_int,
)


@dataclass(frozen=True)
class SequenceTable:
    """Exact values of one sequence for ``n = start .. n_max``."""

    name: str
    params: tuple
    values: Mapping[int, int] = field(repr=False)

    @property
    def n_max(self) -> int:
        return max(self.values)

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def as_list(self) -> list[int]:
        return [self.values[n] for n in sorted(self.values)]


_tables: dict[tuple, SequenceTable] = {}
_lock = threading.RLock()


def _table(name: str, params: tuple, n_max: int, build: Callable[[int], dict]) -> SequenceTable:
    # Tables grow by rebuilding up to the larger n_max; old ones stay valid.
    key = (name, params)
    with _lock:
        t = _tables.get(key)
        if t is None or t.n_max < n_max:
            t = SequenceTable(name, params, MappingProxyType(build(n_max)))
            _tables[key] = t
        return t


def graph_count(n: int) -> int:
    """Labelled graphs on n vertices, ``2^C(n,2)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return 2 ** pairs(n)


def space_count(n: int, q: int) -> int:
    """Alternating matrix spaces in Lambda(n, q); ``graph_count(n)`` at q = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return galois_number(pairs(n), q)


def read_colored(n: int, c: int) -> int:
    """Pairs (graph, ordered partition of [n] into c nonempty independent sets)."""
    total = 0
    for comp in compositions(n, c):
        free = pairs(n) - sum(pairs(k) for k in comp)
        total += multinomial(n, comp) * 2**free
    return total


def _read_q_first_form(n: int, c: int, q: int) -> int:
    total = 0
    for comp in compositions(n, c):
        free = pairs(n) - sum(pairs(k) for k in comp)
        total += decomposition_count(n, comp, q) * galois_number(free, q)
    return total


def _read_q_second_form(n: int, c: int, q: int) -> int:
    total = 0
    for comp in compositions(n, c):
        free = pairs(n) - sum(pairs(k) for k in comp)
        den = 1
        for k in comp:
            den *= q_factorial(k, q)
        total += exact_div(q_factorial(n, q), den, "q-multinomial") * q**free * galois_number(free, q)
    return total


def read_q_isotropic(n: int, c: int, q: int) -> int:
    """Pairs (space in Lambda(n, q), ordered totally-isotropic c-decomposition).

    Both written forms of the sum are evaluated; they must agree.
    """
    first = _read_q_first_form(n, c, q)
    second = _read_q_second_form(n, c, q)
    if first != second:
        raise IntegrityError(f"read_q forms disagree at n={n}, c={c}, q={q}: {first} != {second}")
    return first


def ortho_q(n: int, c: int, q: int) -> int:
    """Pairs (space in Lambda(n, q), ordered orthogonal c-decomposition)."""
    total = 0
    for comp in compositions(n, c):
        inside = sum(pairs(k) for k in comp)
        total += decomposition_count(n, comp, q) * galois_number(inside, q)
    return total


def _build_connected(n_max: int) -> dict:
    cg = {}
    for n in range(1, n_max + 1):
        s = sum(k * binom(n, k) * cg[k] * graph_count(n - k) for k in range(1, n))
        cg[n] = graph_count(n) - exact_div(s, n, "division by n in connected-graph recursion")
    return cg


def connected_table(n_max: int) -> SequenceTable:
    return _table("connected", (), max(n_max, 1), _build_connected)


def connected_graphs(n: int) -> int:
    """Connected labelled graphs on n >= 1 vertices."""
    if n < 1:
        raise ValueError("connected_graphs needs n >= 1")
    return connected_table(n)[n]


def _build_no_isolated(n_max: int) -> dict:
    ndg = {}
    for n in range(n_max + 1):
        ndg[n] = graph_count(n) - sum(binom(n, k) * ndg[k] for k in range(n))
    return ndg


def no_isolated_table(n_max: int) -> SequenceTable:
    return _table("no-isolated", (), n_max, _build_no_isolated)


def no_isolated_graphs(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return no_isolated_table(n)[n]


def _build_nds(q: int) -> Callable[[int], dict]:
    def build(n_max):
        nds = {}
        for n in range(n_max + 1):
            nds[n] = space_count(n, q) - sum(gauss_binom(n, k, q) * nds[k] for k in range(n))
        return nds

    return build


def nds_table(n_max: int, q: int) -> SequenceTable:
    return _table("nds", (q,), n_max, _build_nds(q))


def nds(n: int, q: int) -> int:
    """Non-degenerate (zero radical) alternating matrix spaces in Lambda(n, q)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return nds_table(n, q)[n]


def _split_weight(n: int, k: int, q: int) -> int:
    # ordered pairs (U, V) with dim U = k, F_q^n = U + V
    return gauss_binom(n, k, q) * q ** (k * (n - k))


def _build_dis(q: int) -> Callable[[int], dict]:
    # Weight each summand of a complete direct decomposition by its dimension:
    # sum over spaces of sum_i dim U_i = n * NDS_n.
    def build(n_max):
        nd = nds_table(n_max, q)
        dis = {0: 0, 1: 0}
        for n in range(2, n_max + 1):
            s = sum(k * _split_weight(n, k, q) * dis[k] * nd[n - k] for k in range(2, n))
            dis[n] = nd[n] - exact_div(s, n, f"division by n in DIS recursion (n={n}, q={q})")
        return {n: dis[n] for n in range(n_max + 1)}

    return build


def dis_table(n_max: int, q: int) -> SequenceTable:
    return _table("dis", (q,), n_max, _build_dis(q))


def dis(n: int, q: int) -> int:
    """Directly indecomposable non-degenerate spaces in Lambda(n, q).

    At q = 1 this is the number of connected graphs without isolated vertices.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return dis_table(n, q)[n]


def _build_dis_rooted(q: int) -> Callable[[int], dict]:
    # Roots counted as nonzero vectors of the summand: [k]_q and [n]_q weights.
    def build(n_max):
        nd = nds_table(n_max, q)
        dis = {0: 0, 1: 0}
        for n in range(2, n_max + 1):
            s = sum(q_int(k, q) * _split_weight(n, k, q) * dis[k] * nd[n - k] for k in range(2, n))
            dis[n] = nd[n] - exact_div(s, q_int(n, q), f"division by [n]_q (n={n}, q={q})")
        return {n: dis[n] for n in range(n_max + 1)}

    return build


def dis_rooted_table(n_max: int, q: int) -> SequenceTable:
    return _table("dis-rooted", (q,), n_max, _build_dis_rooted(q))


def dis_rooted(n: int, q: int) -> int:
    """Root-vector recursion with ``[k]_q / [n]_q`` weights.

    Agrees with :func:`dis` at q = 1 and for n <= 3, but not in general: a
    nonzero root vector of F_q^n need not lie inside a single summand, so the
    (q^n - 1) * NDS root count is not matched by the summand-wise sum. Kept for
    comparison; :func:`dis` is the count.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return dis_rooted_table(n, q)[n]


def rg(n: int) -> int:
    """Rooted labelled graphs on n vertices."""
    if n < 1:
        raise ValueError("rg needs n >= 1")
    return n * graph_count(n)


def rs(n: int, q: int) -> int:
    """Rooted (nonzero root vector) non-degenerate spaces in Lambda(n, q)."""
    if n < 1:
        raise ValueError("rs needs n >= 1")
    return (q**n - 1) * nds(n, q)
