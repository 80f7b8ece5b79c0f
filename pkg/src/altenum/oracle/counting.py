"""Brute-force counts used as ground truth for the formulas.

Counting runs can be split across worker processes. Work is cut into a fixed,
ordered list of tasks (pivot classes of the RREF enumeration, first summands
of decompositions, or edge-mask ranges); each task returns an exact integer
and the results are summed in task order, so the answer does not depend on
the number of workers.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import combinations
from typing import Callable, Sequence

import numpy as np

from altenum import kernels
from altenum.kernels._pykernels import coloring_masks
from altenum.oracle.altspace import (
    AltSpace,
    is_directly_indecomposable,
    is_nondegenerate,
    pairing_functional,
    two_part_table,
)
from altenum.oracle.enumerate import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    check_budget,
    count_subspaces,
    enumerate_class,
    enumerate_ordered_decompositions,
    enumerate_subspaces,
    pivot_classes,
    subspaces_by_dim,
)
from altenum.oracle.linalg import check_prime, rank
from altenum.qcalc import compositions, decomposition_count, galois_number, pairs

GRAPH_N_MAX = 7
COLORED_N_MAX = 5


def default_jobs() -> int:
    return os.cpu_count() or 1


def _run(fn: Callable, tasks: Sequence[tuple], jobs: int | None) -> int:
    jobs = default_jobs() if jobs is None else jobs
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    if jobs == 1 or len(tasks) <= 1:
        return sum(fn(*t) for t in tasks)
    backend = kernels.backend_name()
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as ex:
        results = list(ex.map(_call, [(backend, fn, t) for t in tasks]))
    return sum(results)


def _call(job):
    backend, fn, args = job
    kernels.use_backend(backend)
    return fn(*args)


def _chunk(items: Sequence, size: int) -> list[tuple]:
    return [tuple(items[i : i + size]) for i in range(0, len(items), size)]


# -- spaces in Lambda(n, q) ------------------------------------------------------


def _space_tasks(n: int, q: int, budget: int | None) -> list[tuple]:
    check_prime(q)
    m = pairs(n)
    check_budget(galois_number(m, q), budget, f"subspaces of Lambda({n}, {q})")
    return [(n, q, cls) for cls in _chunk([piv for _, piv in pivot_classes(m)], 4)]


def _nds_task(n, q, classes):
    m = pairs(n)
    return sum(is_nondegenerate(AltSpace(n, s)) for piv in classes for s in enumerate_class(m, q, piv))


def _dis_task(n, q, classes):
    m = pairs(n)
    count = 0
    for piv in classes:
        for s in enumerate_class(m, q, piv):
            a = AltSpace(n, s)
            if is_nondegenerate(a) and is_directly_indecomposable(a):
                count += 1
    return count


def oracle_nds(n: int, q: int, jobs: int | None = 1, budget: int | None = DEFAULT_BUDGET) -> int:
    """Subspaces of Lambda(n, q) with zero radical, by exhaustive check."""
    if n == 0:
        return 1
    return _run(_nds_task, _space_tasks(n, q, budget), jobs)


def oracle_dis(n: int, q: int, jobs: int | None = 1, budget: int | None = DEFAULT_BUDGET) -> int:
    """Non-degenerate, directly indecomposable subspaces of Lambda(n, q)."""
    if n < 2:
        return 0
    two_part_table(n, q)  # build once before forking
    return _run(_dis_task, _space_tasks(n, q, budget), jobs)


# -- (space, decomposition) pairs ------------------------------------------------


def _conditions(d, n: int, q: int, kind: str) -> np.ndarray:
    """Linear functionals on Lambda(n, q) whose common kernel is the set of
    matrices making every part isotropic ("iso") or the parts mutually
    orthogonal ("ortho")."""
    cols = []
    if kind == "iso":
        for u in d:
            for x, y in combinations(u.basis, 2):
                cols.append(pairing_functional(x, y, n, q))
    else:
        for i, j in combinations(range(len(d)), 2):
            for x in d[i].basis:
                for y in d[j].basis:
                    cols.append(pairing_functional(x, y, n, q))
    if not cols:
        return np.zeros((pairs(n), 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def condition_rank(d, n: int, q: int, kind: str) -> int:
    c = _conditions(d, n, q, kind)
    return rank(c.T, q) if c.shape[1] else 0


def _pair_tasks(n: int, c: int, q: int, kind: str, budget: int | None) -> list[tuple]:
    check_prime(q)
    comps = list(compositions(n, c))
    check_budget(sum(decomposition_count(n, comp, q) for comp in comps), budget,
                 f"{c}-decompositions of F_{q}^{n}")
    by_dim = subspaces_by_dim(n, q)
    return [(n, comp.parts, q, kind, idx) for comp in comps for idx in range(len(by_dim[comp.parts[0]]))]


def _pair_task_fast(n, parts, q, kind, first_idx):
    first = subspaces_by_dim(n, q)[parts[0]][first_idx]
    m = pairs(n)
    total = 0
    for d in enumerate_ordered_decompositions(n, parts, q, budget=None, first=first):
        total += count_subspaces(m - condition_rank(d, n, q, kind), q)
    return total


@lru_cache(maxsize=None)
def _all_spaces(n: int, q: int) -> tuple[np.ndarray, ...]:
    return tuple(s.matrix() for s in enumerate_subspaces(pairs(n), q, budget=None))


def _pair_task_naive(n, parts, q, kind, first_idx):
    first = subspaces_by_dim(n, q)[parts[0]][first_idx]
    spaces = _all_spaces(n, q)
    total = 0
    for d in enumerate_ordered_decompositions(n, parts, q, budget=None, first=first):
        cond = _conditions(d, n, q, kind)
        for coords in spaces:
            if coords.shape[0] == 0 or not ((coords @ cond) % q).any():
                total += 1
    return total


def _pair_count(n, c, q, kind, jobs, budget, naive):
    tasks = _pair_tasks(n, c, q, kind, budget)
    if naive:
        check_budget(galois_number(pairs(n), q), budget, f"subspaces of Lambda({n}, {q})")
        _all_spaces(n, q)
    subspaces_by_dim(n, q)
    return _run(_pair_task_naive if naive else _pair_task_fast, tasks, jobs)


def oracle_read_q(n: int, c: int, q: int, jobs: int | None = 1, budget: int | None = DEFAULT_BUDGET,
                  naive: bool = False) -> int:
    """Pairs (space, ordered c-decomposition into totally isotropic parts).

    The fast path solves the isotropy conditions per decomposition and counts
    the subspaces of the solution space by enumeration; ``naive=True`` checks
    every space against every decomposition instead.
    """
    return _pair_count(n, c, q, "iso", jobs, budget, naive)


def oracle_ortho(n: int, c: int, q: int, jobs: int | None = 1, budget: int | None = DEFAULT_BUDGET,
                 naive: bool = False) -> int:
    """Pairs (space, ordered orthogonal c-decomposition)."""
    return _pair_count(n, c, q, "ortho", jobs, budget, naive)


def count_decompositions(n: int, parts: Sequence[int], q: int, jobs: int | None = 1,
                         budget: int | None = DEFAULT_BUDGET) -> int:
    """Number of ordered decompositions, by enumeration."""
    parts = tuple(parts)
    check_budget(galois_number(n, q), budget, f"subspaces of F_{q}^{n}")
    k = len(subspaces_by_dim(n, q)[parts[0]])
    return _run(_decomp_task, [(n, parts, q, i) for i in range(k)], jobs)


def _decomp_task(n, parts, q, first_idx):
    first = subspaces_by_dim(n, q)[parts[0]][first_idx]
    return sum(1 for _ in enumerate_ordered_decompositions(n, parts, q, budget=None, first=first))


# -- labelled graphs -------------------------------------------------------------


def _graph_tasks(n: int, pieces: int = 16) -> list[tuple[int, int]]:
    total = 1 << pairs(n)
    step = max(1, -(-total // pieces))
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _census_task(n, lo, hi, which):
    return kernels.graph_census(n, lo, hi)[which]


def _check_graph_n(n: int, limit: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > limit:
        raise BudgetExceeded(f"graph enumeration limited to n <= {limit}, got {n}")


def count_connected(n: int, jobs: int | None = 1) -> int:
    """Connected labelled graphs on n >= 1 vertices, by exhaustive search."""
    _check_graph_n(n, GRAPH_N_MAX)
    if n < 1:
        raise ValueError("n must be >= 1")
    return _run(_census_task, [(n, lo, hi, 0) for lo, hi in _graph_tasks(n)], jobs)


def count_no_isolated(n: int, jobs: int | None = 1) -> int:
    _check_graph_n(n, GRAPH_N_MAX)
    return _run(_census_task, [(n, lo, hi, 1) for lo, hi in _graph_tasks(n)], jobs)


def count_connected_no_isolated(n: int, jobs: int | None = 1) -> int:
    _check_graph_n(n, GRAPH_N_MAX)
    return _run(_census_task, [(n, lo, hi, 2) for lo, hi in _graph_tasks(n)], jobs)


def _colored_task(n, c, lo, hi):
    return kernels.colored_pairs(n, c, lo, hi)


def count_colored_pairs(n: int, c: int, jobs: int | None = 1) -> int:
    """Pairs (graph, ordered partition into c nonempty independent sets)."""
    _check_graph_n(n, COLORED_N_MAX)
    if c < 1:
        raise ValueError("c must be >= 1")
    return _run(_colored_task, [(n, c, lo, hi) for lo, hi in _graph_tasks(n)], jobs)


def _ortho_graph_task(n, c, lo, hi):
    full = (1 << pairs(n)) - 1
    cross = [full & ~m for m in coloring_masks(n, c)]
    return sum(1 for g in range(lo, hi) for m in cross if not g & m)


def count_orthogonal_graph_pairs(n: int, c: int, jobs: int | None = 1) -> int:
    """Pairs (graph, ordered partition into c nonempty classes) with every edge
    inside a class: the q = 1 reading of orthogonal decompositions."""
    _check_graph_n(n, COLORED_N_MAX)
    if c < 1:
        raise ValueError("c must be >= 1")
    return _run(_ortho_graph_task, [(n, c, lo, hi) for lo, hi in _graph_tasks(n)], jobs)
