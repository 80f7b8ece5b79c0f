"""Alternating matrix spaces over F_p and their structural predicates.

A space in Lambda(n, p) is stored as a :class:`Subspace` of F_p^C(n,2); the
coordinate of a matrix A at pair index k = (i, j), i < j, is A[i, j]
(row-major order of the strict upper triangle).

Everything here reduces to one fact: for column vectors u, w,
``u^t A w = sum_{i<j} A[i, j] (u_i w_j - u_j w_i)``, a linear functional of
the coordinates of A. :func:`pairing_functional` builds it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from altenum.oracle.enumerate import enumerate_unordered_decompositions, partitions
from altenum.oracle.linalg import Subspace, check_prime, nullspace, rank
from altenum.qcalc import pairs


@lru_cache(maxsize=None)
def pair_index(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


def coords_to_matrix(v: Sequence[int], n: int, p: int) -> np.ndarray:
    a = np.zeros((n, n), dtype=np.int64)
    for (i, j), x in zip(pair_index(n), v):
        a[i, j] = x % p
        a[j, i] = (-x) % p
    return a


def matrix_to_coords(a, n: int, p: int) -> tuple[int, ...]:
    a = np.asarray(a, dtype=np.int64) % p
    if a.shape != (n, n) or a.diagonal().any() or ((a + a.T) % p).any():
        raise ValueError("matrix is not alternating")
    return tuple(int(a[i, j]) for i, j in pair_index(n))


def pairing_functional(u: Sequence[int], w: Sequence[int], n: int, p: int) -> np.ndarray:
    """Coefficient vector of A -> u^t A w on the C(n,2) coordinates."""
    return np.array([(u[i] * w[j] - u[j] * w[i]) % p for i, j in pair_index(n)], dtype=np.int64)


@dataclass(frozen=True)
class AltSpace:
    """Subspace of Lambda(n, p)."""

    n: int
    space: Subspace

    def __post_init__(self):
        if self.space.ambient_dim != pairs(self.n):
            raise ValueError(f"Lambda({self.n}) has dimension {pairs(self.n)}, got {self.space.ambient_dim}")

    @classmethod
    def span(cls, matrices: Iterable, n: int, p: int) -> AltSpace:
        return cls(n, Subspace.span([matrix_to_coords(a, n, p) for a in matrices], pairs(n), p))

    @classmethod
    def from_coords(cls, vectors: Iterable[Sequence[int]], n: int, p: int) -> AltSpace:
        return cls(n, Subspace.span(vectors, pairs(n), p))

    @classmethod
    def full(cls, n: int, p: int) -> AltSpace:
        return cls(n, Subspace.full(pairs(n), p))

    @classmethod
    def zero(cls, n: int, p: int) -> AltSpace:
        return cls(n, Subspace.zero(pairs(n), p))

    @property
    def p(self) -> int:
        return self.space.p

    @property
    def dim(self) -> int:
        return self.space.dim

    def coords(self) -> np.ndarray:
        return self.space.matrix()

    def matrices(self) -> list[np.ndarray]:
        return [coords_to_matrix(v, self.n, self.p) for v in self.space.basis]


def elementary(i: int, j: int, n: int, p: int) -> np.ndarray:
    """A_{i,j}: +1 at (i, j), -1 at (j, i); 0-based vertices, i < j."""
    a = np.zeros((n, n), dtype=np.int64)
    a[i, j] = 1
    a[j, i] = p - 1
    return a


def graph_to_altspace(edges: Iterable[Sequence[int]], n: int, q: int) -> AltSpace:
    """Span of the elementary alternating matrices of the edges (0-based)."""
    check_prime(q)
    mats = []
    for e in edges:
        i, j = sorted(e)
        if i == j or not (0 <= i < j < n):
            raise ValueError(f"bad edge {e} on {n} vertices")
        mats.append(elementary(i, j, n, q))
    return AltSpace.span(mats, n, q)


def radical(a: AltSpace) -> Subspace:
    """Common kernel {v : A v = 0 for all A in the space}."""
    n, p = a.n, a.p
    if a.dim == 0:
        return Subspace.full(n, p)
    stacked = np.vstack(a.matrices())
    return Subspace(n, p, Subspace.span(nullspace(stacked, n, p), n, p).basis)


def is_nondegenerate(a: AltSpace) -> bool:
    if a.n == 0:
        return True
    if a.dim == 0:
        return False
    return rank(np.vstack(a.matrices()), a.p) == a.n


def restriction_functionals(basis: Sequence[Sequence[int]], n: int, p: int) -> np.ndarray:
    """C(n,2) x C(d,2) matrix sending coordinates of A to coordinates of T^t A T,
    where T has the given d basis vectors as columns."""
    d = len(basis)
    cols = [pairing_functional(basis[a], basis[b], n, p) for a, b in combinations(range(d), 2)]
    if not cols:
        return np.zeros((pairs(n), 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def restrict(a: AltSpace, u: Subspace) -> AltSpace:
    """The restriction of the space to U, via U's RREF basis, in Lambda(dim U)."""
    r = restriction_functionals(u.basis, a.n, a.p)
    img = (a.coords() @ r) % a.p if a.dim else np.zeros((0, r.shape[1]), dtype=np.int64)
    return AltSpace.from_coords(img.tolist(), u.dim, a.p)


def restriction_dim(a: AltSpace, u: Subspace) -> int:
    if u.dim < 2 or a.dim == 0:
        return 0
    return rank((a.coords() @ restriction_functionals(u.basis, a.n, a.p)) % a.p, a.p)


def is_totally_isotropic(a: AltSpace, u: Subspace) -> bool:
    for A in a.matrices():
        for x in u.basis:
            for y in u.basis:
                if (np.array(x) @ A @ np.array(y)) % a.p:
                    return False
    return True


def _check_decomposition(n: int, parts: Sequence[Subspace]) -> None:
    if any(u.is_zero() for u in parts) or sum(u.dim for u in parts) != n:
        raise ValueError("not a nontrivial decomposition")
    if n and rank(np.vstack([u.matrix() for u in parts]), parts[0].p) != n:
        raise ValueError("parts do not form a direct sum of the whole space")


def is_orthogonal_decomposition(a: AltSpace, parts: Sequence[Subspace]) -> bool:
    _check_decomposition(a.n, parts)
    mats = a.matrices()
    for i, j in combinations(range(len(parts)), 2):
        for x in parts[i].basis:
            for y in parts[j].basis:
                for A in mats:
                    if (np.array(x) @ A @ np.array(y)) % a.p:
                        return False
    return True


def is_direct_decomposition(a: AltSpace, parts: Sequence[Subspace]) -> bool:
    if not is_orthogonal_decomposition(a, parts):
        return False
    return a.dim == sum(restriction_dim(a, u) for u in parts)


class DecompositionTable:
    """Precomputed linear data for a fixed list of decompositions of F_p^n.

    For each decomposition it stores the cross-pairing functionals (all
    u_i^t A u_j, i < j) and the restriction maps of its parts, so a whole
    space can be screened against every decomposition with one matrix
    product.
    """

    def __init__(self, n: int, p: int, decompositions: Sequence[tuple[Subspace, ...]]):
        self.n, self.p = n, p
        self.decompositions = list(decompositions)
        m = pairs(n)
        blocks, starts, pos = [], [], 0
        self.restrictions = []
        for d in self.decompositions:
            cols = [
                pairing_functional(x, y, n, p)
                for i, j in combinations(range(len(d)), 2)
                for x in d[i].basis
                for y in d[j].basis
            ]
            starts.append(pos)
            pos += len(cols)
            blocks.append(np.stack(cols, axis=1) if cols else np.zeros((m, 0), dtype=np.int64))
            self.restrictions.append([restriction_functionals(u.basis, n, p) for u in d])
        self.cross = np.hstack(blocks) if blocks else np.zeros((m, 0), dtype=np.int64)
        self.starts = np.array(starts, dtype=np.intp)
        self.widths = np.diff(np.append(self.starts, pos))

    def __len__(self):
        return len(self.decompositions)

    def orthogonal(self, coords: np.ndarray) -> np.ndarray:
        """Boolean mask: which decompositions are orthogonal for the space."""
        if not len(self):
            return np.zeros(0, dtype=bool)
        if coords.shape[0] == 0 or self.cross.shape[1] == 0:
            return np.ones(len(self), dtype=bool)
        bad = ((coords @ self.cross) % self.p).any(axis=0)
        cs = np.concatenate([[0], np.cumsum(bad)])
        sums = cs[self.starts + self.widths] - cs[self.starts]
        return sums == 0

    def direct(self, coords: np.ndarray, k: int) -> bool:
        """Dimension additivity for decomposition k (orthogonality assumed)."""
        d = coords.shape[0]
        total = sum(rank((coords @ r) % self.p, self.p) if r.shape[1] else 0 for r in self.restrictions[k])
        return total == d

    def direct_indices(self, coords: np.ndarray) -> list[int]:
        return [int(k) for k in np.flatnonzero(self.orthogonal(coords)) if self.direct(coords, int(k))]


@lru_cache(maxsize=None)
def two_part_table(n: int, p: int) -> DecompositionTable:
    """All unordered 2-part decompositions of F_p^n."""
    decs = []
    for k in range(1, n // 2 + 1):
        decs.extend(enumerate_unordered_decompositions(n, (n - k, k), p, budget=None))
    return DecompositionTable(n, p, decs)


@lru_cache(maxsize=None)
def all_decomposition_table(n: int, p: int) -> DecompositionTable:
    """Every unordered decomposition of F_p^n, including the trivial one."""
    decs = []
    for part in partitions(n):
        decs.extend(enumerate_unordered_decompositions(n, part, p, budget=None))
    return DecompositionTable(n, p, decs)


def is_directly_indecomposable(a: AltSpace) -> bool:
    """No direct decomposition into two nonzero parts.

    Two parts suffice: grouping the parts of a k-part direct decomposition
    into two blocks keeps orthogonality, and the restriction map to the two
    blocks stays injective, so dimensions still add up.
    """
    if a.n < 2:
        return True
    return not two_part_table(a.n, a.p).direct_indices(a.coords())


def is_directly_indecomposable_exhaustive(a: AltSpace) -> bool:
    """Same predicate, checking decompositions into any number k >= 2 of parts."""
    if a.n < 2:
        return True
    table = all_decomposition_table(a.n, a.p)
    return not any(len(table.decompositions[k]) >= 2 for k in table.direct_indices(a.coords()))


def complete_direct_decompositions(a: AltSpace) -> set[frozenset[Subspace]]:
    """All direct decompositions (as unordered sets of parts, k >= 1) whose
    parts restrict to directly indecomposable spaces."""
    table = all_decomposition_table(a.n, a.p)
    found = set()
    coords = a.coords()
    for k in table.direct_indices(coords):
        d = table.decompositions[k]
        if all(is_directly_indecomposable(restrict(a, u)) for u in d):
            found.add(frozenset(d))
    return found

