"""Dense linear algebra over small prime fields F_p."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from altenum import kernels

SUPPORTED_PRIMES = (2, 3, 5)


def check_prime(p: int) -> None:
    if p not in SUPPORTED_PRIMES:
        raise ValueError(f"oracle works over F_p with p in {SUPPORTED_PRIMES}, got {p}")


@dataclass(frozen=True, eq=False)
class FqMatrix:
    """r x c matrix with entries in [0, p)."""

    entries: np.ndarray
    p: int

    def __post_init__(self):
        check_prime(self.p)
        a = np.array(self.entries, dtype=np.int64, ndmin=2) % self.p
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @classmethod
    def zeros(cls, r: int, c: int, p: int) -> FqMatrix:
        return cls(np.zeros((r, c), dtype=np.int64), p)

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __matmul__(self, other: FqMatrix) -> FqMatrix:
        if self.p != other.p:
            raise ValueError("field mismatch")
        return FqMatrix(self.entries @ other.entries, self.p)

    def __eq__(self, other):
        return (
            isinstance(other, FqMatrix)
            and self.p == other.p
            and self.shape == other.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.p, self.shape, self.entries.tobytes()))

    @property
    def T(self) -> FqMatrix:
        return FqMatrix(self.entries.T, self.p)

    def rank(self) -> int:
        return rank(self.entries, self.p)

    def is_zero(self) -> bool:
        return not self.entries.any()


def rank(a, p: int) -> int:
    a = np.asarray(a, dtype=np.int64)
    if a.ndim != 2 or a.shape[0] == 0 or a.shape[1] == 0:
        return 0
    return kernels.rank_mod_p(a, a.shape[1], p)


def rref(a, p: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Nonzero rows of the reduced row echelon form and their pivot columns."""
    a = np.asarray(a, dtype=np.int64)
    if a.ndim != 2 or a.shape[0] == 0 or a.shape[1] == 0:
        return (), ()
    return kernels.rref_mod_p(a, a.shape[1], p)


def nullspace(a, ncols: int, p: int) -> list[tuple[int, ...]]:
    """Basis of {v : a v = 0} in F_p^ncols (right kernel)."""
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        rows, pivots = (), ()
    else:
        rows, pivots = rref(a.reshape(-1, ncols), p)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(rows, pivots):
            v[pc] = (-row[f]) % p
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class Subspace:
    """Subspace of F_p^m held as its canonical RREF basis.

    Equality and hashing compare the RREF basis, so each subspace has exactly
    one representation.
    """

    ambient_dim: int
    p: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], m: int, p: int) -> Subspace:
        vecs = [tuple(int(x) % p for x in v) for v in vectors]
        for v in vecs:
            if len(v) != m:
                raise ValueError(f"vector of length {len(v)} in F_p^{m}")
        if not vecs or m == 0:
            return cls(m, p, ())
        rows, _ = rref(np.array(vecs, dtype=np.int64), p)
        return cls(m, p, rows)

    @classmethod
    def zero(cls, m: int, p: int) -> Subspace:
        return cls(m, p, ())

    @classmethod
    def full(cls, m: int, p: int) -> Subspace:
        return cls(m, p, tuple(tuple(int(i == j) for j in range(m)) for i in range(m)))

    @classmethod
    def coordinate(cls, indices: Iterable[int], m: int, p: int) -> Subspace:
        return cls.span([[int(i == j) for j in range(m)] for i in sorted(set(indices))], m, p)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> np.ndarray:
        return np.array(self.basis, dtype=np.int64).reshape(self.dim, self.ambient_dim)

    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        if self.dim == 0:
            return not any(x % self.p for x in v)
        return rank(np.vstack([self.matrix(), np.array(v, dtype=np.int64)]), self.p) == self.dim

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace.span(self.basis + other.basis, self.ambient_dim, self.p)

    def is_zero(self) -> bool:
        return self.dim == 0
