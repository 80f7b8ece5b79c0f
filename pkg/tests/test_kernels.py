import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from altenum import kernels
from altenum.kernels import _pykernels


def _naive_rank(rows, p):
    # rank = log_p of the number of distinct vectors in the row span
    rows = [tuple(x % p for x in r) for r in rows]
    if not rows:
        return 0
    span = {tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % p for j in range(len(rows[0])))
            for coeffs in itertools.product(range(p), repeat=len(rows))}
    k = 0
    while p**k < len(span):
        k += 1
    return k


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-7, 7), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=150, deadline=None)
@given(matrices, st.sampled_from([2, 3, 5]))
def test_rank_matches_span_size(rows, p):
    a = np.array(rows, dtype=np.int64)
    expected = _naive_rank(rows, p)
    for name in kernels.available_backends():
        prev = kernels.use_backend(name)
        try:
            assert kernels.rank_mod_p(a, a.shape[1], p) == expected
        finally:
            kernels.use_backend(prev)


@settings(max_examples=100, deadline=None)
@given(matrices, st.sampled_from([2, 3, 5]))
def test_rref_backends_agree_and_are_reduced(rows, p):
    a = np.array(rows, dtype=np.int64)
    results = set()
    for name in kernels.available_backends():
        prev = kernels.use_backend(name)
        try:
            results.add(kernels.rref_mod_p(a, a.shape[1], p))
        finally:
            kernels.use_backend(prev)
    assert len(results) == 1
    red, piv = results.pop()
    assert list(piv) == sorted(piv)
    for r, pc in zip(red, piv):
        assert r[pc] == 1
        assert all(other[pc] == 0 for other in red if other is not r)


@pytest.mark.parametrize("n", range(0, 6))
def test_graph_census_matches_networkx(backend, n):
    edges = list(itertools.combinations(range(n), 2))
    conn = noiso = both = 0
    for g in range(1 << len(edges)):
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(e for k, e in enumerate(edges) if g >> k & 1)
        c = n == 0 or nx.is_connected(G)
        ni = all(d > 0 for _, d in G.degree())
        conn += c
        noiso += ni
        both += c and ni
    assert kernels.graph_census(n, 0, 1 << len(edges)) == (conn, noiso, both)


def test_graph_census_ranges_add_up(backend):
    total = kernels.graph_census(6, 0, 1 << 15)
    parts = [kernels.graph_census(6, lo, min(lo + 5000, 1 << 15)) for lo in range(0, 1 << 15, 5000)]
    assert tuple(map(sum, zip(*parts))) == total


@pytest.mark.parametrize("n,c", [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3)])
def test_colored_pairs_backend(backend, n, c):
    # independent check: enumerate colorings and edges explicitly
    edges = list(itertools.combinations(range(n), 2))
    expected = 0
    for g in range(1 << len(edges)):
        E = [e for k, e in enumerate(edges) if g >> k & 1]
        for col in itertools.product(range(c), repeat=n):
            if len(set(col)) == c and all(col[i] != col[j] for i, j in E):
                expected += 1
    assert kernels.colored_pairs(n, c, 0, 1 << len(edges)) == expected


def test_use_backend_rejects_unknown():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


def test_python_backend_always_available():
    assert "python" in kernels.available_backends()
    assert _pykernels.rank_mod_p([[1, 1], [1, 1]], 2, 2) == 1
