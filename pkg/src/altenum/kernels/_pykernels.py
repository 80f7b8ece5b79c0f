"""Pure-Python reference versions of the hot kernels.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Matrices come in as 2-d integer numpy arrays (or nested lists) and results are
plain Python ints / tuples so both backends are interchangeable.
"""

from itertools import product


def _rows(a):
    if hasattr(a, "tolist"):
        return a.tolist()
    return [list(r) for r in a]


def _rref_rows(rows, ncols, p):
    rows = [[x % p for x in r] for r in rows]
    pivots = []
    r = 0
    nrows = len(rows)
    for col in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], p - 2, p)
        if inv != 1:
            rows[r] = [(x * inv) % p for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][col]
                if f:
                    rows[i] = [(x - f * y) % p for x, y in zip(rows[i], prow)]
        pivots.append(col)
        r += 1
    return rows[:r], tuple(pivots)


def rref_mod_p(a, ncols, p):
    """Reduced row echelon form of ``a`` over F_p.

    Returns ``(rows, pivots)`` with only the nonzero rows kept, as tuples.
    """
    rows, pivots = _rref_rows(_rows(a), ncols, p)
    return tuple(tuple(r) for r in rows), pivots


def rank_mod_p(a, ncols, p):
    return len(_rref_rows(_rows(a), ncols, p)[1])


def _edge_index(n):
    idx = {}
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            idx[i, j] = k
            k += 1
    return idx


def graph_census(n, lo, hi):
    """Count, over edge masks ``lo <= g < hi`` on ``n`` labelled vertices:
    connected graphs, graphs without isolated vertices, and graphs that are
    both. Bit ``k`` of ``g`` is the ``k``-th pair ``(i, j)``, ``i < j``, row-major.
    """
    edges = sorted(_edge_index(n).items(), key=lambda kv: kv[1])
    connected = no_isolated = both = 0
    full = (1 << n) - 1
    for g in range(lo, hi):
        adj = [0] * n
        for (i, j), k in edges:
            if g >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        iso = False
        for v in range(n):
            if not adj[v]:
                iso = True
                break
        if n == 0:
            conn = True
        else:
            seen = 1
            frontier = 1
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= adj[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & ~seen
                seen |= nxt
            conn = seen == full
        if conn:
            connected += 1
        if not iso:
            no_isolated += 1
            if conn:
                both += 1
    return connected, no_isolated, both


def coloring_masks(n, c):
    """Forbidden-edge masks of the ordered partitions of ``range(n)`` into ``c``
    nonempty classes (edges that would join two vertices of the same class)."""
    idx = _edge_index(n)
    masks = []
    for col in product(range(c), repeat=n):
        if len(set(col)) != c:
            continue
        m = 0
        for (i, j), k in idx.items():
            if col[i] == col[j]:
                m |= 1 << k
        masks.append(m)
    return masks


def colored_pairs(n, c, lo, hi):
    """Number of (graph, ordered partition into ``c`` nonempty independent
    sets) pairs with edge mask in ``[lo, hi)``."""
    masks = coloring_masks(n, c)
    total = 0
    for g in range(lo, hi):
        for m in masks:
            if not g & m:
                total += 1
    return total
