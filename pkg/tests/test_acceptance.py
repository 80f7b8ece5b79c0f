"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` (the verdict lines are
printed even when output capture is on) or directly with
``python tests/test_acceptance.py``.
"""

import io
import itertools
from contextlib import redirect_stdout

import pytest

from altenum import cli
from altenum import formulas as F
from altenum.oracle import counting
from altenum.oracle.altspace import (
    AltSpace,
    complete_direct_decompositions,
    elementary,
    graph_to_altspace,
    is_directly_indecomposable,
    is_nondegenerate,
    is_totally_isotropic,
    two_part_table,
)
from altenum.oracle.enumerate import enumerate_ordered_decompositions, enumerate_subspaces
from altenum.oracle.linalg import Subspace
from altenum.qcalc import IntegrityError, compositions, decomposition_count, galois_number, gauss_binom, pairs
from altenum.series import verify_riddell

pytestmark = pytest.mark.slow


def _first_mismatch(pairs_):
    for key, got, want in pairs_:
        if got != want:
            return f"{key}: {got} != {want}"
    return None


def crit_1():
    checks = []
    for q, m_max in ((2, 6), (3, 5)):
        for m in range(m_max + 1):
            by_dim = [0] * (m + 1)
            for s in enumerate_subspaces(m, q):
                by_dim[s.dim] += 1
            checks += [((q, m, d), by_dim[d], gauss_binom(m, d, q)) for d in range(m + 1)]
            checks.append(((q, m, "total"), sum(by_dim), galois_number(m, q)))
    return _first_mismatch(checks), f"{len(checks)} counts"


def crit_2():
    checks = []
    for q in (2, 3):
        for n in range(1, 5):
            for c in range(1, 4):
                for comp in compositions(n, c):
                    got = sum(1 for _ in enumerate_ordered_decompositions(n, comp, q))
                    checks.append(((q, comp.parts), got, decomposition_count(n, comp, q)))
    return _first_mismatch(checks), f"{len(checks)} compositions"


def crit_3():
    checks = []
    for n in range(1, 4):
        for c in (2, 3):
            checks.append((("read_q", n, c), F.read_q_isotropic(n, c, 2), counting.oracle_read_q(n, c, 2)))
            checks.append((("ortho", n, c), F.ortho_q(n, c, 2), counting.oracle_ortho(n, c, 2)))
    return _first_mismatch(checks), f"{len(checks)} comparisons"


def crit_4():
    checks = [((n, q), F.nds(n, q), counting.oracle_nds(n, q)) for q in (2, 3) for n in range(5)]
    checks += [(("spot", 1, q), F.nds(1, q), 0) for q in (2, 3)]
    checks += [(("spot", 2, q), F.nds(2, q), 1) for q in (2, 3)]
    checks.append((("spot", 3, 2), F.nds(3, 2), 8))
    return _first_mismatch(checks), f"{len(checks)} comparisons"


def crit_5a():
    checks = [((n, 2), F.dis(n, 2), counting.oracle_dis(n, 2)) for n in (2, 3, 4)]
    return _first_mismatch(checks), "dimension-weighted recursion vs oracle, n = 2..4"


def crit_5b():
    try:
        for q in (2, 3, 4):
            F.dis_rooted_table(12, q)
    except IntegrityError as exc:
        return str(exc), ""
    return None, "every division by [n]_q exact, n <= 12, q in {2, 3, 4}"


def crit_5c():
    # the recursion exactly as written, weighted by [k]_q roots; it
    # over-counts decomposable spaces from n = 4 on (2557 vs 2389)
    checks = [((n, 2), F.dis_rooted(n, 2), counting.oracle_dis(n, 2)) for n in (2, 3, 4)]
    return _first_mismatch(checks), "[k]_q-weighted recursion vs oracle, n = 2..4"


def crit_6():
    checks = [(("CG", n), F.connected_graphs(n), counting.count_connected(n)) for n in range(1, 7)]
    checks += [(("CG spot", 3), F.connected_graphs(3), 4), (("CG spot", 4), F.connected_graphs(4), 38)]
    checks += [(("NDG", n), F.no_isolated_graphs(n), counting.count_no_isolated(n)) for n in range(7)]
    checks += [(("read", n, c), F.read_colored(n, c), counting.count_colored_pairs(n, c))
               for n in range(1, 6) for c in range(1, 4)]
    return _first_mismatch(checks), f"{len(checks)} comparisons"


def crit_7():
    reports = [verify_riddell(1, 10)] + [verify_riddell(q, 8) for q in (2, 3)]
    bad = [f"q={r.q} n={row.n}: {row.lhs} != {row.rhs}" for r in reports for row in r.rows if not row.equal]
    rooted = verify_riddell(2, 8, indecomposable=lambda n: F.dis_rooted(n, 2))
    note = "with [k]_q-weighted DIS the q=2 identity would " + ("hold" if rooted.all_equal else "fail")
    return (bad[0] if bad else None), f"q = 1 to order 10, q = 2, 3 to order 8; {note}"


def crit_8():
    checks = [(("read_q", n, c), F.read_q_isotropic(n, c, 1), F.read_colored(n, c))
              for n in range(1, 7) for c in range(1, 5)]
    checks += [(("NDS", n), F.nds(n, 1), F.no_isolated_graphs(n)) for n in range(7)]
    checks += [(("DIS", n), F.dis_rooted(n, 1), counting.count_connected_no_isolated(n)) for n in range(1, 7)]
    return _first_mismatch(checks), f"{len(checks)} comparisons"


def crit_9():
    for s in enumerate_subspaces(pairs(4), 2):
        a = AltSpace(4, s)
        if is_nondegenerate(a) and len(complete_direct_decompositions(a)) != 1:
            return f"space {s.basis} has {len(complete_direct_decompositions(a))} complete decompositions", ""
    ex = AltSpace.span([elementary(0, 1, 5, 2), elementary(2, 3, 5, 2)], 5, 2)
    direct = two_part_table(5, 2).direct_indices(ex.coords())
    if len(direct) < 2:
        return f"degenerate example has {len(direct)} two-part direct decompositions", ""
    for n in range(1, 5):
        edges_all = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(edges_all)):
            edges = [e for k, e in enumerate(edges_all) if mask >> k & 1]
            a = graph_to_altspace(edges, n, 2)
            if len({v for e in edges for v in e}) == n:
                if _connected(n, edges) != is_directly_indecomposable(a):
                    return f"connectivity bridge fails for {edges}", ""
            for k in range(1, n + 1):
                for S in itertools.combinations(range(n), k):
                    indep = not any(i in S and j in S for i, j in edges)
                    if indep != is_totally_isotropic(a, Subspace.coordinate(S, n, 2)):
                        return f"isotropy bridge fails for {edges}, {S}", ""
    return None, f"uniqueness in Lambda(4,2); example has {len(direct)} two-part direct decompositions; bridges n <= 4"


def _connected(n, edges):
    seen, stack = {0}, [0]
    while stack:
        v = stack.pop()
        for a, b in edges:
            for x, y in ((a, b), (b, a)):
                if x == v and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return len(seen) == n


def _cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.main(argv)
    return code, buf.getvalue()


def crit_10():
    runs = [
        ["--scope", "read-q,ortho-q", "--q", "2", "--n-max", "3"],
        ["--scope", "nds", "--q", "2", "--n-max", "4"],
        ["--scope", "nds", "--q", "3", "--n-max", "4"],
        ["--scope", "dis,dis-rooted", "--q", "2", "--n-max", "4"],
    ]
    for r in runs:
        one = _cli(["verify", *r, "--jobs", "1"])
        four = _cli(["verify", *r, "--jobs", "4"])
        if one != four:
            return f"reports differ for {' '.join(r)}", ""
    return None, f"{len(runs)} verify runs byte-identical across --jobs 1 and 4"


CRITERIA = [
    ("1", "q-calculus census", crit_1),
    ("2", "decomposition census", crit_2),
    ("3", "isotropic and orthogonal pair counts vs oracle", crit_3),
    ("4", "non-degenerate spaces vs oracle", crit_4),
    ("5a", "directly indecomposable spaces vs oracle", crit_5a),
    ("5b", "rooted recursion divisions exact", crit_5b),
    ("5c", "rooted recursion as written vs oracle", crit_5c),
    ("6", "graph formulas vs brute force", crit_6),
    ("7", "Riddell identities", crit_7),
    ("8", "q = 1 collapse", crit_8),
    ("9", "structural theorems", crit_9),
    ("10", "determinism across --jobs", crit_10),
]


def _verdict(cid, title, fn):
    failure, detail = fn()
    line = f"criterion {cid:>3} {'PASS' if failure is None else 'FAIL'}  {title}"
    line += f"  ({failure if failure is not None else detail})"
    return failure, line


@pytest.mark.parametrize("cid,title,fn", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(cid, title, fn, capsys):
    failure, line = _verdict(cid, title, fn)
    with capsys.disabled():
        print("\n" + line)
    assert failure is None, line


if __name__ == "__main__":
    import sys

    results = [_verdict(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(any(f is not None for f, _ in results))
