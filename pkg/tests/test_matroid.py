"""Rank oracle, closure, circuits, flats, and derived constructions."""

import itertools
import random

import pytest

from oscalc import (
    AxiomError,
    GuardError,
    NotSimpleError,
    OscalcError,
    Realization,
    from_circuits,
    from_graph,
    from_lines,
    from_matrix,
    ranks_equal,
)
from oscalc.util import bits_of, popcount, set_of

WHEEL_LINES = [{1, 2, 3}, {3, 4, 5}, {1, 5, 6}]
WHEEL_FOUR_CIRCUITS = [
    {1, 2, 4, 5}, {1, 2, 4, 6}, {1, 3, 4, 6}, {2, 3, 4, 6}, {2, 3, 5, 6}, {2, 4, 5, 6},
]


def test_wheel_ranks(wheel3):
    assert wheel3.full_rank == 3
    assert wheel3.rank({1, 2, 3}) == 2
    assert wheel3.rank(()) == 0
    assert wheel3.rank({2, 4, 6}) == 3


def test_yuz_ranks(yuz8):
    assert yuz8.full_rank == 3
    assert yuz8.rank(range(1, 9)) == 3
    assert yuz8.rank({3, 6, 7, 8}) == 2


def test_uniform_from_lines_no_lines():
    u = from_lines(5, [])
    for triple in itertools.combinations(range(1, 6), 3):
        assert u.rank(triple) == 3


def test_closure(wheel3, yuz8):
    assert wheel3.closure({1, 2}) == {1, 2, 3}
    assert wheel3.closure({4}) == {4}
    assert yuz8.closure({3, 6}) == {3, 6, 7, 8}


def test_closure_singletons_simple(nonfano):
    for i in range(1, 8):
        assert nonfano.closure({i}) == {i}


def test_circuits_wheel(wheel3):
    got = sorted(sorted(c) for c in wheel3.circuits())
    want = sorted(sorted(c) for c in WHEEL_LINES + WHEEL_FOUR_CIRCUITS)
    assert got == want
    assert sorted(sorted(c) for c in wheel3.circuits(3)) == sorted(
        sorted(c) for c in WHEEL_LINES
    )


def test_circuits_boolean_empty(boolean4):
    assert boolean4.circuits() == []


def test_circuits_yuz_triples(yuz8):
    got = sorted(sorted(c) for c in yuz8.circuits(3))
    assert got == [
        [1, 2, 3], [1, 4, 8], [2, 5, 7], [3, 6, 7],
        [3, 6, 8], [3, 7, 8], [4, 5, 6], [6, 7, 8],
    ]


def test_from_circuits_matches_from_lines(wheel3):
    rebuilt = from_circuits(6, WHEEL_LINES + WHEEL_FOUR_CIRCUITS)
    assert ranks_equal(rebuilt, wheel3)


def test_from_circuits_free_and_u34():
    free = from_circuits(5, [])
    assert free.full_rank == 5
    assert free.rank({2, 4}) == 2
    u34 = from_circuits(4, [{1, 2, 3, 4}])
    assert u34.full_rank == 3
    assert all(u34.rank(t) == 3 for t in itertools.combinations(range(1, 5), 3))


def test_from_circuits_rejects_bad_axioms():
    with pytest.raises(AxiomError):
        from_circuits(5, [{1, 2, 3}, {1, 2, 3, 4}])  # nested circuits
    with pytest.raises(AxiomError):
        # {1,2,3} and {1,2,4} demand a circuit inside {2,3,4} or {1,3,4}
        from_circuits(4, [{1, 2, 3}, {1, 2, 4}])
    with pytest.raises(NotSimpleError):
        from_circuits(4, [{1, 2}])


def test_from_lines_validation():
    with pytest.raises(AxiomError):
        from_lines(5, [{1, 2}])
    with pytest.raises(NotSimpleError):
        from_lines(6, [{1, 2, 3}, {1, 2, 4}])
    with pytest.raises(ValueError):
        from_lines(4, [{1, 2, 9}])


def test_from_matrix_rejects_loops_and_parallels():
    with pytest.raises(NotSimpleError):
        Realization([[1, 0, 0], [0, 1, 0]])
    with pytest.raises(NotSimpleError):
        Realization([[1, 2, 0], [2, 4, 1]])


def test_matrix_matroids(nonfano, x2):
    assert nonfano.full_rank == 3 and nonfano.n == 7
    assert x2.full_rank == 3 and x2.n == 7
    assert sorted(sorted(c) for c in nonfano.circuits(3)) == [
        [1, 4, 5], [1, 6, 7], [2, 4, 7], [2, 5, 6], [3, 4, 6], [3, 5, 7],
    ]
    assert sorted(sorted(c) for c in x2.circuits(3)) == [
        [1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [3, 5, 7],
    ]


def test_flats_wheel(wheel3):
    lattice = wheel3.flats()
    assert [len(level) for level in lattice.flats_by_rank] == [1, 6, 9, 1]
    lines = [f for f in lattice.flats_by_rank[2] if len(f) == 3]
    pairs = [f for f in lattice.flats_by_rank[2] if len(f) == 2]
    assert len(lines) == 3 and len(pairs) == 6
    assert all(lattice.mobius[f] == 2 for f in lines)
    assert all(lattice.mobius[f] == 1 for f in pairs)
    assert lattice.mobius[frozenset(range(1, 7))] == -7


def test_flats_boolean(boolean4):
    lattice = boolean4.flats()
    assert sum(len(level) for level in lattice.flats_by_rank) == 16
    for f in lattice.all_flats():
        assert lattice.mobius[f] == (-1) ** len(f)


def test_mobius_recursion_and_signs(entries):
    for name in ("wheel3", "yuz8", "nonfano", "x2", "uniform:3,5"):
        M = entries[name].matroid
        lattice = M.flats()
        for r, level in enumerate(lattice.flats_by_rank):
            for f in level:
                assert lattice.mobius[f] * (-1) ** r > 0
        for x in lattice.all_flats():
            total = sum(lattice.mobius[y] for y in lattice.all_flats() if y <= x)
            assert total == (1 if x == lattice.bottom else 0)
        assert sum(lattice.mobius.values()) == 0


def test_mobius_top_yuz(yuz8):
    assert yuz8.flats().mobius[frozenset(range(1, 9))] == -14


def test_covers_are_rank_steps(wheel3):
    lattice = wheel3.flats()
    for low, ups in lattice.covers.items():
        r = lattice.rank_of(low)
        for up in ups:
            assert low < up and lattice.rank_of(up) == r + 1


def test_truncation(entries, boolean4):
    k33d = entries["k33dual"].matroid
    t = k33d.truncation(3)
    assert t.full_rank == 3
    assert t.rank({1, 2, 3, 4}) == 3
    assert k33d.truncation(4) is k33d
    u34 = boolean4.truncation(3)
    assert u34.full_rank == 3 and u34.rank({1, 2, 3}) == 3
    with pytest.raises(OscalcError):
        boolean4.truncation(5)
    with pytest.raises(OscalcError):
        boolean4.truncation(0)


def test_dual(entries):
    k33g = entries["k33graphic"].matroid
    k33d = entries["k33dual"].matroid
    assert k33g.full_rank == 5 and k33d.full_rank == 4
    assert ranks_equal(k33d.dual(), k33g)
    for name in ("nonfano", "x2"):
        M = entries[name].matroid
        assert ranks_equal(M.dual().dual(), M)


def test_dual_requires_matrix(wheel3, boolean4):
    with pytest.raises(OscalcError):
        wheel3.dual()
    with pytest.raises(NotSimpleError):
        boolean4.dual()  # kernel is zero: all points become loops


def test_restriction(wheel3, yuz8):
    line = wheel3.restriction({1, 2, 3})
    assert line.n == 3 and line.full_rank == 2
    assert line.rank({1, 2}) == 2
    quad = yuz8.restriction({3, 6, 7, 8})
    assert quad.n == 4 and quad.full_rank == 2
    whole = wheel3.restriction(range(1, 7))
    assert ranks_equal(whole, wheel3)
    with pytest.raises(OscalcError):
        wheel3.restriction({1, 2})  # not a flat: closure adds 3


def test_from_graph():
    k33 = from_graph(6, [(u, v) for u in (1, 2, 3) for v in (4, 5, 6)])
    assert k33.n == 9 and k33.full_rank == 5
    tree = from_graph(4, [(1, 2), (2, 3), (3, 4)])
    assert tree.full_rank == 3 and tree.circuits() == []
    tri = from_graph(3, [(1, 2), (2, 3), (1, 3)])
    assert tri.n == 3 and tri.full_rank == 2
    with pytest.raises(NotSimpleError):
        from_graph(3, [(1, 1)])
    with pytest.raises(NotSimpleError):
        from_graph(3, [(1, 2), (2, 1)])


def test_guard_rejects_large_n():
    with pytest.raises(GuardError):
        from_lines(15, [])
    big = from_lines(15, [], allow_large=True)
    assert big.rank({1, 2, 3, 4}) == 3


def test_rank_axioms_exhaustive(wheel3, u35):
    for M in (wheel3, u35):
        full = 1 << M.n
        ranks = [M.rank_mask(m) for m in range(full)]
        for s in range(full):
            assert 0 <= ranks[s] <= popcount(s)
            for i in range(M.n):
                b = 1 << i
                if not s & b:
                    assert ranks[s] <= ranks[s | b] <= ranks[s] + 1
        for s in range(full):
            for t in range(full):
                assert ranks[s | t] + ranks[s & t] <= ranks[s] + ranks[t]


def test_rank_axioms_sampled(yuz8, entries):
    rng = random.Random(7)
    for M in (yuz8, entries["k33dual"].matroid):
        full = 1 << M.n
        for _ in range(400):
            s, t = rng.randrange(full), rng.randrange(full)
            rs, rt = M.rank_mask(s), M.rank_mask(t)
            assert M.rank_mask(s | t) + M.rank_mask(s & t) <= rs + rt
            if s & t == s:
                assert rs <= rt


def test_closure_properties_exhaustive(wheel3):
    M = wheel3
    full = 1 << M.n
    for s in range(full):
        c = M.closure_mask(s)
        assert s & c == s
        assert M.closure_mask(c) == c
        for t in range(full):
            if s & t == s:
                assert c & M.closure_mask(t) == c


def test_steinitz_exchange(wheel3):
    M = wheel3
    for s in range(1 << M.n):
        cl_s = M.closure_mask(s)
        for i in bits_of(~cl_s & M.full_mask):
            for j in bits_of(~s & M.full_mask):
                if i == j:
                    continue
                if M.closure_mask(s | (1 << (j - 1))) & (1 << (i - 1)):
                    assert M.closure_mask(s | (1 << (i - 1))) & (1 << (j - 1)), (
                        sorted(set_of(s)), i, j,
                    )


def test_matrix_vs_lines_rank_tables(entries):
    for name in ("wheel3", "yuz8"):
        entry = entries[name]
        assert ranks_equal(from_matrix(entry.realization), entry.matroid)
