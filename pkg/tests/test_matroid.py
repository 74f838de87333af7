from itertools import combinations

import pytest

import oracles
from conftest import SEED_MATRICES, random_orders, seed_arrangements
from tcarr.catalog import build
from tcarr.matroid import (Arrangement, EmptyMatrix, LinearOrder, ProportionalRows, ZeroRow,
                           load_arrangement)
from tcarr.scalars import Field

SEEDS = seed_arrangements()


def subsets(n):
    for k in range(n + 1):
        yield from (frozenset(c) for c in combinations(range(n), k))


# -- construction ------------------------------------------------------------

def test_braid_forms_are_essentialized():
    a = load_arrangement([[1, -1, 0], [1, 0, -1], [0, 1, -1]])
    assert (a.n, a.r) == (3, 2)
    assert a.circuits() == [frozenset({0, 1, 2})]


def test_circle_arrangement():
    a = load_arrangement([[1]])
    assert (a.n, a.r) == (1, 1)


def test_construction_errors():
    with pytest.raises(ProportionalRows) as err:
        load_arrangement([[1, 0], [2, 0]])
    assert err.value.pair == (0, 1)
    with pytest.raises(ZeroRow):
        load_arrangement([[1, 0], [0, 0]])
    with pytest.raises(EmptyMatrix):
        load_arrangement([])


def test_cyclotomic_proportional_rows_detected():
    f = Field(3)
    z = f.zeta()
    with pytest.raises(ProportionalRows):
        load_arrangement([[1, z], [z, z * z]], field=f)


@pytest.mark.parametrize("name", sorted(SEED_MATRICES))
def test_essentialization_preserves_circuits(name):
    rows = SEED_MATRICES[name]
    # pad with a zero column and a duplicated column: the matroid must not change
    padded = [[0] + list(r) + [r[0]] for r in rows]
    a = load_arrangement(padded)
    assert a.r == oracles.rank(rows, range(len(rows)))
    assert a.circuits() == oracles.circuits(rows)


# -- rank and closure ----------------------------------------------------------

def test_rank_examples(braid3, u34):
    assert braid3.rank({0, 1, 2}) == 2
    assert braid3.rank(()) == 0
    assert all(u34.rank(c) == 3 for c in combinations(range(4), 3))


def test_closure_examples(braid3, u34):
    f = braid3.closure({0, 1})
    assert (f.elements, f.rank) == (frozenset({0, 1, 2}), 2)
    assert braid3.closure(()).elements == frozenset()
    assert u34.closure({0, 1}).elements == frozenset({0, 1})


@pytest.mark.parametrize("name", sorted(SEEDS))
def test_rank_against_sympy(name):
    a, rows = SEEDS[name], SEED_MATRICES[name]
    for s in subsets(a.n):
        assert a.rank(s) == oracles.rank(rows, s)


@pytest.mark.parametrize("name", sorted(SEEDS))
def test_rank_monotone_submodular(name):
    a = SEEDS[name]
    sets = list(subsets(a.n))
    rk = {s: a.rank(s) for s in sets}
    for s in sets:
        for t in sets:
            if s <= t:
                assert rk[s] <= rk[t]
            assert rk[s | t] + rk[s & t] <= rk[s] + rk[t]


@pytest.mark.parametrize("name", sorted(SEEDS))
def test_closure_axioms(name):
    a = SEEDS[name]
    for s in subsets(a.n):
        f = a.closure(s)
        assert s <= f.elements
        assert f.rank == a.rank(s) == a.rank(f.elements)
        assert a.closure(f.elements).elements == f.elements
        for e in range(a.n):
            assert a.closure(s | {e}).elements >= f.elements


# -- circuits and nbc ----------------------------------------------------------

def test_circuit_examples(braid3, u34):
    assert braid3.circuits() == [frozenset({0, 1, 2})]
    assert Arrangement([[1, 0], [0, 1]]).circuits() == []
    assert u34.circuits() == [frozenset({0, 1, 2, 3})]


@pytest.mark.parametrize("name", sorted(SEEDS))
def test_circuits_against_brute_force(name):
    a = SEEDS[name]
    circs = a.circuits()
    assert circs == oracles.circuits(SEED_MATRICES[name])
    assert circs == sorted(circs, key=sorted)
    for c in circs:
        assert len(c) <= a.r + 1
        assert all(a.is_independent(c - {x}) for x in c)
    for s in subsets(a.n):
        if not a.is_independent(s):
            assert any(c <= s for c in circs)


def test_broken_circuit_examples(braid3):
    assert braid3.broken_circuits(LinearOrder.identity(3)) == [frozenset({1, 2})]
    assert braid3.broken_circuits(LinearOrder([2, 1, 0])) == [frozenset({0, 1})]
    assert Arrangement([[1, 0], [0, 1]]).broken_circuits(LinearOrder.identity(2)) == []


def test_is_nbc_examples(braid3):
    ident = LinearOrder.identity(3)
    assert braid3.is_nbc({0, 1}, ident)
    assert not braid3.is_nbc({1, 2}, ident)
    assert braid3.is_nbc((), ident)


@pytest.mark.parametrize("name", sorted(SEEDS))
def test_is_nbc_matches_broken_circuits(name):
    a = SEEDS[name]
    for order in [LinearOrder.identity(a.n)] + random_orders(a.n, 3, seed=len(name)):
        bcs = a.broken_circuits(order)
        assert set(bcs) == oracles.broken_circuits(oracles.circuits(SEED_MATRICES[name]), order.seq)
        expect = {s for s in subsets(a.n) if not any(b <= s for b in bcs)}
        got = {s for s in subsets(a.n) if a.is_nbc(s, order)}
        assert got == expect
        listed = {frozenset(t) for p in range(a.r + 1) for t in a.nbc_sets(p, order)}
        assert listed == expect
        assert all(a.is_independent(s) for s in expect)


@pytest.mark.parametrize("name", sorted(SEEDS))
def test_nbc_counts_do_not_depend_on_order(name):
    a = SEEDS[name]
    ref = [len(a.nbc_sets(p, LinearOrder.identity(a.n))) for p in range(a.r + 1)]
    for order in random_orders(a.n, 12, seed=7):
        assert [len(a.nbc_sets(p, order)) for p in range(a.r + 1)] == ref


def test_nbc_within_uses_restricted_matroid(braid4):
    # broken circuits are taken from the circuits inside Q only
    order = LinearOrder.identity(6)
    for q in subsets(6):
        for s in subsets(6):
            if s <= q:
                restricted = [c for c in braid4.circuits() if c <= q]
                bcs = {c - {order.min(c)} for c in restricted}
                assert braid4.is_nbc(s, order, within=q) == (not any(b <= s for b in bcs))


# -- flats ---------------------------------------------------------------------

def test_flats_examples(braid3, u34):
    assert [f.elements for f in braid3.flats_by_rank(1)] == [frozenset({i}) for i in range(3)]
    top = braid3.flats_by_rank(2)
    assert len(top) == 1 and top[0].elements == frozenset(range(3))
    assert len(u34.flats_by_rank(3)) == 1


@pytest.mark.parametrize("name", sorted(SEEDS))
def test_flats_against_brute_force(name):
    a = SEEDS[name]
    closed = {}
    for s in subsets(a.n):
        f = a.closure(s)
        closed.setdefault(f.rank, set()).add(f.elements)
    for k in range(a.r + 1):
        flats = a.flats_by_rank(k)
        got = [f.elements for f in flats]
        assert len(got) == len(set(got))
        assert set(got) == closed[k]
        assert got == sorted(got, key=sorted)
        assert all(f.rank == k for f in flats)
        lazy = [f.elements for f in a.iter_flats(k)]
        assert len(lazy) == len(got) and set(lazy) == set(got)


def test_closed_subsets_examples(braid3, u34):
    got = {f.elements for f in u34.closed_subsets_within(range(4))}
    expect = {frozenset(c) for k in (1, 2) for c in combinations(range(4), k)} | {frozenset(range(4))}
    assert got == expect
    assert [f.elements for f in u34.closed_subsets_within({2})] == [frozenset({2})]
    got = {f.elements for f in braid3.closed_subsets_within(range(3))}
    assert got == {frozenset({0}), frozenset({1}), frozenset({2}), frozenset(range(3))}


@pytest.mark.parametrize("name", ["braid4", "nonfano", "mixed7", "pencil4+z"])
def test_closed_subsets_are_restriction_flats(name):
    a = SEEDS[name]
    for s in subsets(a.n):
        if not s:
            continue
        expect = {a.closure(t).elements & s for t in subsets(a.n) if t and t <= s}
        got = [f.elements for f in a.closed_subsets_within(s)]
        assert len(got) == len(set(got)) and set(got) == expect


def test_e6_rank_one_flats():
    assert len(build("weyl:E6").flats_by_rank(1)) == 36


def test_uniform_detection(u34, braid4):
    assert u34.is_uniform()
    assert not braid4.is_uniform()


def test_linear_order_parse():
    o = LinearOrder.parse("2,0,1", 3)
    assert o.seq == (2, 0, 1) and o.min({0, 1}) == 0 and o.min({0, 2}) == 2
    with pytest.raises(ValueError):
        LinearOrder.parse("0,0,1", 3)
    with pytest.raises(ValueError):
        LinearOrder.parse("0,1", 3)
