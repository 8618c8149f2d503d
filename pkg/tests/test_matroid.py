import random
from itertools import combinations

import pytest
from hypothesis import given

from zonotopal.errors import GroundTooLarge, LoopPresent
from zonotopal.exact import Mat
from zonotopal.fixtures import B2, DT, K3, U23, uniform
from zonotopal.matroid import (
    Matroid,
    broken_circuit_h_vector,
    broken_circuits,
    circuits,
    counts,
    evaluate,
    flats,
    independence_h_vector,
    matroid_of,
    tutte,
)
from zonotopal.space import gale_dual

from strategies import spaces


def U(r, n):
    return matroid_of(uniform(r, n))


def sets(m, family):
    return {frozenset(m.labels_of(s)) for s in family}


def test_matroid_of_examples():
    u = matroid_of(U23())
    assert u.full_rank == 2
    assert all(u.is_independent(p) for p in combinations(range(3), 2))
    k = matroid_of(K3())
    assert k.full_rank == 1 and not k.loops()
    b = matroid_of(B2())
    assert b.is_independent({0, 1})


def test_circuit_examples():
    assert sets(U(2, 3), circuits(U(2, 3))) == {frozenset("123")}
    assert sets(U(1, 3), circuits(U(1, 3))) == {frozenset("12"), frozenset("13"), frozenset("23")}
    assert circuits(matroid_of(B2())) == []


def test_flat_examples():
    lat = flats(U(1, 3))
    assert len(lat.flats) == 2 and lat.mobius_to_top[frozenset()] == -1
    lat = flats(U(2, 3))
    assert len(lat.flats) == 5
    assert lat.mobius_to_top[frozenset()] == 2
    assert all(lat.mobius_to_top[frozenset([i])] == -1 for i in range(3))
    assert flats(matroid_of(B2())).mobius_to_top[frozenset()] == 1


def test_count_examples():
    assert counts(U(2, 3)) == (3, 7, 4)
    assert counts(U(1, 3)) == (3, 4, 7)
    assert counts(matroid_of(B2())) == (1, 4, 1)


def test_tutte_examples():
    assert tutte(U(2, 3)) == {(2, 0): 1, (1, 0): 1, (0, 1): 1}
    coloop = Matroid(["a"], Mat.from_rows([[1]]))
    loop = Matroid(["a"], Mat.from_rows([[0]]))
    assert tutte(coloop) == {(1, 0): 1}
    assert tutte(loop) == {(0, 1): 1}


def test_h_vector_examples():
    assert broken_circuit_h_vector(U(2, 3), ["1", "2", "3"]) == (1, 1)
    assert broken_circuit_h_vector(U(1, 3)) == (1,)
    assert broken_circuit_h_vector(matroid_of(B2())) == (1,)
    assert independence_h_vector(U(1, 3)) == (1, 2)
    assert independence_h_vector(U(2, 3)) == (1, 1, 1)
    assert independence_h_vector(matroid_of(B2())) == (1,)
    with pytest.raises(LoopPresent):
        independence_h_vector(matroid_of(gale_dual(B2())))
    with pytest.raises(LoopPresent):
        broken_circuit_h_vector(matroid_of(gale_dual(B2())))


def test_broken_circuits_drop_the_minimum():
    m = U(2, 3)
    assert sets(m, broken_circuits(m, ["3", "1", "2"])) == {frozenset("12")}


def test_enumeration_guard(monkeypatch):
    monkeypatch.setenv("ZONOTOPAL_MAX_N", "2")
    with pytest.raises(GroundTooLarge):
        counts(U(1, 3))
    with pytest.raises(GroundTooLarge):
        tutte(U(1, 3))


def test_graph_counts():
    # K4: 16 spanning trees; the dual of K3's cycle matroid counts connected spanning subgraphs
    from zonotopal.fixtures import K4
    assert counts(matroid_of(K4("graphical")))[0] == 16
    assert counts(matroid_of(gale_dual(K3())))[2] == 4
    assert counts(matroid_of(gale_dual(DT())))[0] == 12


@given(spaces(max_n=6))
def test_rank_axioms(a):
    m = matroid_of(a)
    assert m.rank([]) == 0 and m.full_rank == a.r
    rng = random.Random(a.n)
    for _ in range(10):
        s = frozenset(j for j in range(a.n) if rng.random() < 0.5)
        t = frozenset(j for j in range(a.n) if rng.random() < 0.5)
        assert m.rank(s | t) + m.rank(s & t) <= m.rank(s) + m.rank(t)
        assert m.rank(s & t) <= m.rank(s) <= len(s)


@given(spaces(max_n=6))
def test_circuit_axioms(a):
    m = matroid_of(a)
    cs = circuits(m)
    for c in cs:
        assert not m.is_independent(c)
        assert all(m.is_independent(c - {e}) for e in c)
    for c1, c2 in combinations(cs, 2):
        assert not c1 <= c2
        for e in c1 & c2:
            assert any(c <= (c1 | c2) - {e} for c in cs)


@given(spaces(max_n=6))
def test_counts_match_tutte(a):
    m = matroid_of(a)
    t = tutte(m)
    nb, ni, ns = counts(m)
    assert (evaluate(t, 1, 1), evaluate(t, 2, 1), evaluate(t, 1, 2)) == (nb, ni, ns)
    assert evaluate(t, 2, 2) == 2 ** a.n
    td = tutte(matroid_of(gale_dual(a)))
    assert td == {(j, i): c for (i, j), c in t.items()}


@given(spaces(max_n=6))
def test_mobius_recursion_and_spanning(a):
    m = matroid_of(a)
    lat = flats(m)
    top = frozenset(range(a.n))
    assert top in lat.flats
    assert (frozenset() in lat.flats) == (not m.loops())
    for f in lat.flats:
        total = sum(lat.mobius_to_top[g] for g in lat.flats if f <= g)
        assert total == (1 if f == top else 0)
    if not m.loops():
        s = sum(lat.mobius_to_top[f] * 2 ** len(f) for f in lat.flats)
        assert s == counts(m)[2]


@given(spaces(max_n=6))
def test_broken_circuit_h_vector_ignores_ordering(a):
    m = matroid_of(a)
    if m.loops():
        return
    base = broken_circuit_h_vector(m)
    rng = random.Random(0)
    for _ in range(5):
        order = list(a.labels)
        rng.shuffle(order)
        assert broken_circuit_h_vector(m, order) == base
    # h(1) counts NBC bases, which is |mu(empty, E)|
    assert sum(base) == abs(flats(m).mobius_to_top[frozenset()])
    assert sum(independence_h_vector(m)) == counts(m)[0]
