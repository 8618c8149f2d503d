import random

import pytest
from hypothesis import given

from zonotopal.algebras import hilbert, inverse_system
from zonotopal.apolarity import linear_form, sym_dim
from zonotopal.errors import LoopPresent
from zonotopal.exact import Mat, Rat
from zonotopal.fixtures import B2, DT, K3, U23
from zonotopal.matroid import independence_h_vector, matroid_of
from zonotopal.orlik_terao import (
    J_slices,
    Jminus_slices,
    K_generators,
    K_slices,
    bc_hilbert_oracle,
    circuit_form,
    direct_sum_report,
    dual_system_check,
    otbar_hilbert,
    ot_iso_witness,
    srbar_hilbert,
    verify_central,
    verify_hr_internal,
    verify_internal,
)
from zonotopal.apolarity import GradedSubspace
from zonotopal.space import ElementaryVector, elementary_vectors, gale_dual

from strategies import spaces

W = ("e1", "e2", "f1", "f2", "g1", "g2")


def wmono(*names):
    return tuple(int(x in names) for x in W)


def ev_with_support(a, labels):
    want = tuple(a.index(x) for x in labels)
    return next(ev for ev in elementary_vectors(a) if ev.support == want)


def test_circuit_forms_of_dt():
    dt = DT()
    ell = circuit_form(ev_with_support(dt, ["e1", "f1", "g1"]))
    assert ell.coeffs == {wmono("e1", "f1"): 1, wmono("e1", "g1"): 1, wmono("f1", "g1"): 1}
    ell_e = circuit_form(ev_with_support(dt, ["e1", "e2"]))
    assert ell_e.coeffs == {wmono("e1"): 1, wmono("e2"): 1}


def test_support_one_gives_a_constant():
    ev = ElementaryVector((Rat(0), Rat(5)), (1,))
    assert circuit_form(ev).coeffs == {(0, 0): 5}


def test_K_examples():
    k3 = K3()
    (g,) = K_generators(k3)
    assert g == {(2,): 3}
    ks = K_slices(k3)
    assert [ks[d].nrows for d in range(5)] == [0, 0, 1, 1, 1]
    assert otbar_hilbert(k3) == (1, 1)
    assert otbar_hilbert(DT()) == (1, 1)
    assert K_slices(B2())[0].nrows == 1
    assert otbar_hilbert(B2()) == ()
    assert otbar_hilbert(U23()) == (1,) == hilbert(U23(), -2)


def test_bc_oracle_examples():
    assert bc_hilbert_oracle(K3()) == (1, 1)
    assert bc_hilbert_oracle(DT()) == (1, 1)
    assert bc_hilbert_oracle(gale_dual(B2())) == (1,)
    with pytest.raises(LoopPresent):
        bc_hilbert_oracle(B2())


def test_J_examples():
    assert srbar_hilbert(K3()) == (1, 1, 1) == independence_h_vector(matroid_of(gale_dual(K3())))
    assert srbar_hilbert(B2()) == (1,)
    assert srbar_hilbert(U23()) == (1, 2)
    assert [J_slices(U23())[d].nrows for d in range(3)] == [0, 0, 3]


@pytest.mark.parametrize("a", [B2(), U23(), K3(), DT()], ids=["B2", "U23", "K3", "DT"])
def test_verifications_on_fixtures(a):
    assert verify_internal(a).passed
    assert verify_central(a).passed
    assert dual_system_check(a).passed


def test_central_quotients():
    assert srbar_hilbert(U23()) == hilbert(U23(), -1) == (1, 2)
    assert srbar_hilbert(K3()) == hilbert(K3(), -1) == (1, 1, 1)


def test_hr_internal():
    assert verify_hr_internal(DT(), [DT().labels]).passed
    from itertools import permutations
    assert verify_hr_internal(K3(), list(permutations(K3().labels))).passed
    assert verify_hr_internal(U23()).passed
    with pytest.raises(LoopPresent):
        verify_hr_internal(B2())


def test_dual_system_dimensions():
    rep = dual_system_check(DT())
    assert next(c for c in rep.checks if c.name == "E dims").lhs == (1, 1)
    rep = dual_system_check(U23())
    assert next(c for c in rep.checks if c.name == "D dims").lhs == (1, 2)
    rep = dual_system_check(B2())
    assert next(c for c in rep.checks if c.name == "E dims").lhs == ()


def test_witness_dt_sends_c_to_2w():
    dt = DT()
    (c,) = inverse_system(dt, -2)[1].data
    ell = dt.coords([Rat(x) for x in (1, 0, 1, 0, 1, 0)])
    c = [x / sum(y * z for y, z in zip(c, ell)) for x in c]
    w = linear_form(dt.chi(dt.index("e1")))
    assert ot_iso_witness(dt, 1, source=[linear_form(c)], target=[w]) == Mat.from_rows([[2]])


def test_witness_degree_zero_and_k3():
    for a in (DT(), K3(), U23()):
        assert ot_iso_witness(a, 0) == Mat.from_rows([[1]])
    m = ot_iso_witness(K3(), 1)
    assert m.shape == (1, 1) and m[0, 0] != 0
    with pytest.raises(ValueError):
        ot_iso_witness(DT(), 1, source=[{(1, 0, 0, 0): Rat(1)}])


def test_direct_sum_report_detects_failure():
    sub = GradedSubspace(1, (Mat.identity(1), Mat.identity(1)))
    ideal = GradedSubspace(1, (Mat(0, 1, ()), Mat.identity(1)), full_tail=True)
    rep = direct_sum_report("bad", sub, ideal)
    assert not rep.passed
    assert [c.name for c in rep.failures()][:2] == ["deg 1 dim", "deg 1 meet"]


@given(spaces(max_n=5))
def test_theorems_on_random_spaces(a):
    assert verify_internal(a).passed
    assert verify_central(a).passed
    assert otbar_hilbert(a) == hilbert(a, -2)
    assert srbar_hilbert(a) == hilbert(a, -1)
    if not matroid_of(gale_dual(a)).loops():
        rng = random.Random(1)
        for _ in range(5):
            order = list(a.labels)
            rng.shuffle(order)
            assert bc_hilbert_oracle(a, order) == otbar_hilbert(a)
        assert verify_hr_internal(a).passed


@given(spaces(max_n=5, max_r=3))
def test_dual_systems_on_random_spaces(a):
    assert dual_system_check(a).passed


@given(spaces(max_n=5))
def test_K_is_an_ideal_of_finite_colength(a):
    ks = K_slices(a)
    top = len(ks.slices) - 1
    assert ks[top].nrows == sym_dim(a.r, top)
    for d in range(top):
        # multiplying by each variable keeps us inside the next slice
        from zonotopal.apolarity import ideal_degree_piece
        assert ideal_degree_piece(ks.basis_polys(d), d + 1, a.r).nrows <= ks[d + 1].nrows
