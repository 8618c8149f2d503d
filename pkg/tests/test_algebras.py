from itertools import product

import pytest
from hypothesis import given

from zonotopal.algebras import (
    KIND_K,
    deformed_internal,
    deformed_internal_dims,
    hilbert,
    inverse_system,
    random_alpha_audit,
    total_checks,
)
from zonotopal.apolarity import annihilator_degree, sym_dim
from zonotopal.errors import CostGuard, KOutOfRange
from zonotopal.exact import Mat, Rat, kernel_basis, row_space_contains
from zonotopal.fixtures import B2, DT, K3, U23
from zonotopal.matroid import counts, independence_h_vector, matroid_of
from zonotopal.space import elementary_vectors, gale_dual, rho, supports_brute_force

from strategies import spaces


def brute_dims(a, k, box=1):
    """Impose alpha^(|supp alpha| + k + 1) on a wide family of alpha in L.

    The family is every ``t . basis`` with entries of ``t`` in ``[-box, box]``
    plus one vector for each minimal support found by subset search, so it
    does not rely on the dual matroid or on the library's elementary vectors.
    """
    ts = [t for t in product(range(-box, box + 1), repeat=a.r) if any(t)]
    for s in supports_brute_force(a):
        off = [j for j in range(a.n) if j not in s]
        ts.append(kernel_basis(a.basis.columns(off).transpose()).row(0))
    cons = [(t, sum(1 for x in a.vector(t) if x) + k + 1) for t in ts]
    dims = []
    for d in range(a.r * (a.n + k + 1) + 2):
        n = annihilator_degree(cons, d, a.r).nrows
        if n == 0:
            break
        dims.append(n)
    return tuple(dims)


def test_inverse_system_examples():
    assert hilbert(K3(), 0) == (1, 1, 1, 1)
    assert hilbert(B2(), -2) == ()
    dt = DT()
    assert hilbert(dt, -2) == (1, 1)
    (c,) = inverse_system(dt, -2)[1].data
    # c pairs to 0 with l_e, l_f, l_g and to something nonzero with l
    def pair(vec):
        t = dt.coords([Rat(x) for x in vec])
        return sum(x * y for x, y in zip(c, t))
    assert [pair(v) for v in ([1, 1, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0], [0, 0, 0, 0, 1, 1])] == [0, 0, 0]
    assert pair([1, 0, 1, 0, 1, 0]) != 0


def test_hilbert_examples():
    u = U23()
    assert hilbert(u, -1) == (1, 2)
    assert hilbert(u, 0) == (1, 2, 3, 1)
    assert hilbert(u, -2) == (1,)
    for k in (-2, -1, 0):
        assert hilbert(u, k) == brute_dims(u, k)


def test_k_range():
    with pytest.raises(KOutOfRange):
        hilbert(K3(), 1)
    with pytest.raises(KOutOfRange):
        hilbert(K3(), -(rho(K3()) + 2))
    assert hilbert(K3(), -4) == ()
    assert hilbert(gale_dual(B2()), -7) == (1,)


def test_total_examples():
    r = total_checks(K3())
    assert r.passed and r.checks[2].lhs == 4
    assert [c.lhs for c in total_checks(U23()).checks] == [1, 3, 7]
    assert total_checks(DT()).checks[0].lhs == 2


@pytest.mark.parametrize("a,k", [(B2(), 0), (U23(), -1), (DT(), -2)])
def test_audit_examples(a, k):
    assert random_alpha_audit(a, k, trials=100, seed=7)


def test_audit_catches_a_wrong_system():
    from zonotopal.errors import AuditFailure
    from zonotopal.apolarity import GradedSubspace
    import zonotopal.algebras as alg

    a = U23()
    fake = GradedSubspace(2, (Mat.identity(1), Mat.identity(2)))
    real = alg.inverse_system
    alg.inverse_system = lambda *_: fake
    try:
        with pytest.raises(AuditFailure):
            random_alpha_audit(a, -2, trials=20, seed=0)
    finally:
        alg.inverse_system = real


def test_deformed_examples():
    assert deformed_internal_dims(B2(), 3) == (0, 0, 0, 0)
    assert deformed_internal_dims(U23(), 3) == (1, 1, 1, 1)
    assert deformed_internal_dims(DT(), 3) == (1, 3, 5, 7)
    assert deformed_internal(DT(), 3).passed
    with pytest.raises(CostGuard):
        deformed_internal_dims(U23(), 9)


@given(spaces(max_n=5, max_r=3))
def test_against_all_small_alpha(a):
    for k in (-2, -1, 0):
        assert hilbert(a, k) == brute_dims(a, k)


@given(spaces(max_n=6))
def test_slices_grow_with_k(a):
    for k in (-2, -1):
        lo, hi = inverse_system(a, k), inverse_system(a, k + 1)
        for d, s in enumerate(lo.slices):
            piv = [next(j for j, x in enumerate(r) if x) for r in hi[d].data]
            assert all(row_space_contains(hi[d], piv, row) for row in s.data)


@given(spaces(max_n=6))
def test_totals_and_central_h_vector(a):
    assert total_checks(a).passed
    dual = matroid_of(gale_dual(a))
    if not dual.loops():
        assert hilbert(a, -1) == independence_h_vector(dual)
    assert sum(hilbert(a, -1)) == counts(dual)[0]


@given(spaces(max_n=5))
def test_stopping_is_sound(a):
    # past the first zero slice nothing comes back, checked a few degrees further
    for k in (-2, -1, 0):
        top = len(hilbert(a, k))
        cons = [(a.coords(ev.coeffs), ev.m + k + 1) for ev in elementary_vectors(a)]
        for d in range(top, top + 3):
            assert annihilator_degree(cons, d, a.r).nrows == 0


@given(spaces(max_n=5, max_r=2))
def test_deformed_convolution(a):
    assert deformed_internal(a, 3).passed
