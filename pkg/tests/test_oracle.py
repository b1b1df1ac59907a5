import math

import numpy as np
import pytest

from rootcount.oracle import (BudgetExceeded, MatrixElement, count_mth_roots,
                              count_split_roots, element_order, element_orders,
                              enumerate_group, form_spec, get_field, order_census,
                              quadratic_modulus, smallest_nonsquare)
from rootcount.qseries import group_order


def test_enumerate_examples():
    assert len(enumerate_group("gl", 2, 3)) == 48
    assert len(enumerate_group("sp", 2, 3)) == 24
    assert len(enumerate_group("o-", 2, 3)) == 8


def test_members_satisfy_predicates():
    for family, n, q in [("sp", 2, 5), ("o+", 2, 5), ("o-", 2, 5), ("o-odd", 3, 3)]:
        G = enumerate_group(family, n, q)
        J = form_spec(family, n, q).array
        A = G.elements
        lhs = (np.transpose(A, (0, 2, 1)) @ J @ A) % q
        assert np.all(lhs == J)
    G = enumerate_group("u", 2, 3)
    F = G.field
    Pi = np.array([[0, 1], [1, 0]])
    conjT = np.transpose(F.conj[G.elements], (0, 2, 1))
    assert np.all(F.matmul(F.matmul(G.elements, np.broadcast_to(Pi, G.elements.shape)), conjT)
                  == Pi)


def test_enumeration_is_exhaustive_for_small_cases():
    # full odometer filter without pruning, as an independent recount
    import itertools
    q = 3
    J = form_spec("o-", 2, q).array
    count = 0
    for entries in itertools.product(range(q), repeat=4):
        A = np.array(entries).reshape(2, 2)
        if np.all((A.T @ J @ A) % q == J):
            count += 1
    assert count == len(enumerate_group("o-", 2, q)) == 8


def test_forms():
    assert form_spec("sp", 2, 3).matrix == ((0, 1), (2, 0))
    assert form_spec("o+", 4, 3).array.tolist() == [[0, 0, 0, 1], [0, 0, 1, 0],
                                                    [0, 1, 0, 0], [1, 0, 0, 0]]
    # J_- with delta = 2 over F_3: diag(1, -2) = diag(1, 1)
    assert form_spec("o-", 2, 3).matrix == ((1, 0), (0, 1))
    assert form_spec("o-odd", 3, 5).array.tolist() == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
    assert smallest_nonsquare(3) == 2 and smallest_nonsquare(7) == 3
    assert quadratic_modulus(3) == 2  # t^2 + t + 2 over F_3


@pytest.mark.parametrize("p", [3, 5, 7])
def test_quadratic_field_axioms(p):
    F = get_field(p, 2)
    els = np.arange(F.size)
    assert np.all(F.mul == F.mul.T) and np.all(F.add == F.add.T)
    # every nonzero element has an inverse
    assert all((F.mul[x] == 1).sum() == 1 for x in range(1, F.size))
    a, b, c = np.meshgrid(els, els, els, indexing="ij")
    assert np.all(F.mul[a, F.add[b, c]] == F.add[F.mul[a, b], F.mul[a, c]])
    # conjugation is an involutive automorphism fixing exactly F_p
    assert np.all(F.conj[F.conj] == els)
    assert np.all(F.add[els, F.neg] == 0)
    assert np.all(F.mul[els[1:], F.inv[1:]] == 1)
    assert np.all(F.conj[F.mul] == F.mul[F.conj[:, None], F.conj[None, :]])
    assert sorted(np.nonzero(F.conj == els)[0]) == list(range(p))


def test_count_examples():
    assert count_mth_roots("gl", 1, 7, 3) == 3
    assert count_mth_roots("u", 2, 3, 4) == 40
    assert count_mth_roots("o+", 2, 3, 2) == 4


@pytest.mark.parametrize("family, n, q", [("gl", 2, 3), ("sp", 2, 3), ("u", 2, 3),
                                          ("o-", 2, 3), ("o-odd", 3, 3)])
def test_count_trivial_and_exponent(family, n, q):
    census = order_census(family, n, q)
    exponent = math.lcm(*census)
    assert count_mth_roots(family, n, q, 1) == 1
    assert count_mth_roots(family, n, q, exponent) == group_order(family, n, q)
    for M in range(1, 13):
        for k in (2, 3):
            assert count_mth_roots(family, n, q, M) <= count_mth_roots(family, n, q, M * k)


def test_element_order_examples():
    F = get_field(3)
    assert element_order(MatrixElement.from_array(F, np.eye(2))) == 1
    assert element_order(MatrixElement.from_array(F, [[1, 1], [0, 1]])) == 3
    assert element_order(MatrixElement.from_array(F, [[0, 2], [1, 0]])) == 4  # x^2 + 1


def test_batch_orders_match_iteration():
    G = enumerate_group("sp", 2, 5)
    fast = element_orders(G)
    assert [element_order(G[i]) for i in range(len(G))] == list(fast)


def test_split_examples():
    # census of SL_2(3): orders 1, 2, 3, 4, 6 with counts 1, 1, 8, 6, 8
    assert order_census("sp", 2, 3) == {1: 1, 2: 1, 3: 8, 4: 6, 6: 8}
    s = count_split_roots("sp", 2, 3, 12)
    assert (s.semisimple, s.unipotent, s.mixed) == (8, 8, 8) and s.total == 24
    s = count_split_roots("gl", 2, 3, 2)
    assert (s.semisimple, s.unipotent, s.mixed) == (14, 0, 0)
    for q in (3, 5, 7):
        for M in (1, 2, 3, 6, 12):
            s = count_split_roots("gl", 1, q, M)
            assert (s.semisimple, s.unipotent, s.mixed) == (math.gcd(M, q - 1), 0, 0)


@pytest.mark.parametrize("family, n, q", [("gl", 2, 3), ("gl", 3, 3), ("sp", 2, 5), ("u", 2, 3)])
def test_split_sums(family, n, q):
    for M in (2, 3, 4, 6, 12, 24):
        s = count_split_roots(family, n, q, M)
        assert s.total == count_mth_roots(family, n, q, M)
        if M % q:
            assert s.unipotent == s.mixed == 0


def test_unipotent_census():
    for n in (1, 2, 3):
        census = order_census("gl", n, 3)
        assert sum(c for o, c in census.items() if o in (1, 3, 9, 27)) == 3 ** (n * (n - 1))
    census = order_census("sp", 2, 3)
    assert census[1] + census[3] == 9


def test_budget(monkeypatch):
    with pytest.raises(BudgetExceeded):
        enumerate_group("gl", 3, 3, budget=1000)
    monkeypatch.setenv("ROOTCOUNT_BUDGET", "100")
    with pytest.raises(BudgetExceeded):
        enumerate_group("gl", 2, 5)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        enumerate_group("gl", 2, 4)
    with pytest.raises(ValueError):
        enumerate_group("o-sum", 2, 3)


def test_parallel_jobs_agree():
    serial = enumerate_group("sp", 2, 5)
    parallel = enumerate_group("sp", 2, 5, jobs=3)
    assert np.array_equal(serial.elements, parallel.elements)
    assert count_mth_roots("sp", 2, 5, 4, jobs=2) == count_mth_roots("sp", 2, 5, 4)
