import math

import pytest
from hypothesis import given, strategies as st

from rootcount.numtheory import (LINEAR, PAIRED, SELF_CONJUGATE, SELF_DUAL, GroupFamily,
                                 classify_divisors, divisors, euler_phi, linear_slots,
                                 min_negation_exponent, mult_order, split_root_problem)


@pytest.mark.parametrize("M, q, t, r, p", [(12, 3, 4, 1, 3), (7, 13, 7, 0, 13), (27, 9, 1, 3, 3)])
def test_split_root_problem(M, q, t, r, p):
    rp = split_root_problem(M, q)
    assert (rp.t, rp.r, rp.p) == (t, r, p)
    assert rp.t * rp.p ** rp.r == M


@pytest.mark.parametrize("M, q", [(4, 8), (4, 2), (0, 3), (3, 6)])
def test_split_root_problem_rejects(M, q):
    with pytest.raises(ValueError):
        split_root_problem(M, q)


def test_mult_order_examples():
    assert mult_order(3, 8) == 2
    assert mult_order(3, 5) == 4
    assert mult_order(13, 7) == 2
    assert mult_order(3, 1) == mult_order(3, 2) == 1
    with pytest.raises(ValueError):
        mult_order(3, 6)


def test_min_negation_examples():
    assert min_negation_exponent(3, 5) == 2
    assert min_negation_exponent(3, 8) is None
    assert min_negation_exponent(3, 7) == 3
    assert min_negation_exponent(5, 1) == min_negation_exponent(5, 2) == 1


def brute_negation(q, d):
    for s in range(1, d + 1):
        if (pow(q, s, d) + 1) % d == 0:
            return s
    return None


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13])
def test_negation_exponent_against_scan(q):
    for d in range(1, 201):
        if math.gcd(q, d) != 1:
            continue
        s = min_negation_exponent(q, d)
        assert s == brute_negation(q, d)
        e = mult_order(q, d)
        assert pow(q, e, d) == 1 % d
        assert all(pow(q, k, d) != 1 % d for k in range(1, e))
        if s is not None and d > 2:
            assert e == 2 * s
            assert (q ** s + 1) % d == 0


def test_divisors_and_phi():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert [euler_phi(n) for n in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]


def test_classify_sp_4_3():
    cl = classify_divisors(4, 3, GroupFamily.SP)
    assert [(c.d, c.kind, c.sign) for c in cl] == [(1, LINEAR, 1), (2, LINEAR, -1), (4, SELF_DUAL, 0)]
    assert cl[2].e == 2 and cl[2].factor_count == 1 and cl[2].base == 3


def test_classify_u_8_3():
    cl = classify_divisors(8, 3, GroupFamily.U)
    assert [(c.d, c.kind, c.degree, c.factor_count) for c in cl] == [
        (1, LINEAR, 1, 1), (2, LINEAR, 1, 1), (4, SELF_CONJUGATE, 1, 2), (8, PAIRED, 1, 2)]
    assert cl[3].base == 9 and cl[3].block_dim == 2


def test_classify_gl_7_3():
    cl = classify_divisors(7, 3, GroupFamily.GL)
    assert [(c.d, c.degree, c.factor_count) for c in cl] == [(1, 1, 1), (7, 6, 1)]


def test_classify_rejects_non_coprime():
    with pytest.raises(ValueError):
        classify_divisors(6, 3, GroupFamily.GL)


@given(st.sampled_from([3, 5, 7, 9, 11, 13, 25, 27]), st.integers(1, 400),
       st.sampled_from(list(GroupFamily)))
def test_classification_invariants(q, t, family):
    if math.gcd(q, t) != 1:
        return
    cl = classify_divisors(t, q, family)
    assert [c.d for c in cl] == divisors(t)
    # every root of x^t - 1 is covered exactly once
    assert sum(c.factor_count * c.block_dim for c in cl) == t
    assert linear_slots(cl) == (2 if t % 2 == 0 else 1)
    for c in cl:
        if c.kind == SELF_DUAL:
            assert c.e == 2 * min_negation_exponent(q, c.d)
        if c.kind == SELF_CONJUGATE:
            assert c.degree % 2 == 1 and mult_order(q * q, c.d) == c.degree
        if c.kind == PAIRED and family is GroupFamily.U:
            assert c.degree == mult_order(q * q, c.d)
        if c.kind == PAIRED and family.is_self_dual_type:
            assert c.degree == c.e
