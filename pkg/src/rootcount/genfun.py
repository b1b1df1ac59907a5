"""Generating functions for M-th roots of identity in classical groups.

Each divisor d of the prime-to-p part t of M contributes one factor series
per irreducible factor (or pair of factors) of the cyclotomic polynomial Q_d;
the eigenvalue +-1 factors carry the signed-partition sums for Sp and O.
All series are graded by matrix dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List, Tuple, Union

from .numtheory import (LINEAR, SELF_CONJUGATE, SELF_DUAL, DivisorClass, GroupFamily,
                        classify_divisors, split_root_problem)
from .partitions import (ORTHOGONAL, SYMPLECTIC, Partition, SignedPartition, c_gl,
                         c_signed, c_unitary, gen_partitions, gen_signed)
from .qseries import (Series, geometric_series, group_order, order_gl, order_o,
                      order_sp, order_u, product, series_pow)

MAX_SERIES_DIM = 40
MAX_ENUM_DIM = 8

SERIES_FAMILIES = (GroupFamily.GL, GroupFamily.U, GroupFamily.SP, GroupFamily.ORTHO_SUM)


def _check_family(family, allowed) -> GroupFamily:
    family = GroupFamily(family)
    if family not in allowed:
        names = ", ".join(f.value for f in allowed)
        raise ValueError(f"family {family.value} not supported here (use one of {names})")
    return family


def _check_trunc(N: int):
    if not 0 <= N <= MAX_SERIES_DIM:
        raise ValueError(f"max dimension must lie in [0, {MAX_SERIES_DIM}], got {N}")


def _coprime(q: int, M: int):
    if math.gcd(q, M) != 1:
        raise ValueError(f"gcd(M={M}, q={q}) != 1: semisimple counts need M prime to q")


def _signed_kind(family: GroupFamily) -> str:
    return SYMPLECTIC if family is GroupFamily.SP else ORTHOGONAL


def block_options(cls: DivisorClass, bound: int, max_dim: int):
    """(dimension, label, centralizer) for every nonempty block of this factor.

    Partitions are restricted to parts <= bound (unipotent order <= p^r).
    """
    out = []
    if cls.kind == LINEAR and cls.family.is_self_dual_type:
        kind = _signed_kind(cls.family)
        for k in range(1, max_dim + 1):
            for lam in gen_signed(kind, k, max_part=bound):
                out.append((k, lam, c_signed(kind, lam, cls.q)))
        return out
    bd = cls.block_dim
    for k in range(1, max_dim // bd + 1):
        for lam in gen_partitions(k, max_part=bound):
            c = c_unitary(lam, cls.base) if cls.unitary else c_gl(lam, cls.base)
            out.append((k * bd, lam, Fraction(c)))
    return out


def _full_factor(cls: DivisorClass, bound: int, N: int) -> Series:
    terms = [(0, 1)] + [(dim, 1 / c) for dim, _, c in block_options(cls, bound, N)]
    return Series.from_terms(terms, N)


def _semisimple_factor(cls: DivisorClass, N: int) -> Series:
    """Semisimple factor written with closed group orders only."""
    q, fam = cls.q, cls.family
    terms = [(0, Fraction(1))]
    if cls.kind == LINEAR:
        if fam is GroupFamily.GL:
            terms += [(k, Fraction(1, order_gl(k, q))) for k in range(1, N + 1)]
        elif fam is GroupFamily.U:
            terms += [(k, Fraction(1, order_u(k, q))) for k in range(1, N + 1)]
        elif fam is GroupFamily.SP:
            terms += [(2 * k, Fraction(1, order_sp(2 * k, q))) for k in range(1, N // 2 + 1)]
        else:
            # both even types, plus twice the odd group with |O_{2k+1}| = 2|Sp_{2k}|
            terms += [(2 * k, Fraction(1, order_o(2 * k, q, 1)) + Fraction(1, order_o(2 * k, q, -1)))
                      for k in range(1, N // 2 + 1)]
            terms += [(2 * k + 1, Fraction(1, order_sp(2 * k, q))) for k in range(0, (N - 1) // 2 + 1)]
    elif cls.kind in (SELF_DUAL, SELF_CONJUGATE):
        bd = cls.block_dim
        terms += [(k * bd, Fraction(1, order_u(k, cls.base))) for k in range(1, N // bd + 1)]
    else:
        bd = cls.block_dim
        terms += [(k * bd, Fraction(1, order_gl(k, cls.base))) for k in range(1, N // bd + 1)]
    return Series.from_terms(terms, N)


def gf_root_proportion(family, q: int, M: int, N: int, semisimple_only: bool = False) -> Series:
    """Coefficient n: proportion of M-th roots of identity in the dimension-n group.

    For ORTHO_SUM the coefficient is a+/|O+| + a-/|O-| at even n and 2a/|O| at
    odd n.  With semisimple_only the series counts semisimple M-th roots only
    and is assembled from closed group orders.
    """
    family = _check_family(family, SERIES_FAMILIES)
    _check_trunc(N)
    rp = split_root_problem(M, q)
    classes = classify_divisors(rp.t, q, family)
    if semisimple_only:
        factors = [_semisimple_factor(c, N) for c in classes]
    else:
        factors = [_full_factor(c, rp.unipotent_bound, N) for c in classes]
    return product([series_pow(f, c.factor_count) for f, c in zip(factors, classes)], N)


def gf_ortho_diff_ss(q: int, M: int, N: int) -> Series:
    """Coefficient 2k: b+_k - b-_k for semisimple M-th roots in O+-_{2k}(q)."""
    _check_trunc(N)
    _coprime(q, M)
    split_root_problem(M, q)
    classes = classify_divisors(M, q, GroupFamily.ORTHO_SUM)
    factors = []
    for cls in classes:
        if cls.kind == LINEAR:
            f = Series.from_terms(
                [(0, 1)] + [(2 * k, Fraction(1, order_o(2 * k, q, 1)) - Fraction(1, order_o(2 * k, q, -1)))
                            for k in range(1, N // 2 + 1)], N)
        elif cls.kind == SELF_DUAL:
            bd = cls.block_dim
            f = Series.from_terms(
                [(0, 1)] + [(k * bd, Fraction((-1) ** k, order_u(k, cls.base)))
                            for k in range(1, N // bd + 1)], N)
        else:
            f = _semisimple_factor(cls, N)
        factors.append(series_pow(f, cls.factor_count))
    return product(factors, N)


def gf_root_classes(family, q: int, M: int, N: int) -> Series:
    """Number of semisimple conjugacy classes of M-th roots, by dimension."""
    family = _check_family(family, (GroupFamily.GL, GroupFamily.SP, GroupFamily.U))
    _check_trunc(N)
    _coprime(q, M)
    split_root_problem(M, q)
    factors = []
    for cls in classify_divisors(M, q, family):
        step = 2 if (cls.kind == LINEAR and family is GroupFamily.SP) else cls.block_dim
        factors.append(series_pow(geometric_series(step, N), cls.factor_count))
    return product(factors, N)


def gf_unipotent_bounded(s: int, N: int) -> Series:
    """prod_{t=1}^{s} 1/(1 - z^t): partitions with parts <= s."""
    if s < 1:
        raise ValueError("part bound must be >= 1")
    return product([geometric_series(t, N) for t in range(1, s + 1)], N)


# ---------------------------------------------------------------- class data

Label = Union[Partition, SignedPartition]


@dataclass(frozen=True)
class ClassDatum:
    """One conjugacy class: (divisor index, factor copy, partition) per block."""
    assignment: Tuple[Tuple[int, int, Label], ...]
    centralizer: int
    dimension: int


def enumerate_root_classes(family, q: int, M: int, n: int) -> List[ClassDatum]:
    """Class data of M-th roots in dimension n with exact centralizer orders.

    ORTHO_SUM lists the data of O+ and O- together (both odd forms at odd n),
    so there the sum of 1/centralizer equals the o-sum series coefficient.
    """
    family = _check_family(family, (GroupFamily.GL, GroupFamily.SP, GroupFamily.U,
                                    GroupFamily.ORTHO_SUM))
    if not 0 <= n <= MAX_ENUM_DIM:
        raise ValueError(f"dimension must lie in [0, {MAX_ENUM_DIM}], got {n}")
    rp = split_root_problem(M, q)
    classes = classify_divisors(rp.t, q, family)
    slots = []
    for i, cls in enumerate(classes):
        opts = block_options(cls, rp.unipotent_bound, n)
        for copy in range(cls.factor_count):
            slots.append((i, copy, opts))
    out: List[ClassDatum] = []

    def walk(k, remaining, chosen, cent):
        if k == len(slots):
            if remaining == 0:
                assert cent.denominator == 1, cent
                out.append(ClassDatum(tuple(chosen), int(cent), n))
            return
        walk(k + 1, remaining, chosen, cent)
        i, copy, opts = slots[k]
        for dim, lam, c in opts:
            if dim <= remaining:
                walk(k + 1, remaining - dim, chosen + [(i, copy, lam)], cent * c)

    walk(0, n, [], Fraction(1))
    return out


def class_data_total(family, q: int, M: int, n: int) -> Fraction:
    """Sum of 1/centralizer over the class data: the proportion of M-th roots."""
    return sum((Fraction(1, d.centralizer) for d in enumerate_root_classes(family, q, M, n)),
               Fraction(0))


def class_data_count(family, q: int, M: int, n: int) -> int:
    """Number of M-th roots, as sum of class sizes |G|/centralizer."""
    family = GroupFamily(family)
    if family is GroupFamily.ORTHO_SUM:
        raise ValueError("o-sum mixes two groups; use class_data_total")
    total = class_data_total(family, q, M, n) * group_order(family, n, q)
    assert total.denominator == 1, total
    return int(total)


# ---------------------------------------------------------------- prime case

def _is_prime(n: int) -> bool:
    return n > 1 and all(n % k for k in range(2, math.isqrt(n) + 1))


def _power_coefficient(f, K: int, c: int) -> Fraction:
    """[w^K] (sum_k f(k) w^k)^c with f(0) = 1, via multinomial expansion."""
    total = Fraction(0)
    for lam in gen_partitions(K, max_len=c):
        ways = factorial(c) // factorial(c - len(lam))
        term = Fraction(1)
        for part, m in lam.multiplicities.items():
            ways //= factorial(m)
            term *= f(part) ** m
        total += ways * term
    return total


def closed_form_prime_case(family, n: int, q: int, M: int) -> Fraction:
    """Proportion of M-th roots in GL_n(q) or Sp_n(q) for M an odd prime, q = -1 mod M.

    x^M - 1 = (x - 1) Q_M(x) and Q_M splits into (M-1)/2 quadratics over F_q,
    each self-reciprocal (q = -1 mod M), so every root is semisimple.
    """
    family = _check_family(family, (GroupFamily.GL, GroupFamily.SP))
    if not (_is_prime(M) and M > 2):
        raise ValueError(f"M={M} must be an odd prime")
    if q % M != M - 1:
        raise ValueError(f"need q = -1 mod M, got q={q}, M={M}")
    split_root_problem(M, q)
    c = (M - 1) // 2
    if family is GroupFamily.GL:
        f = lambda k: Fraction(1, order_gl(k, q * q))
        return sum((Fraction(1, order_gl(j, q)) * _power_coefficient(f, (n - j) // 2, c)
                    for j in range(n % 2, n + 1, 2)), Fraction(0))
    if n % 2:
        raise ValueError("symplectic dimension must be even")
    f = lambda k: Fraction(1, order_u(k, q))
    half = n // 2
    return sum((Fraction(1, order_sp(2 * j, q)) * _power_coefficient(f, half - j, c)
                for j in range(half + 1)), Fraction(0))
