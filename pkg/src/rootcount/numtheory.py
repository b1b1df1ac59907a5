"""Divisor arithmetic and the factor classification of cyclotomic divisors.

Every divisor d of the prime-to-p part t of M indexes the cyclotomic
polynomial Q_d.  Over F_q its irreducible factors all share one degree, and
whether they are self-reciprocal (symplectic/orthogonal) or self-conjugate
(unitary) decides which generating-function factor d contributes.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional


class GroupFamily(str, enum.Enum):
    GL = "gl"
    U = "u"
    SP = "sp"
    ORTHO_SUM = "o-sum"
    ORTHO_PLUS = "o+"
    ORTHO_MINUS = "o-"
    ORTHO_ODD = "o-odd"

    @property
    def is_orthogonal(self) -> bool:
        return self in (GroupFamily.ORTHO_SUM, GroupFamily.ORTHO_PLUS,
                        GroupFamily.ORTHO_MINUS, GroupFamily.ORTHO_ODD)

    @property
    def is_self_dual_type(self) -> bool:
        """Families whose forms pair a polynomial with its reciprocal."""
        return self is GroupFamily.SP or self.is_orthogonal


LINEAR = "linear"
SELF_DUAL = "self-dual"
SELF_CONJUGATE = "self-conjugate"
PAIRED = "paired"


def factorize(n: int) -> dict:
    """Prime factorization by trial division; {prime: exponent}."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power_base(q: int):
    """Return (p, k) with q = p**k, or raise ValueError."""
    if q < 2:
        raise ValueError(f"q={q} is not a prime power")
    f = factorize(q)
    if len(f) != 1:
        raise ValueError(f"q={q} is not a prime power")
    (p, k), = f.items()
    return p, k


def divisors(n: int) -> List[int]:
    out = [1]
    for p, k in factorize(n).items():
        out = [d * p ** i for d in out for i in range(k + 1)]
    return sorted(out)


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result -= result // p
    return result


@dataclass(frozen=True)
class RootProblem:
    """M = t * p**r with p the characteristic of F_q and p not dividing t."""
    M: int
    q: int
    p: int
    t: int
    r: int

    @property
    def unipotent_bound(self) -> int:
        """Largest admissible Jordan block size, p**r."""
        return self.p ** self.r


def split_root_problem(M: int, q: int) -> RootProblem:
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    p, _ = prime_power_base(q)
    if p == 2:
        raise ValueError("only odd characteristic is supported")
    t, r = M, 0
    while t % p == 0:
        t //= p
        r += 1
    return RootProblem(M=M, q=q, p=p, t=t, r=r)


@lru_cache(maxsize=None)
def mult_order(q: int, d: int) -> int:
    """Multiplicative order of q modulo d (1 for d = 1)."""
    if d < 1:
        raise ValueError(f"modulus must be positive, got {d}")
    if math.gcd(q, d) != 1:
        raise ValueError(f"gcd({q}, {d}) != 1: {d} is not a semisimple divisor")
    if d == 1:
        return 1
    e, x = 1, q % d
    while x != 1:
        x = x * q % d
        e += 1
    return e


@lru_cache(maxsize=None)
def min_negation_exponent(q: int, d: int) -> Optional[int]:
    """Least s >= 1 with q**s == -1 (mod d), or None.

    d belongs to D_m exactly when this returns m.
    """
    if math.gcd(q, d) != 1:
        raise ValueError(f"gcd({q}, {d}) != 1")
    if d <= 2:
        return 1
    e = mult_order(q, d)
    # q^s = -1 forces q^{2s} = 1 with e not dividing s, so only s = e/2 can work
    if e % 2 == 0 and pow(q, e // 2, d) == d - 1:
        return e // 2
    return None


@dataclass(frozen=True)
class DivisorClass:
    """How Q_d contributes for one group family.

    ``degree`` is the degree of each irreducible factor over the field the
    group's matrices live in (F_q, or F_{q^2} for the unitary family).
    ``block_dim`` is the matrix dimension consumed per unit of partition size,
    and ``base`` the field size entering the centralizer formula; for the
    self-dual and self-conjugate kinds the centralizer is unitary over F_{base^2}.
    """
    family: GroupFamily
    q: int
    d: int
    e: int
    phi: int
    kind: str
    degree: int
    factor_count: int
    sign: int = 0

    @property
    def block_dim(self) -> int:
        if self.kind == PAIRED and self.family is not GroupFamily.GL:
            return 2 * self.degree
        return self.degree

    @property
    def base(self) -> int:
        if self.kind == SELF_DUAL:
            return self.q ** (self.degree // 2)
        if self.family is GroupFamily.U and self.kind == PAIRED:
            return self.q ** (2 * self.degree)
        return self.q ** self.degree

    @property
    def unitary(self) -> bool:
        """True when the centralizer of a block is of unitary type."""
        if self.kind in (SELF_DUAL, SELF_CONJUGATE):
            return True
        return self.kind == LINEAR and self.family is GroupFamily.U


def classify_divisors(t: int, q: int, family: GroupFamily) -> List[DivisorClass]:
    family = GroupFamily(family)
    if math.gcd(t, q) != 1:
        raise ValueError(f"gcd(t={t}, q={q}) != 1")
    out = []
    for d in divisors(t):
        e = mult_order(q, d)
        phi = euler_phi(d)
        common = dict(family=family, q=q, d=d, e=e, phi=phi)
        if d <= 2:
            out.append(DivisorClass(kind=LINEAR, degree=1, factor_count=1,
                                    sign=1 if d == 1 else -1, **common))
            continue
        s = min_negation_exponent(q, d)
        if family is GroupFamily.GL:
            out.append(DivisorClass(kind=PAIRED, degree=e, factor_count=phi // e, **common))
        elif family is GroupFamily.U:
            if s is not None and s % 2 == 1:
                out.append(DivisorClass(kind=SELF_CONJUGATE, degree=s,
                                        factor_count=phi // s, **common))
            else:
                deg = mult_order(q * q, d)
                out.append(DivisorClass(kind=PAIRED, degree=deg,
                                        factor_count=phi // (2 * deg), **common))
        else:
            if s is not None:
                out.append(DivisorClass(kind=SELF_DUAL, degree=e,
                                        factor_count=phi // e, **common))
            else:
                out.append(DivisorClass(kind=PAIRED, degree=e,
                                        factor_count=phi // (2 * e), **common))
    return out


def linear_slots(classes) -> int:
    """Number of eigenvalue +-1 slots (2 if t is even, else 1)."""
    return sum(1 for c in classes if c.kind == LINEAR)
