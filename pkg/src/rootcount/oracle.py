"""Ground truth by exhaustion over small classical matrix groups.

Candidate matrices are generated column by column (rows for the unitary
family) over the full odometer of field entries.  The group predicate
decomposes into conditions on pairs of columns, so a prefix that already
violates it is dropped together with every completion of it; nothing
group-theoretic is used to generate elements.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Tuple

import numpy as np

from .numtheory import GroupFamily, factorize, prime_power_base

DEFAULT_BUDGET = 10 ** 8


class BudgetExceeded(ValueError):
    """The candidate space is too large for brute force; use genfun instead."""


def candidate_budget() -> int:
    raw = os.environ.get("ROOTCOUNT_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


# ---------------------------------------------------------------- fields

class FiniteField:
    """F_p (degree 1) or F_p[t]/(t^2 + t + a) (degree 2), elements as ints.

    The element x0 + x1*t is encoded as x0 + p*x1.  Arithmetic goes through
    lookup tables so that numpy fancy indexing handles whole batches.
    """

    def __init__(self, p: int, degree: int = 1):
        if factorize(p) != {p: 1}:
            raise ValueError(f"{p} is not prime")
        if degree not in (1, 2):
            raise ValueError("only prime fields and quadratic extensions are supported")
        self.p = p
        self.degree = degree
        self.size = p ** degree
        els = np.arange(self.size)
        if degree == 1:
            self.a = None
            self.add = (els[:, None] + els[None, :]) % p
            self.mul = (els[:, None] * els[None, :]) % p
        else:
            self.a = quadratic_modulus(p)
            x0, x1 = els % p, els // p
            s0 = (x0[:, None] + x0[None, :]) % p
            s1 = (x1[:, None] + x1[None, :]) % p
            self.add = s0 + p * s1
            hh = x1[:, None] * x1[None, :]
            m0 = (x0[:, None] * x0[None, :] - self.a * hh) % p
            m1 = (x0[:, None] * x1[None, :] + x1[:, None] * x0[None, :] - hh) % p
            self.mul = m0 + p * m1
        self.neg = np.array([int(np.nonzero(self.add[x] == 0)[0][0]) for x in els])
        self.inv = np.zeros(self.size, dtype=np.int64)
        for x in range(1, self.size):
            self.inv[x] = int(np.nonzero(self.mul[x] == 1)[0][0])
        # conjugation a -> a^p; the identity map on the prime field
        conj = els.copy()
        for x in els:
            y = 1
            for _ in range(p):
                y = self.mul[y, x]
            conj[x] = y
        self.conj = conj

    def __repr__(self):
        return f"FiniteField(p={self.p}, degree={self.degree})"

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """Batched product of (..., n, k) and (..., k, m) arrays."""
        if self.degree == 1:
            return (A.astype(np.int64) @ B.astype(np.int64)) % self.p
        terms = self.mul[A[..., :, :, None], B[..., None, :, :]]
        out = terms[..., 0, :]
        for k in range(1, terms.shape[-2]):
            out = self.add[out, terms[..., k, :]]
        return out

    def dot(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """sum_k X[..., k] * Y[..., k] with broadcasting."""
        terms = self.mul[X, Y]
        out = terms[..., 0]
        for k in range(1, terms.shape[-1]):
            out = self.add[out, terms[..., k]]
        return out

    def power(self, A: np.ndarray, k: int) -> np.ndarray:
        n = A.shape[-1]
        result = np.broadcast_to(np.eye(n, dtype=np.int64), A.shape).copy()
        base = A
        while k:
            if k & 1:
                result = self.matmul(result, base)
            k >>= 1
            if k:
                base = self.matmul(base, base)
        return result

    def power_each(self, A: np.ndarray, exps: np.ndarray) -> np.ndarray:
        """A[i] ** exps[i] for a batch (b, n, n)."""
        exps = np.asarray(exps, dtype=object)
        n = A.shape[-1]
        result = np.broadcast_to(np.eye(n, dtype=np.int64), A.shape).copy()
        base = A.copy()
        exps = [int(e) for e in exps]
        while any(exps):
            bits = np.array([e & 1 for e in exps], dtype=bool)
            if bits.any():
                result[bits] = self.matmul(result[bits], base[bits])
            exps = [e >> 1 for e in exps]
            live = np.array([e > 0 for e in exps], dtype=bool)
            if live.any():
                base[live] = self.matmul(base[live], base[live])
        return result

    def is_identity(self, A: np.ndarray) -> np.ndarray:
        n = A.shape[-1]
        return np.all(A == np.eye(n, dtype=A.dtype), axis=(-2, -1))


def quadratic_modulus(p: int) -> int:
    """Smallest a in F_p with t^2 + t + a irreducible."""
    squares = {x * x % p for x in range(p)}
    for a in range(p):
        if (1 - 4 * a) % p not in squares:
            return a
    raise ValueError(f"no irreducible t^2 + t + a over F_{p}")


@lru_cache(maxsize=None)
def get_field(p: int, degree: int = 1) -> FiniteField:
    return FiniteField(p, degree)


def smallest_nonsquare(p: int) -> int:
    squares = {x * x % p for x in range(1, p)}
    return next(x for x in range(2, p) if x not in squares)


# ---------------------------------------------------------------- forms

def _flip(n: int) -> np.ndarray:
    return np.fliplr(np.eye(n, dtype=np.int64)) if n else np.zeros((0, 0), dtype=np.int64)


@dataclass(frozen=True)
class FormSpec:
    family: GroupFamily
    dim: int
    matrix: Tuple[Tuple[int, ...], ...]

    @property
    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64).reshape(self.dim, self.dim)


def form_spec(family, dim: int, q: int) -> Optional[FormSpec]:
    """Gram matrix of the preserved form, entries reduced mod p; None for GL."""
    family = GroupFamily(family)
    p, _ = prime_power_base(q)
    if family is GroupFamily.GL:
        return None
    J = np.zeros((dim, dim), dtype=np.int64)
    if family is GroupFamily.SP:
        if dim % 2:
            raise ValueError("symplectic dimension must be even")
        n = dim // 2
        J[:n, n:] = _flip(n)
        J[n:, :n] = -_flip(n)
    elif family is GroupFamily.ORTHO_PLUS:
        if dim % 2:
            raise ValueError("o+ needs even dimension")
        n = dim // 2
        J[:n, n:] = _flip(n)
        J[n:, :n] = _flip(n)
    elif family is GroupFamily.ORTHO_MINUS:
        if dim % 2 or dim == 0:
            raise ValueError("o- needs positive even dimension")
        n = dim // 2
        delta = smallest_nonsquare(p)
        J[: n - 1, n + 1:] = _flip(n - 1)
        J[n + 1:, : n - 1] = _flip(n - 1)
        J[n - 1, n - 1] = 1
        J[n, n] = -delta
    elif family is GroupFamily.ORTHO_ODD:
        if dim % 2 == 0:
            raise ValueError("o-odd needs odd dimension")
        n = dim // 2
        J[:n, n + 1:] = _flip(n)
        J[n + 1:, :n] = _flip(n)
        J[n, n] = 1  # alpha
    elif family is GroupFamily.U:
        J = _flip(dim)
    else:
        raise ValueError(f"no single form for family {family.value}")
    J %= p
    return FormSpec(family, dim, tuple(tuple(int(x) for x in row) for row in J))


# ---------------------------------------------------------------- groups

@dataclass(frozen=True)
class MatrixElement:
    field: FiniteField
    entries: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_array(cls, field: FiniteField, arr) -> "MatrixElement":
        arr = np.asarray(arr, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("matrix must be square")
        return cls(field, tuple(tuple(int(x) for x in row) for row in arr))

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.dim, self.dim)


class MatrixGroup:
    """An enumerated group: a sequence of MatrixElement backed by one array."""

    def __init__(self, family, dim, q, field, elements: np.ndarray):
        self.family = GroupFamily(family)
        self.dim = dim
        self.q = q
        self.field = field
        self.elements = elements

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i) -> MatrixElement:
        return MatrixElement.from_array(self.field, self.elements[i])

    def __iter__(self):
        for i in range(len(self)):
            yield self[i]

    def __repr__(self):
        return f"MatrixGroup({self.family.value}, dim={self.dim}, q={self.q}, order={len(self)})"


def _field_for(family: GroupFamily, q: int) -> FiniteField:
    p, k = prime_power_base(q)
    if p == 2:
        raise ValueError("only odd characteristic is supported")
    if k != 1:
        raise ValueError(f"the oracle supports prime q only, got q={q}")
    return get_field(p, 2 if family is GroupFamily.U else 1)


def check_budget(family, dim: int, q: int, budget: Optional[int] = None) -> int:
    family = GroupFamily(family)
    k = 2 if family is GroupFamily.U else 1
    candidates = q ** (dim * dim * k)
    budget = candidate_budget() if budget is None else budget
    if candidates > budget:
        raise BudgetExceeded(
            f"{family.value} dim {dim} over q={q}: {candidates} candidates exceeds "
            f"budget {budget}; use the generating functions instead")
    return candidates


def _all_vectors(field: FiniteField, n: int) -> np.ndarray:
    """Every vector of F^n, odometer order (last coordinate fastest)."""
    grids = np.indices((field.size,) * n).reshape(n, -1).T
    return grids.astype(np.int64)


def _extend_form(field, J, partial, cands, j, pairing):
    """Keep (prefix, candidate) pairs satisfying the form on position j."""
    # pairing(x, y) = x^T J y, or x Pi conj(y)^T for the hermitian case
    self_ok = pairing(cands, cands) == J[j, j]
    cands = cands[self_ok]
    if j == 0:
        return cands[:, None, :]
    P = partial.shape[0]
    ok = np.ones((P, len(cands)), dtype=bool)
    for i in range(j):
        vi = partial[:, i, :][:, None, :]
        w = cands[None, :, :]
        ok &= pairing(vi, w) == J[i, j]
        ok &= pairing(w, vi) == J[j, i]
    pi, ci = np.nonzero(ok)
    return np.concatenate([partial[pi], cands[ci][:, None, :]], axis=1)


def _extend_gl(field, partial, cands, j):
    """Append candidates outside the span of the prefix columns."""
    F = field
    n = cands.shape[1]
    codes = (cands * (F.size ** np.arange(n - 1, -1, -1))).sum(axis=1)
    cands = cands[codes != 0]
    if j == 0:
        return cands[:, None, :]
    coeffs = _all_vectors(F, j)  # (Q^j, j)
    # span[p, c, :] = sum_i coeffs[c, i] * partial[p, i, :]
    span = F.mul[coeffs[None, :, :, None], partial[:, None, :, :]]
    acc = span[:, :, 0, :]
    for i in range(1, j):
        acc = F.add[acc, span[:, :, i, :]]
    weights = F.size ** np.arange(n - 1, -1, -1)
    span_codes = (acc * weights).sum(axis=-1)  # (P, Q^j)
    cand_codes = (cands * weights).sum(axis=1)
    in_span = np.zeros((partial.shape[0], F.size ** n), dtype=bool)
    np.put_along_axis(in_span, span_codes, True, axis=1)
    ok = ~in_span[:, cand_codes]
    pi, ci = np.nonzero(ok)
    return np.concatenate([partial[pi], cands[ci][:, None, :]], axis=1)


def _enumerate_slice(family_value: str, dim: int, q: int, start: int, stop: int) -> np.ndarray:
    family = GroupFamily(family_value)
    F = _field_for(family, q)
    vecs = _all_vectors(F, dim)
    spec = form_spec(family, dim, q)
    if spec is None:
        extend = lambda P, C, j: _extend_gl(F, P, C, j)
    else:
        J = spec.array
        if family is GroupFamily.U:
            def pairing(x, y):
                # (x Pi conj(y)^T): Pi reverses the coordinates of y
                return F.dot(x, F.conj[y[..., ::-1]])
        else:
            def pairing(x, y):
                return F.dot(x, (y @ J.T) % F.p)
        extend = lambda P, C, j: _extend_form(F, J, P, C, j, pairing)
    partial = extend(None, vecs[start:stop], 0)
    for j in range(1, dim):
        if len(partial) == 0:
            break
        partial = extend(partial, vecs, j)
    if len(partial) == 0:
        return np.zeros((0, dim, dim), dtype=np.int64)
    # stored vectors are columns, except for the hermitian case where they are rows
    if family is GroupFamily.U:
        return partial
    return np.transpose(partial, (0, 2, 1))


def enumerate_group(family, dim: int, q: int, jobs: int = 1,
                    budget: Optional[int] = None) -> MatrixGroup:
    """All elements of the group, in odometer order of their generating vectors."""
    family = GroupFamily(family)
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    if family is GroupFamily.ORTHO_SUM:
        raise ValueError("o-sum is not a single group; enumerate o+ and o- separately")
    check_budget(family, dim, q, budget)
    F = _field_for(family, q)
    total = F.size ** dim
    jobs = max(1, min(jobs, total))
    cuts = [total * i // jobs for i in range(jobs + 1)]
    args = [(family.value, dim, q, a, b) for a, b in zip(cuts, cuts[1:])]
    if jobs == 1:
        parts = [_enumerate_slice(*args[0])]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_enumerate_slice, *zip(*args)))
    return MatrixGroup(family, dim, q, F, np.concatenate(parts, axis=0))


@lru_cache(maxsize=64)
def _cached_group(family_value, dim, q) -> MatrixGroup:
    return enumerate_group(family_value, dim, q)


def _group(family, dim, q, jobs=1) -> MatrixGroup:
    family = GroupFamily(family)
    check_budget(family, dim, q)
    if jobs == 1:
        return _cached_group(family.value, dim, q)
    return enumerate_group(family, dim, q, jobs=jobs)


def count_mth_roots(family, dim: int, q: int, M: int, jobs: int = 1) -> int:
    if M < 1:
        raise ValueError("M must be >= 1")
    if dim == 0:
        return 1
    G = _group(family, dim, q, jobs)
    return int(G.field.is_identity(G.field.power(G.elements, M)).sum())


def element_order(x: MatrixElement, cap: Optional[int] = None) -> int:
    """Least k >= 1 with x^k = Id, by iteration (capped at |GL_n(field)|)."""
    F = x.field
    A = x.array
    n = x.dim
    if cap is None:
        cap = 1
        for i in range(n):
            cap *= F.size ** n - F.size ** i
    Y = A.copy()
    for k in range(1, cap + 1):
        if F.is_identity(Y):
            return k
        Y = F.matmul(Y, A)
    raise ValueError("element is not invertible")


def element_orders(G: MatrixGroup) -> np.ndarray:
    """Orders of every element, by descending from |G| one prime at a time."""
    F = G.field
    order = len(G)
    orders = np.full(len(G), order, dtype=object)
    for ell, k in factorize(order).items():
        for _ in range(k):
            trial = np.array([o // ell if o % ell == 0 else o for o in orders], dtype=object)
            hit = F.is_identity(F.power_each(G.elements, trial))
            orders = np.where(hit, trial, orders)
    return orders


def order_census(family, dim: int, q: int) -> Dict[int, int]:
    orders = element_orders(_group(family, dim, q))
    census: Dict[int, int] = {}
    for o in orders:
        census[int(o)] = census.get(int(o), 0) + 1
    return dict(sorted(census.items()))


@dataclass(frozen=True)
class SplitCount:
    semisimple: int
    unipotent: int
    mixed: int

    @property
    def total(self) -> int:
        return self.semisimple + self.unipotent + self.mixed


def count_split_roots(family, dim: int, q: int, M: int) -> SplitCount:
    """Split the M-th roots by element order; the identity counts as semisimple."""
    p, _ = prime_power_base(q)
    census = order_census(family, dim, q)
    ss = uni = mixed = 0
    for o, c in census.items():
        if M % o:
            continue
        if math.gcd(o, p) == 1:
            ss += c
        else:
            k = o
            while k % p == 0:
                k //= p
            if k == 1:
                uni += c
            else:
                mixed += c
    return SplitCount(ss, uni, mixed)
