"""Property suites and the golden verification grid behind ``rootcount selftest``."""

from __future__ import annotations

from fractions import Fraction

from . import genfun, oracle
from .numtheory import GroupFamily
from .partitions import SYMPLECTIC, c_gl, c_signed, gen_partitions, gen_signed
from .qseries import Series, geometric_series, group_order, series_mul

# (family, q, dims, M values): genfun x |G| = class data = oracle
GOLDEN_GRID = [
    ("gl", 3, (1, 2, 3), (1, 2, 3, 4, 6, 8, 12, 24)),
    ("sp", 3, (2,), (2, 3, 4, 6, 7, 12)),
    ("sp", 5, (2,), (2, 3, 4, 6, 7, 12)),
    ("sp", 13, (2,), (2, 3, 4, 6, 7, 12)),
    ("u", 3, (1, 2), (2, 3, 4, 8, 24)),
]
# o-sum: proportion sums at dim 2 (o+ and o-) and dim 3 (o-odd)
ORTHO_GRID = [(2, (1, 2, 3, 4, 6)), (3, (2, 3, 4, 6))]

# (family, dim, q, M, count, proportion), each confirmed by the oracle
ANCHORS = [
    ("gl", 2, 3, 2, 14, Fraction(7, 24)),
    ("sp", 2, 3, 3, 9, Fraction(3, 8)),
    ("sp", 2, 3, 4, 8, Fraction(1, 3)),
    ("u", 2, 3, 4, 40, Fraction(5, 12)),
    ("u", 2, 3, 8, 64, Fraction(2, 3)),
    ("gl", 2, 13, 7, 469, Fraction(469, 26208)),
    ("sp", 2, 13, 7, 469, Fraction(469, 2184)),
]


def triple(family: str, q: int, M: int, n: int):
    """(genfun count, class-data count, oracle count) for one grid point."""
    fam = GroupFamily(family)
    order = group_order(fam, n, q)
    gf = genfun.gf_root_proportion(fam, q, M, n)[n] * order
    return gf, genfun.class_data_count(fam, q, M, n), oracle.count_mth_roots(fam, n, q, M)


def ortho_triple(q: int, M: int, n: int):
    """(genfun, class data, oracle) proportion sums for the o-sum family."""
    gf = genfun.gf_root_proportion(GroupFamily.ORTHO_SUM, q, M, n)[n]
    cd = genfun.class_data_total(GroupFamily.ORTHO_SUM, q, M, n)
    if n % 2:
        c = oracle.count_mth_roots(GroupFamily.ORTHO_ODD, n, q, M)
        oc = Fraction(2 * c, group_order(GroupFamily.ORTHO_ODD, n, q))
    else:
        oc = sum((Fraction(oracle.count_mth_roots(f, n, q, M), group_order(f, n, q))
                  for f in (GroupFamily.ORTHO_PLUS, GroupFamily.ORTHO_MINUS)), Fraction(0))
    return gf, cd, oc


def _line(ok: bool, label: str) -> bool:
    print(f"{'PASS' if ok else 'FAIL'}  {label}")
    return ok


def run_selftest() -> int:
    results = []
    for q in (3, 5):
        for n in range(1, 6):
            s = sum(Fraction(group_order("gl", n, q)) / c_gl(lam, q) for lam in gen_partitions(n))
            results.append(_line(s == q ** (n * (n - 1)), f"steinberg gl n={n} q={q}"))
        for k in range(1, 4):
            s = sum(Fraction(group_order("sp", 2 * k, q)) / c_signed(SYMPLECTIC, lam, q)
                    for lam in gen_signed(SYMPLECTIC, 2 * k))
            results.append(_line(s == q ** (2 * k * k), f"steinberg sp dim={2 * k} q={q}"))
    for t in range(1, 11):
        one_minus = Series.from_terms([(0, 1), (t, -1)], 20)
        ok = series_mul(geometric_series(t, 20), one_minus) == Series.one(20)
        results.append(_line(ok, f"series geometric inverse t={t}"))
    for family, n, q, M in (("gl", 2, 3, 24), ("u", 2, 3, 24), ("sp", 2, 3, 12)):
        p = genfun.gf_root_proportion(family, q, M, n)[n]
        results.append(_line(p == 1, f"saturation {family} dim={n} q={q} M={M}"))
    for family, q, dims, Ms in GOLDEN_GRID:
        for M in Ms:
            for n in dims:
                a, b, c = triple(family, q, M, n)
                results.append(_line(a == b == c, f"grid {family} q={q} M={M} dim={n}: {a} {b} {c}"))
    for n, Ms in ORTHO_GRID:
        for M in Ms:
            a, b, c = ortho_triple(3, M, n)
            results.append(_line(a == b == c, f"grid o-sum q=3 M={M} dim={n}: {a} {b} {c}"))
    for family, n, q, M, count, prop in ANCHORS:
        got = oracle.count_mth_roots(family, n, q, M)
        gf = genfun.gf_root_proportion(family, q, M, n)[n]
        results.append(_line(got == count and gf == prop,
                             f"anchor {family} dim={n} q={q} M={M}: {got} {gf}"))
    failed = results.count(False)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1
