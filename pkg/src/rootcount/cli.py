"""Command-line front end: ``rootcount {genfun,oracle,verify,divisors,selftest}``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import List, Optional

from . import genfun, oracle
from .numtheory import GroupFamily, classify_divisors, split_root_problem
from .qseries import group_order

EXIT_OK, EXIT_MISMATCH, EXIT_INFEASIBLE = 0, 1, 2


def frac(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass
class OutputRecord:
    family: str
    q: str
    M: str
    rows: List[dict] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        return cls(**json.loads(text))

    def to_tsv(self) -> str:
        if not self.rows:
            return ""
        cols = list(self.rows[0])
        lines = ["\t".join(cols)]
        for row in self.rows:
            lines.append("\t".join("-" if row[c] is None else str(row[c]) for c in cols))
        return "\n".join(lines)


def _emit(record: OutputRecord, fmt: str):
    print(record.to_json() if fmt == "json" else record.to_tsv())


# ---------------------------------------------------------------- genfun

def genfun_record(family: str, q: int, M: int, N: int, semisimple_only=False,
                  classes=False) -> OutputRecord:
    rec = OutputRecord(family=family, q=str(q), M=str(M))
    if family == "o-diff-ss":
        series = genfun.gf_ortho_diff_ss(q, M, N)
        fam = None
    else:
        fam = GroupFamily(family)
        series = genfun.gf_root_proportion(fam, q, M, N, semisimple_only=semisimple_only)
    class_series = None
    if classes:
        if fam not in (GroupFamily.GL, GroupFamily.SP, GroupFamily.U):
            raise ValueError("--classes is available for gl, sp and u only")
        class_series = genfun.gf_root_classes(fam, q, M, N)
    even_only = family in ("sp", "o-diff-ss")
    for n in range(1, N + 1):
        if even_only and n % 2:
            continue
        row = {"dim": str(n)}
        if family == "sp":
            row["rank"] = str(n // 2)
        if class_series is not None:
            row["classes"] = str(class_series[n])
        row["count"] = _count(fam, n, q, series[n])
        row["proportion"] = frac(series[n])
        rec.rows.append(row)
    return rec


def _count(fam, n, q, coeff) -> Optional[str]:
    if fam is None:
        return None
    if fam is GroupFamily.ORTHO_SUM:
        if n % 2 == 0:
            return None  # a sum over two groups has no single count
        value = coeff * group_order(GroupFamily.ORTHO_ODD, n, q) / 2
    else:
        value = coeff * group_order(fam, n, q)
    assert value.denominator == 1, value
    return str(value.numerator)


# ---------------------------------------------------------------- oracle

def oracle_record(family: str, dim: int, q: int, M: int, jobs: int = 1) -> dict:
    G = oracle.enumerate_group(family, dim, q, jobs=jobs)
    count = oracle.count_mth_roots(family, dim, q, M, jobs=jobs)
    split = oracle.count_split_roots(family, dim, q, M)
    return {
        "family": family, "dim": str(dim), "q": str(q), "M": str(M),
        "order": str(len(G)), "count": str(count),
        "proportion": frac(Fraction(count, len(G))),
        "semisimple": str(split.semisimple), "unipotent": str(split.unipotent),
        "mixed": str(split.mixed),
    }


# ---------------------------------------------------------------- verify

def _oracle_proportion(fam: GroupFamily, n: int, q: int, M: int) -> Fraction:
    if fam is GroupFamily.ORTHO_SUM:
        if n % 2:
            c = oracle.count_mth_roots(GroupFamily.ORTHO_ODD, n, q, M)
            return Fraction(2 * c, group_order(GroupFamily.ORTHO_ODD, n, q))
        return sum((Fraction(oracle.count_mth_roots(f, n, q, M), group_order(f, n, q))
                    for f in (GroupFamily.ORTHO_PLUS, GroupFamily.ORTHO_MINUS)), Fraction(0))
    return Fraction(oracle.count_mth_roots(fam, n, q, M), group_order(fam, n, q))


def verify_rows(family: str, q: int, M: int, N: int):
    """Yield (dim, genfun, classes, oracle, status) per dimension.

    Counts for gl/u/sp, proportion sums for o-sum.  Infeasible dimensions get
    status SKIP.
    """
    fam = GroupFamily(family)
    series = genfun.gf_root_proportion(fam, q, M, N)
    for n in range(1, N + 1):
        if fam is GroupFamily.SP and n % 2:
            continue
        scale = 1 if fam is GroupFamily.ORTHO_SUM else group_order(fam, n, q)
        gf_value = series[n] * scale
        try:
            oc = _oracle_proportion(fam, n, q, M) * scale
        except oracle.BudgetExceeded:
            yield n, gf_value, None, None, "SKIP"
            continue
        cd = (genfun.class_data_total(fam, q, M, n) * scale
              if n <= genfun.MAX_ENUM_DIM else None)
        ok = gf_value == oc and (cd is None or cd == gf_value)
        yield n, gf_value, cd, oc, "PASS" if ok else "FAIL"


def _fmt(x) -> str:
    if x is None:
        return "-"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else frac(x)


def run_verify(family: str, q: int, M: int, N: int) -> int:
    print("dim\tgenfun\tclasses\toracle\tstatus")
    statuses = []
    for n, a, b, c, status in verify_rows(family, q, M, N):
        statuses.append(status)
        print(f"{n}\t{_fmt(a)}\t{_fmt(b)}\t{_fmt(c)}\t{status}")
    checked = [s for s in statuses if s != "SKIP"]
    if "FAIL" in checked:
        return EXIT_MISMATCH
    if not checked:
        print("no dimension is feasible for the oracle", file=sys.stderr)
        return EXIT_INFEASIBLE
    return EXIT_OK


# ---------------------------------------------------------------- divisors

def divisor_table(family: str, q: int, M: int) -> List[dict]:
    fam = GroupFamily(family)
    rp = split_root_problem(M, q)
    rows = []
    for c in classify_divisors(rp.t, q, fam):
        rows.append({
            "d": str(c.d), "e": str(c.e), "phi": str(c.phi), "kind": c.kind,
            "factor_count": str(c.factor_count), "degree": str(c.degree),
            "block_dim": str(c.block_dim), "base": str(c.base),
        })
    return rows


# ---------------------------------------------------------------- parser

FAMILY_ALIASES = {"o": "o-sum"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootcount",
        description="Count M-th roots of identity in finite classical groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("genfun", help="generating-function coefficients")
    g.add_argument("--family", required=True, choices=["gl", "u", "sp", "o-sum", "o-diff-ss"])
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--max-dim", type=int, required=True)
    g.add_argument("--semisimple-only", action="store_true")
    g.add_argument("--classes", action="store_true",
                   help="add semisimple class counts (needs gcd(M, q) = 1)")
    g.add_argument("--format", choices=["tsv", "json"], default="tsv")

    o = sub.add_parser("oracle", help="brute-force count over an enumerated group")
    o.add_argument("--family", required=True, choices=["gl", "u", "sp", "o+", "o-", "o-odd"])
    o.add_argument("--dim", type=int, required=True)
    o.add_argument("--q", type=int, required=True)
    o.add_argument("--m", type=int, required=True)
    o.add_argument("--jobs", type=int, default=1)
    o.add_argument("--format", choices=["tsv", "json"], default="tsv")

    v = sub.add_parser("verify", help="compare genfun, class data and oracle")
    v.add_argument("--family", required=True, choices=["gl", "u", "sp", "o-sum", "o"])
    v.add_argument("--q", type=int, required=True)
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--max-dim", type=int, required=True)

    d = sub.add_parser("divisors", help="divisor classification table")
    d.add_argument("--family", required=True, choices=["gl", "u", "sp", "o-sum", "o"])
    d.add_argument("--q", type=int, required=True)
    d.add_argument("--m", type=int, required=True)

    sub.add_parser("selftest", help="property suites and the golden grid")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    family = FAMILY_ALIASES.get(getattr(args, "family", None), getattr(args, "family", None))
    try:
        if args.command == "genfun":
            _emit(genfun_record(family, args.q, args.m, args.max_dim,
                                args.semisimple_only, args.classes), args.format)
        elif args.command == "oracle":
            row = oracle_record(family, args.dim, args.q, args.m, args.jobs)
            if args.format == "json":
                print(json.dumps(row, indent=2))
            else:
                print("\t".join(row))
                print("\t".join(row.values()))
        elif args.command == "verify":
            return run_verify(family, args.q, args.m, args.max_dim)
        elif args.command == "divisors":
            rows = divisor_table(family, args.q, args.m)
            print("\t".join(rows[0]))
            for row in rows:
                print("\t".join(row.values()))
        elif args.command == "selftest":
            from .selftest import run_selftest
            return run_selftest()
    except oracle.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
