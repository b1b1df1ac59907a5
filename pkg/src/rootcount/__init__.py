"""Exact counts of M-th roots of identity in finite classical groups."""

from .genfun import (ClassDatum, closed_form_prime_case, enumerate_root_classes,
                     gf_ortho_diff_ss, gf_root_classes, gf_root_proportion,
                     gf_unipotent_bounded)
from .numtheory import (DivisorClass, GroupFamily, RootProblem, classify_divisors,
                        min_negation_exponent, mult_order, split_root_problem)
from .oracle import count_mth_roots, count_split_roots, element_order, enumerate_group
from .partitions import (Partition, SignedPartition, c_gl, c_signed, gen_partitions,
                         gen_signed)
from .qseries import Series, geometric_series, group_order, series_mul, series_pow

__all__ = [
    "ClassDatum", "closed_form_prime_case", "enumerate_root_classes", "gf_ortho_diff_ss",
    "gf_root_classes", "gf_root_proportion", "gf_unipotent_bounded",
    "DivisorClass", "GroupFamily", "RootProblem", "classify_divisors",
    "min_negation_exponent", "mult_order", "split_root_problem",
    "count_mth_roots", "count_split_roots", "element_order", "enumerate_group",
    "Partition", "SignedPartition", "c_gl", "c_signed", "gen_partitions", "gen_signed",
    "Series", "geometric_series", "group_order", "series_mul", "series_pow",
]

__version__ = "0.1.0"
