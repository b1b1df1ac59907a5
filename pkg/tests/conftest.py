import itertools

import numpy as np
import pytest

from rootcount.oracle import _group


def naive_partitions(n, max_part=None, max_len=None):
    """Partitions of n as multisets, by brute force over combinations."""
    top = n if max_part is None else max_part
    out = set()
    for length in range(0 if n == 0 else 1, n + 1):
        if max_len is not None and length > max_len:
            break
        for combo in itertools.combinations_with_replacement(range(1, top + 1), length):
            if sum(combo) == n:
                out.add(tuple(sorted(combo, reverse=True)))
    return out


def centralizer_size(family, dim, q, x):
    """|{g in G : g x = x g}| by scanning the enumerated group."""
    G = _group(family, dim, q)
    F = G.field
    X = np.broadcast_to(np.asarray(x, dtype=np.int64), G.elements.shape)
    return int(np.all(F.matmul(G.elements, X) == F.matmul(X, G.elements), axis=(1, 2)).sum())


@pytest.fixture
def naive():
    return naive_partitions
