import itertools
from math import comb

import pytest

from orimat import SignVector, orthogonality_degree


def all_full_vectors(n):
    """Every zero-free sign vector of length n."""
    full = (1 << n) - 1
    for minus in range(1 << n):
        yield SignVector(n, full & ~minus, minus)


def ort_oracle(members, t):
    """Brute-force ort via the scalar degree, independent of the vectorized
    enumeration path."""
    return min(orthogonality_degree(x, t).degree for x in members)


def o_vector_oracle(cs):
    """o-vector by enumerating all 2^n full sign vectors (no halving)."""
    kmax = (cs.r - 1) // 2
    entries = [0] * (kmax + 1)
    for t in all_full_vectors(cs.n):
        o = ort_oracle(cs.members, t)
        if o > 0:
            entries[min(o - 1, kmax)] += 1
    return tuple(entries)


@pytest.fixture(scope="session")
def circuit_cache():
    from orimat.cyclic import alternating_circuits

    return alternating_circuits
