"""Chirotopes of uniform oriented matroids.

A chirotope is stored as one sign per sorted r-subset of [n], indexed by the
lexicographic rank of the subset.  Evaluation on arbitrary ordered tuples
applies the permutation parity; reorientation, duality and minors are all
exact combinatorial operations on the stored signs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import DomainError, FormatError, NonUniformError
from .signvec import MAX_GROUND_SET, _mask_from_elements


def lex_rank(subset: tuple[int, ...], n: int) -> int:
    """Rank of a sorted 1-based r-subset in lexicographic order."""
    r = len(subset)
    rank = 0
    prev = 0
    for i, c in enumerate(subset):
        for j in range(prev + 1, c):
            rank += comb(n - j, r - 1 - i)
        prev = c
    return rank


def _det_bareiss(rows: list[list[int]]) -> int:
    """Exact integer determinant (fraction-free Gaussian elimination)."""
    a = [row[:] for row in rows]
    size = len(a)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for i in range(k + 1, size):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


@dataclass(frozen=True)
class Chirotope:
    """Uniform rank-r chirotope on [n]; ``signs[i]`` in {+1,-1} is the value on
    the i-th sorted r-subset in lex order."""

    n: int
    r: int
    signs: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.r <= self.n or self.n > MAX_GROUND_SET:
            raise DomainError(f"invalid rank/size ({self.r}, {self.n})")
        if len(self.signs) != comb(self.n, self.r):
            raise DomainError(
                f"expected {comb(self.n, self.r)} signs, got {len(self.signs)}"
            )
        if any(s not in (1, -1) for s in self.signs):
            raise NonUniformError("chirotope signs must be +1/-1 (uniform only)")

    # -- evaluation ----------------------------------------------------

    def sign_of_sorted(self, subset: tuple[int, ...]) -> int:
        return self.signs[lex_rank(subset, self.n)]

    def eval_basis(self, tup: tuple[int, ...]) -> int:
        """Chirotope value on an ordered r-tuple; 0 iff an entry repeats."""
        if len(tup) != self.r:
            raise DomainError(f"expected an r-tuple of arity {self.r}")
        for e in tup:
            if not 1 <= e <= self.n:
                raise DomainError(f"element {e} outside ground set [1..{self.n}]")
        if len(set(tup)) != self.r:
            return 0
        inversions = sum(
            1
            for i in range(self.r)
            for j in range(i + 1, self.r)
            if tup[i] > tup[j]
        )
        parity = -1 if inversions % 2 else 1
        return parity * self.sign_of_sorted(tuple(sorted(tup)))

    # -- structural operations -----------------------------------------

    def reorient(self, r_set) -> "Chirotope":
        """Multiply each basis sign by (-1)^{|basis ∩ R|}."""
        mask = _mask_from_elements(r_set, self.n)
        signs = []
        for subset in combinations(range(1, self.n + 1), self.r):
            flips = sum(1 for e in subset if mask >> (e - 1) & 1)
            signs.append(self.sign_of_sorted(subset) * (-1 if flips % 2 else 1))
        return Chirotope(self.n, self.r, tuple(signs))

    def dual(self) -> "Chirotope":
        """Rank n-r chirotope with chi*(S) = chi(comp(S)) * sign(S, comp(S))."""
        if self.r == self.n:
            raise DomainError("dual of a rank-n chirotope on n elements is degenerate")
        ground = set(range(1, self.n + 1))
        signs = []
        for subset in combinations(range(1, self.n + 1), self.n - self.r):
            complement = tuple(sorted(ground - set(subset)))
            # parity of (subset..., complement...) relative to identity
            inversions = sum(1 for a in subset for b in complement if a > b)
            parity = -1 if inversions % 2 else 1
            signs.append(self.sign_of_sorted(complement) * parity)
        return Chirotope(self.n, self.n - self.r, tuple(signs))

    def delete(self, e: int) -> "Chirotope":
        """Restrict to [n] \\ e; elements above e renumbered down by one."""
        if not 1 <= e <= self.n:
            raise DomainError(f"element {e} outside ground set [1..{self.n}]")
        if self.n - 1 < self.r:
            raise DomainError("deletion would collapse the rank")
        signs = []
        for subset in combinations(range(1, self.n), self.r):
            old = tuple(x if x < e else x + 1 for x in subset)
            signs.append(self.sign_of_sorted(old))
        return Chirotope(self.n - 1, self.r, tuple(signs))

    def contract(self, e: int) -> "Chirotope":
        """Contract e: new sign of S is chi(e, S) on original labels."""
        if not 1 <= e <= self.n:
            raise DomainError(f"element {e} outside ground set [1..{self.n}]")
        if self.r < 2:
            raise DomainError("contraction would collapse the rank")
        signs = []
        for subset in combinations(range(1, self.n), self.r - 1):
            old = tuple(x if x < e else x + 1 for x in subset)
            signs.append(self.eval_basis((e,) + old))
        return Chirotope(self.n - 1, self.r - 1, tuple(signs))

    def contract_set(self, elements) -> tuple["Chirotope", tuple[int, ...]]:
        """Contract several elements; returns the minor and the surviving
        original labels in order (label i+1 of the minor = labels[i])."""
        chi = self
        labels = list(range(1, self.n + 1))
        for e in sorted(set(elements), reverse=True):
            idx = labels.index(e) + 1
            chi = chi.contract(idx)
            labels.pop(idx - 1)
        return chi, tuple(labels)

    # -- serialization -------------------------------------------------

    def serialize(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)


def alternating_chirotope(r: int, n: int) -> Chirotope:
    """The alternating (cyclic) matroid: + on every sorted r-subset."""
    if not 1 <= r <= n:
        raise DomainError(f"invalid rank/size ({r}, {n})")
    return Chirotope(n, r, (1,) * comb(n, r))


def parse_chirotope(text: str, r: int, n: int, base_order: str = "lex") -> Chirotope:
    """Parse a +/- chirotope string of length C(n,r).

    ``base_order`` selects how text positions map to sorted r-subsets:
    "lex" (our native order) or "colex" for databases using colexicographic
    subset order.
    """
    if base_order not in ("lex", "colex"):
        raise DomainError(f"unknown base order {base_order!r}")
    expected = comb(n, r)
    if len(text) != expected:
        raise FormatError(f"expected {expected} characters for (r={r}, n={n}), got {len(text)}")
    if "0" in text:
        raise NonUniformError("non-uniform chirotopes (containing '0') are unsupported")
    bad = set(text) - {"+", "-"}
    if bad:
        raise FormatError(f"invalid characters {sorted(bad)!r} in chirotope text")
    values = tuple(1 if ch == "+" else -1 for ch in text)
    if base_order == "colex":
        subsets = sorted(
            combinations(range(1, n + 1), r), key=lambda s: tuple(reversed(s))
        )
        reordered = [0] * expected
        for pos, subset in enumerate(subsets):
            reordered[lex_rank(subset, n)] = values[pos]
        values = tuple(reordered)
    return Chirotope(n, r, values)


def from_points(coords: list[list[int]]) -> Chirotope:
    """Chirotope of an integer point configuration (rows = elements).

    Signs are exact integer determinant signs of the r x r row minors; any
    zero minor means the configuration is degenerate.
    """
    n = len(coords)
    if n == 0:
        raise DomainError("empty point configuration")
    r = len(coords[0])
    if any(len(row) != r for row in coords):
        raise DomainError("rows must all have the same length")
    if n < r:
        raise DomainError(f"need at least r={r} points, got {n}")
    signs = []
    for subset in combinations(range(n), r):
        det = _det_bareiss([coords[i] for i in subset])
        if det == 0:
            raise DomainError(
                f"degenerate configuration: zero minor on rows {tuple(i + 1 for i in subset)}"
            )
        signs.append(1 if det > 0 else -1)
    return Chirotope(n, r, tuple(signs))


def random_realizable(r: int, n: int, seed: int, coord_bound: int = 1000) -> Chirotope:
    """Random realizable uniform chirotope from integer points in general
    position; rejection-samples on zero minors with an explicit seed."""
    rng = random.Random(seed)
    while True:
        coords = [
            [rng.randint(-coord_bound, coord_bound) for _ in range(r)] for _ in range(n)
        ]
        try:
            return from_points(coords)
        except DomainError:
            continue
