"""Circuits and cocircuits of a uniform chirotope, the circuit-axiom oracle,
and the Las Vergnas face test.

Circuits are stored one representative per antipodal pair, normalized so the
smallest support element carries +.  In a uniform rank-r matroid the circuit
supports are exactly the (r+1)-subsets of [n].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .chirotope import Chirotope
from .errors import DomainError, EmptyCircuitSetError
from .signvec import SignVector, orthogonality_degree


@dataclass(frozen=True)
class CircuitSet:
    """Normalized circuits of a uniform matroid (one per antipodal pair)."""

    n: int
    r: int
    members: tuple[SignVector, ...]

    def __post_init__(self):
        if len(self.members) != (comb(self.n, self.r + 1) if self.n > self.r else 0):
            raise DomainError("wrong number of circuits for a uniform matroid")

    @property
    def empty(self) -> bool:
        return not self.members

    def require_nonempty(self):
        if self.empty:
            raise EmptyCircuitSetError(
                f"rank {self.r} on {self.n} elements has no circuits; "
                "orthogonality statistics are undefined"
            )

    def with_antipodes(self) -> tuple[SignVector, ...]:
        return self.members + tuple(-x for x in self.members)


def circuits_from_chirotope(chi: Chirotope) -> CircuitSet:
    """Derive the circuit signs on every (r+1)-subset via the chirotope
    recurrence chi(B) = -X_{b_i} * X_{b_{i+1}} * chi(B'), seeding X_{b_1} = +.

    Removing one element from a sorted tuple keeps it sorted, so only stored
    signs are consumed (no permutation bookkeeping).
    """
    members = []
    for support in combinations(range(1, chi.n + 1), chi.r + 1):
        signs = [1]
        for i in range(chi.r):
            b = chi.sign_of_sorted(support[:i] + support[i + 1 :])
            b_next = chi.sign_of_sorted(support[: i + 1] + support[i + 2 :])
            signs.append(-signs[-1] * b * b_next)
        plus = minus = 0
        for e, s in zip(support, signs):
            if s > 0:
                plus |= 1 << (e - 1)
            else:
                minus |= 1 << (e - 1)
        members.append(SignVector(chi.n, plus, minus))
    return CircuitSet(chi.n, chi.r, tuple(members))


def cocircuits(chi: Chirotope) -> CircuitSet:
    """Cocircuits of chi = circuits of its dual (supports of size n-r+1)."""
    return circuits_from_chirotope(chi.dual())


@dataclass
class AxiomReport:
    ok: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def check_circuit_axioms(members: tuple[SignVector, ...]) -> AxiomReport:
    """Brute-force check of the circuit axioms on a set closed-under-negation
    candidate family:

    (C0) no empty member, (C1) closure under negation, (C2) support-comparable
    members equal up to sign, (C3) elimination for every pair and pivot.
    """
    violations = []
    family = set(members)
    for x in members:
        if x.support_mask == 0:
            violations.append("C0: empty sign vector present")
            break
    for x in members:
        if -x not in family:
            violations.append(f"C1: negation of {x} missing")
    for x, y in combinations(members, 2):
        if x.support_mask & ~y.support_mask == 0 or y.support_mask & ~x.support_mask == 0:
            if x != y and x != -y:
                violations.append(f"C2: comparable supports, {x} vs {y}")
    for x in members:
        for y in members:
            if x == -y:
                continue
            pivots = x.plus & y.minus
            while pivots:
                e_bit = pivots & -pivots
                pivots ^= e_bit
                zp_bound = (x.plus | y.plus) & ~e_bit
                zm_bound = (x.minus | y.minus) & ~e_bit
                if not any(
                    z.plus & ~zp_bound == 0 and z.minus & ~zm_bound == 0
                    for z in members
                ):
                    violations.append(
                        f"C3: no eliminant for {x}, {y} at element {e_bit.bit_length()}"
                    )
    return AxiomReport(not violations, violations)


def is_face(cs: CircuitSet, f_set) -> bool:
    """Las Vergnas face test: the vector positive off F and zero on F must be
    orthogonal to every circuit (S and H both empty or both nonempty)."""
    f_mask = 0
    for e in f_set:
        if not 1 <= e <= cs.n:
            raise DomainError(f"element {e} outside ground set [1..{cs.n}]")
        f_mask |= 1 << (e - 1)
    y = SignVector(cs.n, ((1 << cs.n) - 1) & ~f_mask, 0)
    for x in cs.members:
        sep, agr, _ = orthogonality_degree(x, y)
        if (sep == 0) != (agr == 0):
            return False
    return True
