"""Sufficient conditions for nobody being whipped, and related balance checks.

Each checker returns a :class:`Check`: whether the condition holds and, when it
does not, the lexicographically smallest violation (0-based indices).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .majority import ElectionMatrix, election_matrix
from .model import Profile
from .prefmaps import RationalMatrix, mean_matrix, mean_ranks, sum_matrix

__all__ = [
    "Check",
    "ConditionReport",
    "check_election_symmetry",
    "check_mean_uniform",
    "check_dual_relation",
    "check_borda_equal",
    "full_condition_report",
]


class Check(NamedTuple):
    holds: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self):
        return self.holds


def check_election_symmetry(em: ElectionMatrix) -> Check:
    """Every pair is split evenly; witness ``(i, k)`` with ``i < k``."""
    m = em.m
    for i in range(m):
        for k in range(i + 1, m):
            if em.counts[i][k] != em.counts[k][i]:
                return Check(False, (i, k))
    return Check(True)


def check_mean_uniform(mean: RationalMatrix) -> Check:
    """Every entry equals ``1/m``; witness ``(alternative, column)``."""
    target = Fraction(1, mean.m)
    for i, row in enumerate(mean.rows):
        for k, p in enumerate(row):
            if p != target:
                return Check(False, (i, k))
    return Check(True)


def check_dual_relation(matrix: RationalMatrix) -> Check:
    """Each row reads the same left to right and right to left.

    Column ``k`` is paired with column ``m-1-k`` (0-based); an odd middle
    column pairs with itself. Works on the sum or the mean matrix alike.
    Witness ``(row, k, m-1-k)`` with ``k`` the left column of the first
    mismatched pair.
    """
    m = matrix.m
    for i, row in enumerate(matrix.rows):
        for k in range(m // 2):
            if row[k] != row[m - 1 - k]:
                return Check(False, (i, k, m - 1 - k))
    return Check(True)


def check_borda_equal(mean: RationalMatrix) -> Check:
    """All mean ranks coincide; witness ``(0, i)`` for the first alternative that differs."""
    ranks = mean_ranks(mean)
    for i, r in enumerate(ranks):
        if r != ranks[0]:
            return Check(False, (0, i))
    return Check(True)


@dataclass(frozen=True)
class ConditionReport:
    election_symmetric: Check
    mean_uniform: Check
    dual_relation: Check
    borda_equal: Check

    @property
    def any_sufficient(self) -> bool:
        """At least one condition that guarantees nobody is whipped holds.

        Equal Borda counts are implied by the dual relation but do not by
        themselves guarantee anything, so they are excluded.
        """
        return bool(self.election_symmetric or self.mean_uniform or self.dual_relation)

    def flags(self) -> dict[str, bool]:
        return {
            "election_symmetric": self.election_symmetric.holds,
            "mean_uniform": self.mean_uniform.holds,
            "dual_relation": self.dual_relation.holds,
            "borda_equal": self.borda_equal.holds,
        }

    def witnesses(self) -> dict[str, tuple[int, ...]]:
        return {
            name: check.witness
            for name, check in (
                ("election_symmetric", self.election_symmetric),
                ("mean_uniform", self.mean_uniform),
                ("dual_relation", self.dual_relation),
                ("borda_equal", self.borda_equal),
            )
            if check.witness is not None
        }


def full_condition_report(profile: Profile) -> ConditionReport:
    mean = mean_matrix(profile)
    return ConditionReport(
        election_symmetric=check_election_symmetry(election_matrix(profile)),
        mean_uniform=check_mean_uniform(mean),
        dual_relation=check_dual_relation(sum_matrix(profile)),
        borda_equal=check_borda_equal(mean),
    )
