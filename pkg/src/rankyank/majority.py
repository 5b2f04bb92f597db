"""Simple-majority aggregation and the forced-ranking verdict.

The election matrix counts strict preferences only; a criterion that ties two
alternatives counts for neither. Socially, ``i`` beats ``k`` when strictly more
criteria put ``i`` first, and the two are tied when the counts are equal.

The verdict rests on the weak-majority digraph (edge ``i -> k`` whenever ``i``
beats or ties ``k``). Between any two alternatives there is at least one edge,
so its strongly connected components line up in a single chain. A forced
ranking can reward the top link and remove the bottom link of that chain; when
the chain has one link nobody can be singled out.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .exceptions import DimensionMismatchError, RankYankError
from .model import Preference, Profile

__all__ = [
    "ElectionMatrix",
    "MajorityRelation",
    "Outcome",
    "OutcomeClass",
    "WhipVerdict",
    "election_matrix",
    "majority_relation",
    "classify_outcome",
    "whip_verdict",
    "strongly_connected_components",
]


@dataclass(frozen=True)
class ElectionMatrix:
    """``counts[i][k]``: number of criteria ranking ``i`` strictly before ``k``."""

    counts: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        counts = tuple(tuple(int(x) for x in row) for row in self.counts)
        object.__setattr__(self, "counts", counts)
        m = len(counts)
        if m < 2 or any(len(r) != m for r in counts):
            raise DimensionMismatchError("election matrix must be square with m >= 2")
        for i in range(m):
            if counts[i][i] != 0:
                raise RankYankError(f"diagonal entry ({i},{i}) must be 0")
            for k in range(i + 1, m):
                a, b = counts[i][k], counts[k][i]
                if a < 0 or b < 0 or a + b > self.n:
                    raise RankYankError(f"entries ({i},{k})={a} and ({k},{i})={b} inconsistent with n={self.n}")

    @property
    def m(self) -> int:
        return len(self.counts)

    def __getitem__(self, ik) -> int:
        i, k = ik
        return self.counts[i][k]

    def ties(self, i: int, k: int) -> int:
        """Criteria placing ``i`` and ``k`` in the same class."""
        return self.n - self.counts[i][k] - self.counts[k][i]


def election_matrix(profile: Profile) -> ElectionMatrix:
    m = profile.m
    acc = [[0] * m for _ in range(m)]
    for order, mult in profile.entries:
        lv = order.levels
        for i in range(m):
            row = acc[i]
            li = lv[i]
            for k in range(m):
                if li < lv[k]:
                    row[k] += mult
    return ElectionMatrix(tuple(tuple(r) for r in acc), profile.n)


@dataclass(frozen=True)
class MajorityRelation:
    """Social comparison of every ordered pair; the diagonal holds ``None``."""

    grid: tuple[tuple[Preference | None, ...], ...]

    @property
    def m(self) -> int:
        return len(self.grid)

    def __getitem__(self, ik) -> Preference | None:
        i, k = ik
        return self.grid[i][k]

    def beats(self, i: int, k: int) -> bool:
        return self.grid[i][k] is Preference.PREFERRED

    def tied(self, i: int, k: int) -> bool:
        return self.grid[i][k] is Preference.INDIFFERENT

    def symbols(self) -> list[list[str]]:
        """``>``, ``=``, ``<`` per pair and ``""`` on the diagonal."""
        return [["" if p is None else p.value for p in row] for row in self.grid]

    def weak_successors(self, i: int) -> list[int]:
        return [k for k, p in enumerate(self.grid[i]) if p is Preference.PREFERRED or p is Preference.INDIFFERENT]


def majority_relation(em: ElectionMatrix) -> MajorityRelation:
    m = em.m
    grid = []
    for i in range(m):
        row: list[Preference | None] = []
        for k in range(m):
            if i == k:
                row.append(None)
            elif em.counts[i][k] > em.counts[k][i]:
                row.append(Preference.PREFERRED)
            elif em.counts[i][k] < em.counts[k][i]:
                row.append(Preference.DISPREFERRED)
            else:
                row.append(Preference.INDIFFERENT)
        grid.append(tuple(row))
    return MajorityRelation(tuple(grid))


def strongly_connected_components(successors: list[list[int]]) -> list[list[int]]:
    """Kosaraju's algorithm; components come out in topological order (sources first)."""
    m = len(successors)
    predecessors: list[list[int]] = [[] for _ in range(m)]
    for v, succ in enumerate(successors):
        for w in succ:
            predecessors[w].append(v)

    seen = [False] * m
    finish: list[int] = []
    for root in range(m):
        if seen[root]:
            continue
        seen[root] = True
        stack = [(root, iter(successors[root]))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, iter(successors[w])))
                    break
            else:
                stack.pop()
                finish.append(v)

    assigned = [False] * m
    components = []
    for root in reversed(finish):
        if assigned[root]:
            continue
        assigned[root] = True
        comp = [root]
        stack = [root]
        while stack:
            v = stack.pop()
            for w in predecessors[v]:
                if not assigned[w]:
                    assigned[w] = True
                    comp.append(w)
                    stack.append(w)
        components.append(sorted(comp))
    return components


class Outcome(enum.Enum):
    ALL_INDIFFERENT = "AllIndifferent"
    PURE_CYCLE = "PureCycle"
    MIXED_CONNECTED = "MixedConnected"
    SEPARABLE = "Separable"


@dataclass(frozen=True)
class OutcomeClass:
    """Shape of the social outcome.

    ``strata`` is the chain of strongly connected components of the
    weak-majority digraph, best first; it has a single member unless the tag
    is ``SEPARABLE``.
    """

    tag: Outcome
    strata: tuple[frozenset[int], ...]


def classify_outcome(rel: MajorityRelation) -> OutcomeClass:
    m = rel.m
    components = strongly_connected_components([rel.weak_successors(i) for i in range(m)])
    strata = tuple(frozenset(c) for c in components)
    if len(strata) > 1:
        return OutcomeClass(Outcome.SEPARABLE, strata)
    pairs = [rel.grid[i][k] for i in range(m) for k in range(i + 1, m)]
    if all(p is Preference.INDIFFERENT for p in pairs):
        tag = Outcome.ALL_INDIFFERENT
    elif not any(p is Preference.INDIFFERENT for p in pairs):
        tag = Outcome.PURE_CYCLE
    else:
        tag = Outcome.MIXED_CONNECTED
    return OutcomeClass(tag, strata)


@dataclass(frozen=True)
class WhipVerdict:
    none_whipped: bool
    rewarded: frozenset[int]
    yanked: frozenset[int]


def whip_verdict(oc: OutcomeClass) -> WhipVerdict:
    """Nobody is whipped unless the outcome splits into two or more strata."""
    if oc.tag is not Outcome.SEPARABLE:
        everyone = frozenset().union(*oc.strata)
        return WhipVerdict(True, everyone, everyone)
    return WhipVerdict(False, oc.strata[0], oc.strata[-1])


def analyze_majority(profile: Profile) -> tuple[ElectionMatrix, MajorityRelation, OutcomeClass, WhipVerdict]:
    """Election matrix through verdict in one call."""
    em = election_matrix(profile)
    rel = majority_relation(em)
    oc = classify_outcome(rel)
    return em, rel, oc, whip_verdict(oc)
