"""Alternatives, weak orders and profiles.

Alternatives are addressed by 0-based position everywhere; labels live only on
the :class:`AlternativeRoster`. All objects here are immutable.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .exceptions import (
    DuplicateAlternativeError,
    EmptyClassError,
    IndexOutOfRangeError,
    MissingAlternativeError,
    RankYankError,
    SameAlternativeError,
)


class Preference(enum.Enum):
    """Outcome of comparing two alternatives, individually or socially."""

    PREFERRED = ">"
    INDIFFERENT = "="
    DISPREFERRED = "<"

    def flip(self) -> Preference:
        if self is Preference.PREFERRED:
            return Preference.DISPREFERRED
        if self is Preference.DISPREFERRED:
            return Preference.PREFERRED
        return self


@dataclass(frozen=True)
class AlternativeRoster:
    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(names) < 2:
            raise RankYankError(f"need at least 2 alternatives, got {len(names)}")
        for name in names:
            if not isinstance(name, str) or not name:
                raise RankYankError(f"alternative labels must be non-empty strings, got {name!r}")
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise RankYankError(f"duplicate alternative labels: {dupes}")

    @classmethod
    def default(cls, m: int) -> AlternativeRoster:
        """Roster ``x1 .. xm``."""
        return cls(tuple(f"x{i + 1}" for i in range(m)))

    @property
    def m(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __getitem__(self, i):
        return self.names[i]


def _check_index(i, m: int) -> int:
    if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < m:
        raise IndexOutOfRangeError(i, m)
    return i


@dataclass(frozen=True)
class WeakOrder:
    """A ranking of all ``m`` alternatives with ties.

    ``classes[0]`` holds the most preferred indifference class. Construction
    validates that the classes partition ``0..m-1``.
    """

    classes: tuple[frozenset[int], ...]
    levels: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        classes = tuple(frozenset(c) for c in self.classes)
        object.__setattr__(self, "classes", classes)
        m = sum(len(c) for c in classes)
        object.__setattr__(self, "levels", _levels(classes, m))

    @property
    def m(self) -> int:
        return len(self.levels)

    @classmethod
    def from_levels(cls, levels: Sequence[int]) -> WeakOrder:
        """Build from per-alternative rank levels; smaller is better, equal means tied.

        Levels need not be contiguous: ``[3, 1, 1]`` is ``x2 ~ x3 > x1``.
        """
        levels = list(levels)
        distinct = sorted(set(levels))
        classes = [frozenset(i for i, lv in enumerate(levels) if lv == d) for d in distinct]
        return make_weak_order(classes, len(levels))

    @classmethod
    def strict(cls, ranking: Sequence[int]) -> WeakOrder:
        """Linear order listing alternatives best first."""
        return make_weak_order([{i} for i in ranking], len(ranking))

    def reversed(self) -> WeakOrder:
        return WeakOrder(self.classes[::-1])

    def is_strict(self) -> bool:
        return len(self.classes) == self.m

    def pairwise(self, i: int, k: int) -> Preference:
        return pairwise(self, i, k)

    def __str__(self):
        return " > ".join(" = ".join(f"x{i + 1}" for i in sorted(c)) for c in self.classes)


def _levels(classes, m) -> tuple[int, ...]:
    levels = [-1] * m
    for pos, cls in enumerate(classes):
        if not cls:
            raise EmptyClassError(pos)
        for i in cls:
            _check_index(i, m)
            if levels[i] != -1:
                raise DuplicateAlternativeError(i, pos)
            levels[i] = pos
    missing = [i for i, lv in enumerate(levels) if lv == -1]
    if missing:
        raise MissingAlternativeError(missing)
    return tuple(levels)


def make_weak_order(classes: Iterable[Iterable[int]], m: int) -> WeakOrder:
    """Validate ``classes`` as an ordered partition of ``0..m-1`` and wrap it.

    Raises :class:`EmptyClassError`, :class:`DuplicateAlternativeError`,
    :class:`MissingAlternativeError` or :class:`IndexOutOfRangeError`.
    """
    if m < 2:
        raise RankYankError(f"need at least 2 alternatives, got m={m}")
    classes = [list(c) for c in classes]
    _levels(classes, m)
    return WeakOrder(tuple(frozenset(c) for c in classes))


def pairwise(order: WeakOrder, i: int, k: int) -> Preference:
    """How ``order`` compares alternative ``i`` with alternative ``k``."""
    m = order.m
    _check_index(i, m)
    _check_index(k, m)
    if i == k:
        raise SameAlternativeError(i)
    li, lk = order.levels[i], order.levels[k]
    if li < lk:
        return Preference.PREFERRED
    if li > lk:
        return Preference.DISPREFERRED
    return Preference.INDIFFERENT


@dataclass(frozen=True)
class Profile:
    """A multiset of criterion rankings over one roster.

    ``entries`` pairs each :class:`WeakOrder` with a positive multiplicity;
    identical rankings may be compressed or repeated, downstream counts
    weight by multiplicity either way.
    """

    roster: AlternativeRoster
    entries: tuple[tuple[WeakOrder, int], ...]

    def __post_init__(self):
        entries = tuple((order, mult) for order, mult in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise RankYankError("a profile needs at least one criterion")
        m = self.roster.m
        for j, (order, mult) in enumerate(entries):
            if not isinstance(order, WeakOrder):
                raise RankYankError(f"entry {j} is not a WeakOrder: {order!r}")
            if order.m != m:
                raise RankYankError(f"entry {j} ranks {order.m} alternatives, roster has {m}")
            if isinstance(mult, bool) or not isinstance(mult, int) or mult < 1:
                raise RankYankError(f"entry {j} multiplicity must be a positive integer, got {mult!r}")

    @classmethod
    def from_orders(cls, orders: Iterable[WeakOrder], roster: AlternativeRoster | None = None) -> Profile:
        """One criterion per order, each with multiplicity 1."""
        orders = list(orders)
        if roster is None:
            if not orders:
                raise RankYankError("a profile needs at least one criterion")
            roster = AlternativeRoster.default(orders[0].m)
        return cls(roster, tuple((o, 1) for o in orders))

    @property
    def m(self) -> int:
        return self.roster.m

    @property
    def n(self) -> int:
        return sum(mult for _, mult in self.entries)

    @property
    def orders(self) -> tuple[WeakOrder, ...]:
        return tuple(o for o, _ in self.entries)

    def expanded(self) -> list[WeakOrder]:
        """One order per criterion, multiplicities unrolled."""
        return [o for o, mult in self.entries for _ in range(mult)]

    def reversed(self) -> Profile:
        return Profile(self.roster, tuple((o.reversed(), mult) for o, mult in self.entries))
