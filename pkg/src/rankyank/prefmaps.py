"""Preference maps, preference probability maps (PPMs) and their sum/mean matrices.

A criterion's weak order places each alternative on a block of consecutive
ranking positions; tied alternatives share the block and occupy each of its
positions with equal probability. The PPM of the order is the resulting
alternatives x positions probability matrix. Summing the PPMs of a profile
gives the sum matrix (expected number of criteria ranking alternative ``i`` at
position ``k``), dividing by ``n`` gives the mean matrix.

Everything is exact: entries are :class:`fractions.Fraction`. Positions are
1-based in :class:`PreferenceMap` and 0-based as matrix column indices.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import DimensionMismatchError, IndexOutOfRangeError, RankYankError
from .model import Profile, WeakOrder

__all__ = [
    "PreferenceMap",
    "RationalMatrix",
    "format_rational",
    "parse_rational",
    "preference_map",
    "ppm",
    "sum_matrix",
    "mean_matrix",
    "mean_rank",
    "mean_ranks",
]


def format_rational(q: Fraction) -> str:
    """Canonical ``"p/q"`` text, always with a denominator."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True)
class RationalMatrix:
    """Square matrix of exact rationals.

    ``role`` is a free-form tag (``"ppm"``, ``"sum"``, ``"mean"``) carried for
    reporting; it does not take part in equality.
    """

    rows: tuple[tuple[Fraction, ...], ...]
    role: str = ""

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        m = len(rows)
        if m == 0 or any(len(r) != m for r in rows):
            raise DimensionMismatchError(f"matrix must be square and non-empty, got row lengths {[len(r) for r in rows]}")
        if any(x < 0 for r in rows for x in r):
            raise RankYankError("matrix entries must be non-negative")

    def __eq__(self, other):
        if isinstance(other, RationalMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows)

    def __getitem__(self, ik):
        i, k = ik
        return self.rows[i][k]

    def row_sums(self) -> list[Fraction]:
        return [sum(r, Fraction(0)) for r in self.rows]

    def col_sums(self) -> list[Fraction]:
        return [sum(col, Fraction(0)) for col in zip(*self.rows)]

    def scaled(self, factor, role: str | None = None) -> RationalMatrix:
        f = Fraction(factor)
        return RationalMatrix(tuple(tuple(x * f for x in r) for r in self.rows), self.role if role is None else role)

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self.rows]

    @classmethod
    def from_strings(cls, rows: Iterable[Iterable[str]], role: str = "") -> RationalMatrix:
        return cls(tuple(tuple(parse_rational(x) for x in r) for r in rows), role)

    def __str__(self):
        cells = [[str(x) for x in r] for r in self.rows]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("  ".join(c.rjust(width) for c in r) for r in cells)


@dataclass(frozen=True)
class PreferenceMap:
    """Per alternative, the 1-based ranking positions it may occupy."""

    positions: tuple[frozenset[int], ...]

    @property
    def m(self) -> int:
        return len(self.positions)

    def __getitem__(self, i) -> frozenset[int]:
        return self.positions[i]


def preference_map(order: WeakOrder) -> PreferenceMap:
    """Positions ``|A|+1 .. |A|+|B|`` for each alternative.

    ``A`` is the set of alternatives strictly above it and ``B`` its own
    indifference class (itself included).
    """
    positions: list[frozenset[int]] = [frozenset()] * order.m
    above = 0
    for cls in order.classes:
        block = frozenset(range(above + 1, above + len(cls) + 1))
        for i in cls:
            positions[i] = block
        above += len(cls)
    return PreferenceMap(tuple(positions))


def ppm(pm: PreferenceMap) -> RationalMatrix:
    """Uniform probability over each alternative's positions."""
    m = pm.m
    rows = []
    for block in pm.positions:
        p = Fraction(1, len(block))
        rows.append(tuple(p if k + 1 in block else Fraction(0) for k in range(m)))
    return RationalMatrix(tuple(rows), "ppm")


def _accumulate(entries: Iterable[tuple[WeakOrder, int]], m: int) -> list[list[Fraction]]:
    acc = [[Fraction(0)] * m for _ in range(m)]
    for order, mult in entries:
        above = 0
        for cls in order.classes:
            size = len(cls)
            p = Fraction(mult, size)
            for i in cls:
                row = acc[i]
                for k in range(above, above + size):
                    row[k] += p
            above += size
    return acc


def sum_matrix(profile: Profile) -> RationalMatrix:
    """Entry ``(i, k)``: multiplicity-weighted sum of the criteria PPMs."""
    acc = _accumulate(profile.entries, profile.m)
    return RationalMatrix(tuple(tuple(r) for r in acc), "sum")


def mean_matrix(profile: Profile) -> RationalMatrix:
    """The sum matrix divided by the number of criteria ``n``."""
    return sum_matrix(profile).scaled(Fraction(1, profile.n), role="mean")


def mean_rank(mean: RationalMatrix, i: int) -> Fraction:
    """Expected 1-based position of alternative ``i``: sum over k of k * p[i, k].

    Tied alternatives contribute the average of their shared positions, so
    this is the tie-averaged Borda position (lower is better).
    """
    if not isinstance(mean, RationalMatrix):
        raise DimensionMismatchError(f"expected a RationalMatrix, got {type(mean).__name__}")
    if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < mean.m:
        raise IndexOutOfRangeError(i, mean.m)
    return sum((k * p for k, p in enumerate(mean.rows[i], start=1)), Fraction(0))


def mean_ranks(mean: RationalMatrix) -> list[Fraction]:
    return [mean_rank(mean, i) for i in range(mean.m)]


def stack_ppms(orders: Sequence[WeakOrder]) -> list[RationalMatrix]:
    """PPM of every order, in input order."""
    return [ppm(preference_map(o)) for o in orders]
