"""Exhaustive verification at small scale and Monte Carlo likelihood estimates.

Weak orders over ``m`` alternatives are ordered set partitions, counted by the
Fubini numbers (3, 13, 75, 541 for m = 2..5). They are addressed by an integer
rank in ``[0, fubini(m))``; enumeration walks the ranks in order and the
sampler draws a uniform rank, so both share one canonical ordering.

Randomness comes from NumPy's PCG64 bit generator, read through
``random_raw`` (the raw 64-bit output stream, which NumPy keeps stable across
releases). Integers are drawn from it by rejection, so estimates are
bit-reproducible for a fixed seed.
"""

from __future__ import annotations

import enum
import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .conditions import check_dual_relation, check_election_symmetry, check_mean_uniform
from .exceptions import RankYankError, ScopeTooLargeError
from .majority import ElectionMatrix, Outcome, analyze_majority
from .model import AlternativeRoster, Profile, WeakOrder
from .prefmaps import mean_matrix, mean_ranks, sum_matrix

RNG_ALGORITHM = "numpy.random.PCG64 raw stream (random_raw), rejection sampling"
MAX_ENUMERATION_M = 5
MAX_PROFILES = 10**7

__all__ = [
    "Culture",
    "EnumerationScope",
    "Estimate",
    "SimulationConfig",
    "VerificationReport",
    "enumerate_weak_orders",
    "estimate_none_whipped_probability",
    "exhaustive_none_whipped_frequency",
    "fubini",
    "has_dominant_subset",
    "unrank_weak_order",
    "verify_implications",
]


@lru_cache(maxsize=None)
def fubini(m: int) -> int:
    """Number of weak orders on ``m`` labelled alternatives."""
    if m == 0:
        return 1
    return sum(math.comb(m, k) * fubini(m - k) for k in range(1, m + 1))


def _unrank_combination(r: int, items: list[int], k: int) -> list[int]:
    # lexicographic order, matching itertools.combinations
    chosen = []
    start = 0
    for slots in range(k, 0, -1):
        for pos in range(start, len(items)):
            block = math.comb(len(items) - pos - 1, slots - 1)
            if r < block:
                chosen.append(items[pos])
                start = pos + 1
                break
            r -= block
    return chosen


def _unrank_partition(r: int, items: list[int]) -> list[list[int]]:
    classes = []
    while items:
        size = len(items)
        for k in range(1, size + 1):
            tail = fubini(size - k)
            block = math.comb(size, k) * tail
            if r < block:
                head = _unrank_combination(r // tail, items, k)
                classes.append(head)
                r %= tail
                items = [x for x in items if x not in head]
                break
            r -= block
    return classes


@lru_cache(maxsize=4096)
def unrank_weak_order(r: int, m: int) -> WeakOrder:
    """The weak order with canonical rank ``r``: first class size ascending, then
    first class members lexicographically, then the rest recursively."""
    if not 0 <= r < fubini(m):
        raise RankYankError(f"rank {r} outside 0..{fubini(m) - 1} for m={m}")
    return WeakOrder(tuple(frozenset(c) for c in _unrank_partition(r, list(range(m)))))


def _unrank_permutation(r: int, m: int) -> WeakOrder:
    items = list(range(m))
    ranking = []
    for size in range(m, 0, -1):
        q, r = divmod(r, math.factorial(size - 1))
        ranking.append(items.pop(q))
    return WeakOrder.strict(ranking)


def enumerate_weak_orders(m: int) -> list[WeakOrder]:
    """Every weak order on ``m`` alternatives, each once, in canonical rank order."""
    if m < 2:
        raise RankYankError(f"need at least 2 alternatives, got m={m}")
    if m > MAX_ENUMERATION_M:
        raise ScopeTooLargeError(f"m={m} exceeds the enumeration limit of {MAX_ENUMERATION_M}")
    return [unrank_weak_order(r, m) for r in range(fubini(m))]


def has_dominant_subset(em: ElectionMatrix) -> bool:
    """Brute force: is there a proper non-empty subset whose every member strictly
    beats every non-member? Exponential in ``m``."""
    m = em.m
    a = em.counts
    for mask in range(1, (1 << m) - 1):
        inside = [i for i in range(m) if mask >> i & 1]
        outside = [k for k in range(m) if not mask >> k & 1]
        if all(a[i][k] > a[k][i] for i in inside for k in outside):
            return True
    return False


@dataclass(frozen=True)
class EnumerationScope:
    m: int
    n: int

    def __post_init__(self):
        if not 2 <= self.m <= MAX_ENUMERATION_M:
            raise ScopeTooLargeError(f"m must lie in 2..{MAX_ENUMERATION_M}, got {self.m}")
        if self.n < 1:
            raise RankYankError(f"n must be positive, got {self.n}")

    def profile_count(self, pool_size: int | None = None) -> int:
        return (fubini(self.m) if pool_size is None else pool_size) ** self.n


IMPLICATIONS = {
    "a": "election symmetric => all indifferent",
    "b": "dual relation => none whipped",
    "c": "dual relation => every mean rank is (m+1)/2",
    "d": "none whipped <=> no proper dominant subset",
    "e": "uniform mean matrix => none whipped",
}


@dataclass
class VerificationReport:
    """Tallies from an exhaustive sweep. Reports over disjoint ranges merge with ``+``."""

    m: int
    n: int
    profiles: int = 0
    none_whipped: int = 0
    election_symmetric: int = 0
    dual_relation: int = 0
    mean_uniform: int = 0
    outcomes: Counter = field(default_factory=Counter)
    violations: Counter = field(default_factory=Counter)
    counterexamples: dict = field(default_factory=dict)

    max_kept: int = 5

    @property
    def ok(self) -> bool:
        return sum(self.violations.values()) == 0

    def _record(self, key: str, orders: tuple[WeakOrder, ...]):
        self.violations[key] += 1
        kept = self.counterexamples.setdefault(key, [])
        if len(kept) < self.max_kept:
            kept.append([str(o) for o in orders])

    def __add__(self, other: VerificationReport) -> VerificationReport:
        if (self.m, self.n) != (other.m, other.n):
            raise RankYankError("cannot merge reports for different scopes")
        merged = VerificationReport(self.m, self.n, max_kept=self.max_kept)
        for name in ("profiles", "none_whipped", "election_symmetric", "dual_relation", "mean_uniform"):
            setattr(merged, name, getattr(self, name) + getattr(other, name))
        merged.outcomes = self.outcomes + other.outcomes
        merged.violations = self.violations + other.violations
        for src in (self, other):
            for key, items in src.counterexamples.items():
                kept = merged.counterexamples.setdefault(key, [])
                kept.extend(items[: self.max_kept - len(kept)])
        return merged

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "profiles": self.profiles,
            "none_whipped": self.none_whipped,
            "election_symmetric": self.election_symmetric,
            "dual_relation": self.dual_relation,
            "mean_uniform": self.mean_uniform,
            "outcomes": {tag.value: self.outcomes.get(tag.value, 0) for tag in Outcome},
            "implications": {
                key: {"statement": text, "violations": self.violations.get(key, 0)}
                for key, text in IMPLICATIONS.items()
            },
            "counterexamples": self.counterexamples,
            "ok": self.ok,
        }


def _check_profile(report: VerificationReport, orders: tuple[WeakOrder, ...], roster: AlternativeRoster):
    profile = Profile.from_orders(orders, roster)
    m = profile.m
    em, _, oc, verdict = analyze_majority(profile)
    summ = sum_matrix(profile)
    mean = mean_matrix(profile)
    symmetric = check_election_symmetry(em).holds
    dual = check_dual_relation(summ).holds
    uniform = check_mean_uniform(mean).holds

    report.profiles += 1
    report.outcomes[oc.tag.value] += 1
    report.none_whipped += verdict.none_whipped
    report.election_symmetric += symmetric
    report.dual_relation += dual
    report.mean_uniform += uniform

    if symmetric and oc.tag is not Outcome.ALL_INDIFFERENT:
        report._record("a", orders)
    if dual and not verdict.none_whipped:
        report._record("b", orders)
    if dual and any(r != Fraction(m + 1, 2) for r in mean_ranks(mean)):
        report._record("c", orders)
    if verdict.none_whipped == has_dominant_subset(em):
        report._record("d", orders)
    if uniform and not verdict.none_whipped:
        report._record("e", orders)


def verify_implications(
    scope: EnumerationScope,
    pool: list[WeakOrder] | None = None,
    start: int = 0,
    stop: int | None = None,
) -> VerificationReport:
    """Check every implication on all ordered ``n``-tuples of weak orders.

    ``pool`` restricts each criterion to the given orders instead of all weak
    orders on ``m`` alternatives. ``start``/``stop`` select a slice of the
    tuple sequence so the sweep can be split; slice reports add up to the
    full report.
    """
    orders = enumerate_weak_orders(scope.m) if pool is None else list(pool)
    if any(o.m != scope.m for o in orders):
        raise RankYankError(f"pool orders must rank {scope.m} alternatives")
    total = scope.profile_count(len(orders))
    if total > MAX_PROFILES:
        raise ScopeTooLargeError(f"{total} profiles exceed the limit of {MAX_PROFILES}")
    roster = AlternativeRoster.default(scope.m)
    report = VerificationReport(scope.m, scope.n)
    tuples = itertools.product(orders, repeat=scope.n)
    for combo in itertools.islice(tuples, start, stop):
        _check_profile(report, combo, roster)
    return report


class Culture(enum.Enum):
    UNIFORM_WEAK_ORDERS = "weak"
    UNIFORM_STRICT_ORDERS = "strict"


@dataclass(frozen=True)
class SimulationConfig:
    m: int
    n: int
    trials: int
    seed: int
    culture: Culture = Culture.UNIFORM_WEAK_ORDERS

    def __post_init__(self):
        object.__setattr__(self, "culture", Culture(self.culture))
        if self.m < 2:
            raise RankYankError(f"need at least 2 alternatives, got m={self.m}")
        if self.n < 1:
            raise RankYankError(f"n must be positive, got {self.n}")
        if self.trials < 1:
            raise RankYankError(f"trials must be positive, got {self.trials}")
        if not 0 <= self.seed < 2**64:
            raise RankYankError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass(frozen=True)
class Estimate:
    hits: int
    trials: int

    @property
    def point(self) -> float:
        return self.hits / self.trials

    @property
    def frequency(self) -> Fraction:
        return Fraction(self.hits, self.trials)

    @property
    def standard_error(self) -> float:
        p = self.point
        return math.sqrt(p * (1 - p) / self.trials)

    def __add__(self, other: Estimate) -> Estimate:
        return Estimate(self.hits + other.hits, self.trials + other.trials)

    def to_dict(self) -> dict:
        return {
            "point": self.point,
            "standard_error": self.standard_error,
            "trials": self.trials,
            "hits": self.hits,
        }


class _RawIntegers:
    """Uniform integers below an arbitrary bound from the PCG64 raw stream."""

    def __init__(self, seed: int, chunk: int = 4096):
        self._bits = np.random.PCG64(seed)
        self._chunk = chunk
        self._buf: list[int] = []

    def _word(self) -> int:
        if not self._buf:
            self._buf = self._bits.random_raw(self._chunk).tolist()[::-1]
        return self._buf.pop()

    def below(self, bound: int) -> int:
        words = max(1, (bound - 1).bit_length() + 63 >> 6)
        span = 1 << (64 * words)
        limit = span - span % bound
        while True:
            x = 0
            for _ in range(words):
                x = x << 64 | self._word()
            if x < limit:
                return x % bound


def _none_whipped(orders, roster) -> bool:
    return analyze_majority(Profile.from_orders(orders, roster))[3].none_whipped


def estimate_none_whipped_probability(config: SimulationConfig) -> Estimate:
    """Fraction of ``trials`` impartial-culture profiles in which nobody is whipped.

    Criteria are drawn independently and uniformly from all weak orders or
    from all strict orders, according to ``config.culture``.
    """
    rng = _RawIntegers(config.seed)
    m = config.m
    roster = AlternativeRoster.default(m)
    if config.culture is Culture.UNIFORM_WEAK_ORDERS:
        bound, draw = fubini(m), unrank_weak_order
    else:
        bound, draw = math.factorial(m), _unrank_permutation

    @lru_cache(maxsize=1 << 16)
    def verdict(ranks: tuple[int, ...]) -> bool:
        return _none_whipped([draw(r, m) for r in ranks], roster)

    hits = 0
    for _ in range(config.trials):
        hits += verdict(tuple(rng.below(bound) for _ in range(config.n)))
    return Estimate(hits, config.trials)


def exhaustive_none_whipped_frequency(m: int, n: int, culture: Culture = Culture.UNIFORM_WEAK_ORDERS) -> Fraction:
    """Exact probability of nobody being whipped, by enumerating every ordered profile."""
    culture = Culture(culture)
    if culture is Culture.UNIFORM_WEAK_ORDERS:
        orders = enumerate_weak_orders(m)
    else:
        if m > MAX_ENUMERATION_M:
            raise ScopeTooLargeError(f"m={m} exceeds the enumeration limit of {MAX_ENUMERATION_M}")
        orders = [WeakOrder.strict(p) for p in itertools.permutations(range(m))]
    total = len(orders) ** n
    if total > MAX_PROFILES:
        raise ScopeTooLargeError(f"{total} profiles exceed the limit of {MAX_PROFILES}")
    roster = AlternativeRoster.default(m)
    hits = sum(_none_whipped(combo, roster) for combo in itertools.product(orders, repeat=n))
    return Fraction(hits, total)
