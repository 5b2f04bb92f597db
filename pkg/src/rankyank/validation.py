"""Coerce the input shapes the estimator accepts into a :class:`Profile`."""

from __future__ import annotations

import numpy as np

from .exceptions import DimensionMismatchError, RankYankError
from .model import AlternativeRoster, Profile, WeakOrder


def check_rankings(X) -> np.ndarray:
    """Validate an ``(n_criteria, n_alternatives)`` array of rank levels.

    Smaller levels are better; equal levels within a row are ties. Levels
    must be finite integers (float arrays holding integral values are
    accepted).
    """
    arr = np.asarray(X)
    if arr.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-D array of rank levels, got shape {arr.shape}")
    if arr.shape[0] < 1:
        raise RankYankError("need at least one criterion")
    if arr.shape[1] < 2:
        raise RankYankError(f"need at least 2 alternatives, got {arr.shape[1]}")
    if arr.dtype.kind == "f":
        if not np.all(np.isfinite(arr)) or not np.all(arr == np.round(arr)):
            raise RankYankError("rank levels must be finite integers")
        arr = arr.astype(np.int64)
    elif arr.dtype.kind not in "iu":
        raise RankYankError(f"rank levels must be integers, got dtype {arr.dtype}")
    return arr


def check_sample_weight(sample_weight, n: int) -> list[int]:
    if sample_weight is None:
        return [1] * n
    w = np.asarray(sample_weight)
    if w.shape != (n,):
        raise DimensionMismatchError(f"sample_weight has shape {w.shape}, expected ({n},)")
    if w.dtype.kind == "f" and not np.all(w == np.round(w)):
        raise RankYankError("sample_weight entries are multiplicities and must be whole numbers")
    if w.dtype.kind not in "iuf" or np.any(w < 1):
        raise RankYankError("sample_weight entries must be positive integers")
    return [int(x) for x in w]


def check_profile(X, sample_weight=None, alternatives=None) -> Profile:
    """Turn ``X`` into a validated :class:`Profile`.

    ``X`` may be a :class:`Profile` (returned as is, weights not allowed), a
    sequence of :class:`WeakOrder`, or an array of rank levels as accepted by
    :func:`check_rankings`. ``sample_weight`` gives per-row multiplicities.
    """
    if isinstance(X, Profile):
        if sample_weight is not None:
            raise RankYankError("sample_weight cannot be combined with a Profile; use its multiplicities")
        if alternatives is not None and tuple(alternatives) != X.roster.names:
            raise RankYankError("alternatives do not match the profile roster")
        return X
    if isinstance(X, (list, tuple)) and X and all(isinstance(o, WeakOrder) for o in X):
        orders = list(X)
    else:
        orders = [WeakOrder.from_levels(row.tolist()) for row in check_rankings(X)]
    m = orders[0].m
    if any(o.m != m for o in orders):
        raise DimensionMismatchError("all rankings must cover the same alternatives")
    roster = AlternativeRoster.default(m) if alternatives is None else AlternativeRoster(tuple(alternatives))
    if roster.m != m:
        raise DimensionMismatchError(f"{roster.m} alternative labels for rankings of {m} alternatives")
    weights = check_sample_weight(sample_weight, len(orders))
    return Profile(roster, tuple(zip(orders, weights)))
