"""scikit-learn style front end.

Rows of ``X`` are criteria and columns are alternatives; each entry is the
rank level the criterion gives the alternative (smaller is better, equal
levels tie)::

    >>> import numpy as np
    >>> from rankyank import MajorityRankAggregator
    >>> X = np.array([[1, 2, 3], [1, 2, 3], [3, 1, 2], [3, 1, 2], [2, 3, 1]])
    >>> agg = MajorityRankAggregator().fit(X)
    >>> agg.outcome_.tag.value, agg.none_whipped_
    ('PureCycle', True)
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .exceptions import DimensionMismatchError
from .prefmaps import preference_map
from .report import analyze
from .validation import check_profile


def _as_array(rows, exact: bool) -> np.ndarray:
    if exact:
        out = np.empty((len(rows), len(rows[0])), dtype=object)
        out[:] = [list(r) for r in rows]
        return out
    return np.array([[float(x) for x in r] for r in rows], dtype=np.float64)


class MajorityRankAggregator(TransformerMixin, BaseEstimator):
    """Aggregate criterion rankings by simple majority and decide the forced-ranking verdict.

    Parameters
    ----------
    alternatives : sequence of str, optional
        Labels for the columns of ``X``; defaults to ``x1 .. xm``.
    exact : bool, default True
        Return :class:`fractions.Fraction` object arrays from ``transform``
        and the matrix attributes; ``False`` gives float64.

    Attributes
    ----------
    profile_ : Profile
    n_features_in_ : int
        Number of alternatives.
    election_matrix_ : ndarray of int, shape (m, m)
    sum_matrix_, mean_matrix_ : ndarray, shape (m, m)
        Alternative x position matrices of summed / averaged PPMs.
    mean_ranks_ : ndarray, shape (m,)
    outcome_ : OutcomeClass
    none_whipped_ : bool
    rewarded_, yanked_ : frozenset of int
    conditions_ : ConditionReport
    report_ : AggregateReport
    """

    def __init__(self, alternatives=None, exact=True):
        self.alternatives = alternatives
        self.exact = exact

    def fit(self, X, y=None, sample_weight=None):
        """``sample_weight`` holds integer multiplicities of the rows of ``X``."""
        profile = check_profile(X, sample_weight=sample_weight, alternatives=self.alternatives)
        agg = analyze(profile)
        self.profile_ = profile
        self.report_ = agg
        self.n_features_in_ = profile.m
        self.election_matrix_ = np.array(agg.election.counts, dtype=np.int64)
        self.sum_matrix_ = _as_array(agg.sum.rows, self.exact)
        self.mean_matrix_ = _as_array(agg.mean.rows, self.exact)
        self.mean_ranks_ = _as_array([agg.mean_ranks], self.exact)[0]
        self.majority_relation_ = agg.relation
        self.outcome_ = agg.outcome
        self.none_whipped_ = agg.verdict.none_whipped
        self.rewarded_ = agg.verdict.rewarded
        self.yanked_ = agg.verdict.yanked
        self.conditions_ = agg.conditions
        return self

    def transform(self, X):
        """Tie-averaged position of every alternative under every criterion.

        Row ``j`` of the result is the expected 1-based position of each
        alternative in criterion ``j``'s ranking when tied alternatives share
        their block of positions evenly.
        """
        check_is_fitted(self, "profile_")
        profile = check_profile(X, alternatives=self.alternatives)
        if profile.m != self.n_features_in_:
            raise DimensionMismatchError(f"X ranks {profile.m} alternatives, fitted on {self.n_features_in_}")
        rows = []
        for order in profile.expanded():
            pm = preference_map(order)
            rows.append([Fraction(min(block) + max(block), 2) for block in pm.positions])
        return _as_array(rows, self.exact)

    def predict(self, X=None):
        """Stratum index per alternative (0 = rewarded stratum) for ``X``, or for
        the fitted profile when ``X`` is omitted."""
        if X is None:
            check_is_fitted(self, "profile_")
            oc = self.outcome_
        else:
            oc = analyze(check_profile(X, alternatives=self.alternatives)).outcome
        labels = np.empty(sum(len(s) for s in oc.strata), dtype=np.int64)
        for level, stratum in enumerate(oc.strata):
            for i in stratum:
                labels[i] = level
        return labels

    def report(self) -> dict:
        """The JSON-ready report document for the fitted profile."""
        check_is_fitted(self, "profile_")
        return self.report_.to_dict()
