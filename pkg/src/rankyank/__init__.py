"""Majority aggregation of multi-criteria rankings and forced-ranking ("Rank and Yank") verdicts."""

from .conditions import (
    Check,
    ConditionReport,
    check_borda_equal,
    check_dual_relation,
    check_election_symmetry,
    check_mean_uniform,
    full_condition_report,
)
from .estimator import MajorityRankAggregator
from .exceptions import (
    DimensionMismatchError,
    DuplicateAlternativeError,
    EmptyClassError,
    IndexOutOfRangeError,
    InconsistentRosterError,
    MissingAlternativeError,
    ParseError,
    RankYankError,
    SameAlternativeError,
    ScopeTooLargeError,
)
from .fileformat import load_profile, parse_profile, render_profile
from .majority import (
    ElectionMatrix,
    MajorityRelation,
    Outcome,
    OutcomeClass,
    WhipVerdict,
    classify_outcome,
    election_matrix,
    majority_relation,
    whip_verdict,
)
from .model import AlternativeRoster, Preference, Profile, WeakOrder, make_weak_order, pairwise
from .oracle import (
    Culture,
    EnumerationScope,
    Estimate,
    SimulationConfig,
    enumerate_weak_orders,
    estimate_none_whipped_probability,
    exhaustive_none_whipped_frequency,
    verify_implications,
)
from .prefmaps import PreferenceMap, RationalMatrix, mean_matrix, mean_rank, ppm, preference_map, sum_matrix
from .report import AggregateReport, analyze

__version__ = "0.1.0"
