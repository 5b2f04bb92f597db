from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from paper_profiles import strict, weak
from rankyank.exceptions import RankYankError
from rankyank.majority import (
    ElectionMatrix,
    Outcome,
    analyze_majority,
    classify_outcome,
    election_matrix,
    majority_relation,
    strongly_connected_components,
    whip_verdict,
)
from rankyank.model import Preference, Profile
from strategies import profiles

GT, EQ, LT = Preference.PREFERRED, Preference.INDIFFERENT, Preference.DISPREFERRED


def dominant_subset_exists(em):
    m = em.m
    for size in range(1, m):
        for inside in combinations(range(m), size):
            outside = [k for k in range(m) if k not in inside]
            if all(em[i, k] > em[k, i] for i in inside for k in outside):
                return True
    return False


def nx_strata(rel):
    g = nx.DiGraph()
    g.add_nodes_from(range(rel.m))
    g.add_edges_from((i, k) for i in range(rel.m) for k in rel.weak_successors(i))
    cond = nx.condensation(g)
    return [frozenset(cond.nodes[c]["members"]) for c in nx.topological_sort(cond)]


def test_election_matrix_remark(remark):
    em = election_matrix(remark)
    assert (em[0, 1], em[1, 0]) == (3, 2)
    assert (em[1, 2], em[2, 1]) == (4, 1)
    assert (em[0, 2], em[2, 0]) == (2, 3)
    assert all(em[i, i] == 0 for i in range(3))


def test_election_matrix_ties_count_for_neither():
    em = election_matrix(Profile.from_orders([weak({0, 1}, m=2)]))
    assert em.counts == ((0, 0), (0, 0))
    assert em.ties(0, 1) == 1


def test_election_matrix_example1(example1):
    em = election_matrix(example1)
    assert (em[0, 1], em[1, 0]) == (1, 1)
    assert all(em[i, k] == em[k, i] for i in range(4) for k in range(4))


def test_election_matrix_validation():
    with pytest.raises(RankYankError):
        ElectionMatrix(((1, 0), (0, 0)), n=1)
    with pytest.raises(RankYankError):
        ElectionMatrix(((0, 2), (1, 0)), n=2)


def test_majority_relation_remark_cycle(remark):
    rel = majority_relation(election_matrix(remark))
    assert rel[0, 1] is GT and rel[1, 2] is GT and rel[2, 0] is GT
    assert rel[1, 0] is LT


def test_majority_relation_symmetric_all_ties():
    em = ElectionMatrix(((0, 1, 2), (1, 0, 0), (2, 0, 0)), n=4)
    rel = majority_relation(em)
    assert all(rel[i, k] is EQ for i in range(3) for k in range(3) if i != k)


def test_majority_relation_example2(example2):
    rel = majority_relation(election_matrix(example2))
    assert rel[0, 1] is EQ and rel[0, 2] is EQ and rel[0, 3] is EQ
    assert rel[1, 2] is GT and rel[2, 3] is GT and rel[3, 1] is GT


def test_classify_examples(example1, example2, remark):
    assert classify_outcome(majority_relation(election_matrix(example1))).tag is Outcome.ALL_INDIFFERENT
    assert classify_outcome(majority_relation(election_matrix(remark))).tag is Outcome.PURE_CYCLE
    assert classify_outcome(majority_relation(election_matrix(example2))).tag is Outcome.MIXED_CONNECTED


def test_unanimous_chain_is_separable():
    _, _, oc, verdict = analyze_majority(Profile.from_orders([strict(0, 1, 2)]))
    assert oc.tag is Outcome.SEPARABLE
    assert oc.strata == (frozenset({0}), frozenset({1}), frozenset({2}))
    assert not verdict.none_whipped
    assert verdict.rewarded == {0} and verdict.yanked == {2}


def test_verdicts_of_examples(example2, remark):
    for profile in (example2, remark):
        verdict = analyze_majority(profile)[3]
        assert verdict.none_whipped
        assert verdict.rewarded == verdict.yanked == frozenset(range(profile.m))


def test_separable_with_cycle_inside():
    # x1 beats everyone; x2, x3, x4 cycle among themselves
    orders = [strict(0, 1, 2, 3), strict(0, 2, 3, 1), strict(0, 3, 1, 2)]
    _, _, oc, verdict = analyze_majority(Profile.from_orders(orders))
    assert oc.strata == (frozenset({0}), frozenset({1, 2, 3}))
    assert verdict.rewarded == {0} and verdict.yanked == {1, 2, 3}


def test_scc_simple_graphs():
    assert strongly_connected_components([[1], [2], [0]]) == [[0, 1, 2]]
    assert strongly_connected_components([[], [0], [1]]) == [[2], [1], [0]]


@settings(max_examples=300)
@given(profiles())
def test_strata_match_networkx(profile):
    rel = majority_relation(election_matrix(profile))
    assert list(classify_outcome(rel).strata) == nx_strata(rel)


@settings(max_examples=300)
@given(profiles())
def test_none_whipped_iff_no_dominant_subset(profile):
    em, _, _, verdict = analyze_majority(profile)
    assert verdict.none_whipped == (not dominant_subset_exists(em))


@given(profiles())
def test_top_stratum_dominates(profile):
    em, _, oc, verdict = analyze_majority(profile)
    if not verdict.none_whipped:
        outside = frozenset(range(profile.m)) - verdict.rewarded
        assert all(em[i, k] > em[k, i] for i in verdict.rewarded for k in outside)


@given(profiles())
def test_all_indifferent_iff_symmetric(profile):
    em, _, oc, _ = analyze_majority(profile)
    symmetric = all(em[i, k] == em[k, i] for i in range(em.m) for k in range(em.m))
    assert (oc.tag is Outcome.ALL_INDIFFERENT) == symmetric


@given(profiles())
def test_election_matrix_consistency(profile):
    em = election_matrix(profile)
    n = profile.n
    for i in range(em.m):
        for k in range(em.m):
            if i == k:
                continue
            tied = sum(mult for o, mult in profile.entries if o.levels[i] == o.levels[k])
            assert em[i, k] + em[k, i] + tied == n
            assert (em[i, k] + em[k, i] == n) == (tied == 0)


@given(profiles())
def test_reversal_symmetry(profile):
    _, _, oc, verdict = analyze_majority(profile)
    _, _, roc, rverdict = analyze_majority(profile.reversed())
    assert verdict.none_whipped == rverdict.none_whipped
    assert list(oc.strata) == list(reversed(roc.strata))
    assert verdict.rewarded == rverdict.yanked


@given(profiles())
def test_tag_definitions(profile):
    _, rel, oc, verdict = analyze_majority(profile)
    pairs = [rel[i, k] for i in range(rel.m) for k in range(i + 1, rel.m)]
    if oc.tag is Outcome.ALL_INDIFFERENT:
        assert all(p is EQ for p in pairs)
    elif oc.tag is Outcome.PURE_CYCLE:
        assert EQ not in pairs and len(oc.strata) == 1
    elif oc.tag is Outcome.MIXED_CONNECTED:
        assert EQ in pairs and any(p is not EQ for p in pairs) and len(oc.strata) == 1
    else:
        assert len(oc.strata) >= 2
    assert verdict == whip_verdict(oc)
    assert verdict.none_whipped == (oc.tag is not Outcome.SEPARABLE)
