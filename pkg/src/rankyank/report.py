"""Assemble the full analysis of a profile and serialise it.

The JSON document has a fixed key order; rationals are ``"p/q"`` strings and
positions are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conditions import ConditionReport, full_condition_report
from .majority import ElectionMatrix, MajorityRelation, OutcomeClass, WhipVerdict, analyze_majority
from .model import AlternativeRoster, Profile
from .prefmaps import RationalMatrix, format_rational, mean_matrix, mean_ranks, sum_matrix

REPORT_KEYS = (
    "roster",
    "n",
    "m",
    "election_matrix",
    "sum_matrix",
    "mean_matrix",
    "majority_relation",
    "outcome_class",
    "strata",
    "none_whipped",
    "condition_report",
    "mean_ranks",
)


@dataclass(frozen=True)
class AggregateReport:
    profile: Profile
    election: ElectionMatrix
    sum: RationalMatrix
    mean: RationalMatrix
    relation: MajorityRelation
    outcome: OutcomeClass
    verdict: WhipVerdict
    conditions: ConditionReport

    @property
    def mean_ranks(self):
        return mean_ranks(self.mean)

    def to_dict(self) -> dict:
        names = self.profile.roster.names
        doc = {
            "roster": list(names),
            "n": self.profile.n,
            "m": self.profile.m,
            "election_matrix": [list(r) for r in self.election.counts],
            "sum_matrix": self.sum.to_strings(),
            "mean_matrix": self.mean.to_strings(),
            "majority_relation": [[None if s == "" else s for s in row] for row in self.relation.symbols()],
            "outcome_class": self.outcome.tag.value,
            "strata": [[names[i] for i in sorted(s)] for s in self.outcome.strata],
            "none_whipped": self.verdict.none_whipped,
            "condition_report": condition_report_dict(self.conditions, self),
            "mean_ranks": [format_rational(r) for r in self.mean_ranks],
        }
        return doc


def analyze(profile: Profile) -> AggregateReport:
    em, rel, oc, verdict = analyze_majority(profile)
    return AggregateReport(
        profile=profile,
        election=em,
        sum=sum_matrix(profile),
        mean=mean_matrix(profile),
        relation=rel,
        outcome=oc,
        verdict=verdict,
        conditions=full_condition_report(profile),
    )


def condition_report_dict(report: ConditionReport, agg: AggregateReport) -> dict:
    names = agg.profile.roster.names
    witnesses = {}
    w = report.election_symmetric.witness
    if w is not None:
        i, k = w
        witnesses["election_symmetric"] = {
            "pair": [names[i], names[k]],
            "counts": [agg.election[i, k], agg.election[k, i]],
        }
    w = report.mean_uniform.witness
    if w is not None:
        i, k = w
        witnesses["mean_uniform"] = {
            "alternative": names[i],
            "position": k + 1,
            "value": format_rational(agg.mean[i, k]),
        }
    w = report.dual_relation.witness
    if w is not None:
        i, k, mirror = w
        witnesses["dual_relation"] = {
            "alternative": names[i],
            "positions": [k + 1, mirror + 1],
            "values": [format_rational(agg.sum[i, k]), format_rational(agg.sum[i, mirror])],
        }
    w = report.borda_equal.witness
    if w is not None:
        i, k = w
        ranks = agg.mean_ranks
        witnesses["borda_equal"] = {
            "pair": [names[i], names[k]],
            "mean_ranks": [format_rational(ranks[i]), format_rational(ranks[k])],
        }
    return {**report.flags(), "any_sufficient": report.any_sufficient, "witnesses": witnesses}


def _matrix_block(title: str, rows, roster: AlternativeRoster, header) -> list[str]:
    cells = [[str(x) for x in r] for r in rows]
    width = max([len(c) for r in cells for c in r] + [len(str(h)) for h in header])
    label = max(len(n) for n in roster.names)
    lines = [title, " " * (label + 2) + "  ".join(str(h).rjust(width) for h in header)]
    for name, r in zip(roster.names, cells):
        lines.append(f"{name.ljust(label)}  " + "  ".join(c.rjust(width) for c in r))
    return lines


def render_pretty(agg: AggregateReport) -> str:
    roster = agg.profile.roster
    names = roster.names
    m = agg.profile.m
    out = [f"{m} alternatives, {agg.profile.n} criteria", ""]
    out += _matrix_block("election matrix (row ranked before column)", agg.election.counts, roster, names)
    out.append("")
    out += _matrix_block("sum matrix (alternative x position)", agg.sum.rows, roster, range(1, m + 1))
    out.append("")
    out += _matrix_block("majority relation", agg.relation.symbols(), roster, names)
    out.append("")
    strata = "  >>  ".join("{" + ", ".join(names[i] for i in sorted(s)) + "}" for s in agg.outcome.strata)
    out.append(f"outcome: {agg.outcome.tag.value}   strata: {strata}")
    if agg.verdict.none_whipped:
        out.append("verdict: none whipped")
    else:
        rewarded = ", ".join(names[i] for i in sorted(agg.verdict.rewarded))
        yanked = ", ".join(names[i] for i in sorted(agg.verdict.yanked))
        out.append(f"verdict: rewarded {rewarded}; yanked {yanked}")
    out.append("mean ranks: " + ", ".join(f"{n}={r}" for n, r in zip(names, agg.mean_ranks)))
    out.append("conditions: " + ", ".join(f"{k}={'yes' if v else 'no'}" for k, v in agg.conditions.flags().items()))
    return "\n".join(out) + "\n"
