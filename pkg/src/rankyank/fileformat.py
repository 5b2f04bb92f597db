"""Line-oriented profile files.

Each payload line is ``<multiplicity>: <ranking>``, for example::

    # two criteria agree, one dissents
    2: a > b = c > d
    1: d > c > b = a

``>`` separates indifference classes (best first), ``=`` joins tied
alternatives, ``#`` starts a comment. Every line must rank the same
alternatives; the roster lists them in order of first appearance.
"""

from __future__ import annotations

import os
import re

from .exceptions import InconsistentRosterError, ParseError
from .model import AlternativeRoster, Profile, WeakOrder

_NAME = re.compile(r"[^\s>=#:]+")


def _parse_ranking(text: str, lineno: int) -> list[list[str]]:
    groups = []
    for group in text.split(">"):
        names = []
        for piece in group.split("="):
            tokens = piece.split()
            if len(tokens) != 1 or not _NAME.fullmatch(tokens[0]):
                raise ParseError(f"expected one alternative name between separators, got {piece.strip()!r}", lineno)
            names.append(tokens[0])
        groups.append(names)
    return groups


def parse_profile(text: str) -> Profile:
    """Parse profile text; raises :class:`ParseError` or :class:`InconsistentRosterError`."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, ranking = line.partition(":")
        if not sep:
            raise ParseError("expected '<multiplicity>: <ranking>'", lineno)
        head = head.strip()
        if not head.isdigit() or int(head) < 1:
            raise ParseError(f"multiplicity must be a positive integer, got {head!r}", lineno)
        groups = _parse_ranking(ranking, lineno)
        flat = [name for g in groups for name in g]
        if len(set(flat)) != len(flat):
            dupes = sorted({x for x in flat if flat.count(x) > 1})
            raise ParseError(f"alternative listed twice: {', '.join(dupes)}", lineno)
        rows.append((lineno, int(head), groups, flat))

    if not rows:
        raise ParseError("no rankings found", max(1, len(text.splitlines())))

    first_line, _, _, first_flat = rows[0]
    expected = set(first_flat)
    for lineno, _, _, flat in rows[1:]:
        if set(flat) != expected:
            missing = sorted(expected - set(flat))
            extra = sorted(set(flat) - expected)
            detail = "; ".join(
                part
                for part in (
                    f"missing {', '.join(missing)}" if missing else "",
                    f"unexpected {', '.join(extra)}" if extra else "",
                )
                if part
            )
            raise InconsistentRosterError(f"ranks a different set of alternatives than line {first_line} ({detail})", lineno)

    if len(first_flat) < 2:
        raise ParseError("need at least 2 alternatives", first_line)
    roster = AlternativeRoster(tuple(first_flat))
    index = {name: i for i, name in enumerate(roster.names)}
    entries = tuple(
        (WeakOrder(tuple(frozenset(index[name] for name in g) for g in groups)), mult)
        for _, mult, groups, _ in rows
    )
    return Profile(roster, entries)


def load_profile(path: str | os.PathLike) -> Profile:
    with open(path, encoding="utf-8") as fh:
        return parse_profile(fh.read())


def format_order(order: WeakOrder, roster: AlternativeRoster) -> str:
    return " > ".join(" = ".join(roster[i] for i in sorted(cls)) for cls in order.classes)


def render_profile(profile: Profile) -> str:
    """Inverse of :func:`parse_profile` (comments are not preserved)."""
    return "".join(f"{mult}: {format_order(order, profile.roster)}\n" for order, mult in profile.entries)
