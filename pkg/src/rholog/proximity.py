"""Symbol proximity relations and approximate matching.

A proximity relation assigns degrees in (0, 1] to pairs of symbols.
It is reflexive by convention (every symbol is close to itself with
degree 1), symmetric, and deliberately not transitive. Degree 0 means
the symbols are unrelated. Degrees are carried as ``Decimal`` so that
tests and transcripts compare them exactly, with no float drift.

Proximity of ground terms and sequences is the minimum of the degrees
of all corresponding symbol pairs; any structural mismatch (different
argument counts, term vs sequence shape) gives 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from typing import Iterable, Iterator

from .errors import DegreeRangeError, ThresholdRangeError
from .matching import ONE, ZERO, scored_match_hedge
from .terms import Compound, Subst, Sym, hole_count, is_ground


class ProximityRelation:
    """Symmetric map from symbol pairs to degrees in (0, 1].

    Later declarations for the same pair overwrite earlier ones.
    """

    def __init__(self, entries: Iterable[tuple] = ()):
        self._pairs = {}
        for a, b, degree in entries:
            self.add(a, b, degree)

    @staticmethod
    def _key(a: Sym, b: Sym) -> tuple:
        return (a.name, b.name) if a.name <= b.name else (b.name, a.name)

    def add(self, a, b, degree) -> None:
        a = a if isinstance(a, Sym) else Sym(a)
        b = b if isinstance(b, Sym) else Sym(b)
        degree = Decimal(degree)
        if not (0 < degree <= 1):
            raise DegreeRangeError(
                f"proximity degree must be in (0, 1], got {degree}"
            )
        if a == b:
            return  # reflexivity is implicit and always 1
        self._pairs[self._key(a, b)] = degree

    def degree(self, a: Sym, b: Sym) -> Decimal:
        if a == b:
            return ONE
        return self._pairs.get(self._key(a, b), ZERO)

    def pairs(self):
        return dict(self._pairs)

    def __len__(self) -> int:
        return len(self._pairs)

    def __repr__(self) -> str:
        inner = ", ".join(f"{a}~{b}:{d}" for (a, b), d in sorted(self._pairs.items()))
        return "ProximityRelation(" + inner + ")"


EMPTY_RELATION = ProximityRelation()


@dataclass(frozen=True)
class DegreedMatcher:
    """A matcher together with its approximation degree."""

    subst: Subst
    degree: Decimal


def check_threshold(value: Decimal) -> Decimal:
    value = Decimal(value)
    if not (0 <= value <= 1):
        raise ThresholdRangeError(f"threshold must be in [0, 1], got {value}")
    return value


def prox_match_hedge(rel, pattern, subject, threshold) -> Iterator[DegreedMatcher]:
    """All matchers whose instantiated pattern is close to the subject.

    Every emitted degree ``d`` satisfies ``threshold <= d <= 1``; exact
    matches come out with degree 1. At threshold 1 this emits exactly
    the exact matchers.
    """
    threshold = check_threshold(threshold)
    for subst, degree in scored_match_hedge(pattern, subject, rel.degree, threshold):
        yield DegreedMatcher(subst, degree)


def prox_match_term(rel, pattern, subject, threshold) -> Iterator[DegreedMatcher]:
    yield from prox_match_hedge(rel, (pattern,), (subject,), threshold)


def term_proximity(rel, t1, t2) -> Decimal:
    """Proximity degree of two ground, hole-free terms."""
    for t in (t1, t2):
        if not is_ground(t) or hole_count(t) != 0:
            raise ValueError("term proximity is defined on ground, hole-free terms")
    return _term_degree(rel, t1, t2)


def hedge_proximity(rel, h1, h2) -> Decimal:
    """Proximity degree of two ground, hole-free sequences."""
    for h in (h1, h2):
        if not is_ground(h) or hole_count(h) != 0:
            raise ValueError("hedge proximity is defined on ground, hole-free hedges")
    return _hedge_degree(rel, h1, h2)


def _term_degree(rel, t1, t2) -> Decimal:
    if isinstance(t1, Compound) and isinstance(t2, Compound):
        d = rel.degree(t1.head, t2.head)
        if d == 0:
            return ZERO
        return min(d, _hedge_degree(rel, t1.args, t2.args))
    return ZERO


def _hedge_degree(rel, h1, h2) -> Decimal:
    if len(h1) != len(h2):
        return ZERO
    degree = ONE
    for a, b in zip(h1, h2):
        d = _term_degree(rel, a, b)
        if d == 0:
            return ZERO
        degree = min(degree, d)
    return degree
