"""Program-level syntax: literals, clauses, programs, and queries."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from typing import Union

from .terms import Subst, hole_count, iter_vars


@dataclass(frozen=True)
class RhoAtom:
    """``strategy :: lhs ==> rhs`` (or its negation with ``=\\=>``)."""

    strategy: object
    lhs: tuple
    rhs: tuple
    positive: bool = True


@dataclass(frozen=True)
class PredAtom:
    """Ordinary predicate atom; the head may be a function variable."""

    head: object
    args: tuple = ()


@dataclass(frozen=True)
class NotGoal:
    """Negation as failure around another literal."""

    inner: "Literal"


Literal = Union[RhoAtom, PredAtom, NotGoal]


@dataclass(frozen=True)
class RhoClause:
    strategy: object
    lhs: tuple
    rhs: tuple
    body: tuple = ()


@dataclass(frozen=True)
class PredClause:
    name: str
    params: tuple = ()
    body: tuple = ()


@dataclass(frozen=True)
class StrategyAbbrev:
    """``lhs := rhs`` shorthand, expanded into a clause at load time."""

    lhs: object
    rhs: object


@dataclass(frozen=True)
class SourceProgram:
    clauses: tuple = ()


@dataclass(frozen=True)
class Query:
    """A parsed query: goal literals plus the answer-capture markers.

    ``threshold`` is None for exact-mode queries; threshold queries also
    name the variable that receives the approximation degree.
    """

    goal: tuple
    result_var: str = "Result"
    threshold: Decimal | None = None
    degree_var: str | None = None

    @property
    def wants_degree(self) -> bool:
        return self.degree_var is not None


def literal_vars(lit):
    if isinstance(lit, RhoAtom):
        yield from iter_vars(lit.strategy)
        yield from iter_vars(lit.lhs)
        yield from iter_vars(lit.rhs)
    elif isinstance(lit, PredAtom):
        yield from iter_vars(lit.head)
        yield from iter_vars(lit.args)
    elif isinstance(lit, NotGoal):
        yield from literal_vars(lit.inner)
    else:
        raise TypeError(f"not a literal: {lit!r}")


def goal_vars(literals) -> tuple:
    """Distinct variables of a goal in order of first occurrence."""
    seen = {}
    for lit in literals:
        for v in literal_vars(lit):
            seen.setdefault(v, None)
    return tuple(seen)


def literal_is_ground(lit) -> bool:
    return next(literal_vars(lit), None) is None


def apply_to_literal(subst: Subst, lit):
    if isinstance(lit, RhoAtom):
        return RhoAtom(
            subst.apply_term(lit.strategy),
            subst.apply_hedge(lit.lhs),
            subst.apply_hedge(lit.rhs),
            lit.positive,
        )
    if isinstance(lit, PredAtom):
        return PredAtom(subst.apply_head(lit.head), subst.apply_hedge(lit.args))
    if isinstance(lit, NotGoal):
        return NotGoal(apply_to_literal(subst, lit.inner))
    raise TypeError(f"not a literal: {lit!r}")


def clause_vars(clause) -> tuple:
    """Distinct variables of a clause in order of first occurrence."""
    seen = {}

    def take(it):
        for v in it:
            seen.setdefault(v, None)

    if isinstance(clause, RhoClause):
        take(iter_vars(clause.strategy))
        take(iter_vars(clause.lhs))
        take(iter_vars(clause.rhs))
        for lit in clause.body:
            take(literal_vars(lit))
    elif isinstance(clause, PredClause):
        take(iter_vars(clause.params))
        for lit in clause.body:
            take(literal_vars(lit))
    else:
        raise TypeError(f"not a clause: {clause!r}")
    return tuple(seen)


def literal_hole_count(lit) -> int:
    if isinstance(lit, RhoAtom):
        return hole_count(lit.strategy) + hole_count(lit.lhs) + hole_count(lit.rhs)
    if isinstance(lit, PredAtom):
        return hole_count(lit.args)
    if isinstance(lit, NotGoal):
        return literal_hole_count(lit.inner)
    raise TypeError(f"not a literal: {lit!r}")
