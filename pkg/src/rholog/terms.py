"""Unranked terms, sequences, contexts, and substitutions.

The value model is small and uniform:

* a term is ``hole``, an individual variable, a compound
  ``head(item,...,item)`` whose head is a symbol or a function variable,
  or a context application ``c_X(term)``;
* a sequence (hedge) is a flat tuple of items, where an item is a term
  or, in patterns only, a sequence variable; the empty tuple is ``eps``;
* a context is a term containing exactly one ``hole``;
* constants and numerals are compounds with an empty argument tuple.

All values are immutable, so the backtracking engine can share them
freely between branches (and threads) without copying.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .errors import KindMismatchError

VAR_PREFIXES = ("i_", "s_", "f_", "c_")
RESERVED_NAMES = frozenset({"hole", "eps"})


def _check_var_name(name: str, prefix: str) -> None:
    if not name.startswith(prefix) or len(name) <= len(prefix):
        raise ValueError(f"variable name {name!r} must be {prefix}<base>")


@dataclass(frozen=True)
class Sym:
    """Function symbol without fixed arity; numerals are plain symbols."""

    name: str

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("symbol name must be nonempty")
        if self.name in RESERVED_NAMES:
            raise ValueError(f"{self.name!r} is a reserved word")
        if self.name.startswith(VAR_PREFIXES):
            raise ValueError(
                f"symbol name {self.name!r} starts with a variable prefix"
            )

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True)
class IndVar:
    """Individual variable ``i_...``; stands for a single hole-free term."""

    name: str

    def __post_init__(self) -> None:
        _check_var_name(self.name, "i_")

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True)
class SeqVar:
    """Sequence variable ``s_...``; stands for a hole-free sequence."""

    name: str

    def __post_init__(self) -> None:
        _check_var_name(self.name, "s_")

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True)
class FunVar:
    """Function variable ``f_...``; stands for a function head."""

    name: str

    def __post_init__(self) -> None:
        _check_var_name(self.name, "f_")

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True)
class CtxVar:
    """Context variable ``c_...``; stands for a one-hole context."""

    name: str

    def __post_init__(self) -> None:
        _check_var_name(self.name, "c_")

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Hole:
    """The distinguished hole constant."""

    def __repr__(self) -> str:
        return "hole"


HOLE = Hole()


@dataclass(frozen=True)
class Compound:
    """``head(arg,...,arg)`` with an unranked head and a hedge of arguments."""

    head: "FunHead"
    args: "Hedge" = ()

    def __repr__(self) -> str:
        if not self.args:
            return repr(self.head)
        return f"{self.head!r}({','.join(map(repr, self.args))})"


@dataclass(frozen=True)
class CtxApply:
    """Application of a context variable to a single term."""

    var: CtxVar
    arg: "Term"

    def __repr__(self) -> str:
        return f"{self.var!r}({self.arg!r})"


Term = Union[Hole, IndVar, Compound, CtxApply]
Item = Union[Term, SeqVar]
Hedge = "tuple[Item, ...]"
FunHead = Union[Sym, FunVar]
Var = Union[IndVar, SeqVar, FunVar, CtxVar]


def atom(name: str) -> Compound:
    """Constant: a compound with no arguments."""
    return Compound(Sym(name))


def mk(name: str, *args) -> Compound:
    return Compound(Sym(name), seq(*args))


def seq(*items) -> tuple:
    """Build a flat hedge; nested tuples are spliced in place."""
    out = []
    for it in items:
        if isinstance(it, tuple):
            out.extend(it)
        else:
            out.append(it)
    return tuple(out)


def iter_vars(x) -> Iterator[Var]:
    """All variable occurrences of a term, item, head, or hedge, preorder."""
    if isinstance(x, tuple):
        for item in x:
            yield from iter_vars(item)
    elif isinstance(x, (IndVar, SeqVar, FunVar, CtxVar)):
        yield x
    elif isinstance(x, Compound):
        if isinstance(x.head, FunVar):
            yield x.head
        yield from iter_vars(x.args)
    elif isinstance(x, CtxApply):
        yield x.var
        yield from iter_vars(x.arg)
    # Sym and Hole contain no variables


def free_vars(x) -> tuple:
    """Distinct variables of ``x`` in order of first occurrence."""
    return tuple(dict.fromkeys(iter_vars(x)))


def is_ground(x) -> bool:
    return next(iter_vars(x), None) is None


def hole_count(x) -> int:
    if isinstance(x, tuple):
        return sum(hole_count(item) for item in x)
    if isinstance(x, Hole):
        return 1
    if isinstance(x, Compound):
        return hole_count(x.args)
    if isinstance(x, CtxApply):
        return hole_count(x.arg)
    return 0


def apply_context(ctx: Term, t: Term) -> Term:
    """Replace the single hole of ``ctx`` with ``t``."""
    if isinstance(ctx, Hole):
        return t
    if isinstance(ctx, Compound):
        for i, item in enumerate(ctx.args):
            if hole_count(item) == 1:
                plugged = apply_context(item, t)
                return Compound(ctx.head, ctx.args[:i] + (plugged,) + ctx.args[i + 1:])
    if isinstance(ctx, CtxApply):
        return CtxApply(ctx.var, apply_context(ctx.arg, t))
    raise ValueError(f"not a context (no hole): {ctx!r}")


def _check_binding(var, value) -> None:
    if isinstance(var, IndVar):
        if isinstance(value, (Hole, IndVar, Compound, CtxApply)) and hole_count(value) == 0:
            return
        raise KindMismatchError(f"{var!r} must map to a hole-free term, got {value!r}")
    if isinstance(var, SeqVar):
        if isinstance(value, tuple) and hole_count(value) == 0:
            return
        raise KindMismatchError(f"{var!r} must map to a hole-free sequence, got {value!r}")
    if isinstance(var, FunVar):
        if isinstance(value, (Sym, FunVar)):
            return
        raise KindMismatchError(f"{var!r} must map to a function head, got {value!r}")
    if isinstance(var, CtxVar):
        if isinstance(value, (Hole, Compound, CtxApply)) and hole_count(value) == 1:
            return
        raise KindMismatchError(f"{var!r} must map to a one-hole context, got {value!r}")
    raise KindMismatchError(f"not a variable: {var!r}")


def _is_identity(var, value) -> bool:
    if isinstance(var, SeqVar):
        return value == (var,)
    if isinstance(var, CtxVar):
        return value == CtxApply(var, HOLE)
    return value == var


class Subst:
    """Kind-respecting substitution.

    Individual variables map to hole-free terms, sequence variables to
    hole-free hedges, function variables to heads, and context variables
    to one-hole contexts. Variables outside the map are implicitly bound
    to themselves; identity bindings are normalized away, so equality of
    substitutions coincides with equality of their action.
    """

    __slots__ = ("_map",)

    def __init__(self, mapping=None, *, _checked=False):
        m = {}
        if mapping:
            for var, value in mapping.items():
                if not _checked:
                    _check_binding(var, value)
                if not _is_identity(var, value):
                    m[var] = value
        self._map = m

    def bind(self, var, value) -> "Subst":
        """Extend with one binding; rebinding to a different value is a bug."""
        _check_binding(var, value)
        old = self._map.get(var)
        if old is not None:
            if old == value:
                return self
            raise ValueError(f"{var!r} is already bound")
        m = dict(self._map)
        m[var] = value
        return Subst(m, _checked=True)

    def get(self, var):
        return self._map.get(var)

    def domain(self) -> tuple:
        return tuple(self._map)

    def items(self):
        return self._map.items()

    def restrict(self, keep) -> "Subst":
        keep = set(keep)
        return Subst({v: b for v, b in self._map.items() if v in keep}, _checked=True)

    def apply_head(self, head: FunHead) -> FunHead:
        if isinstance(head, FunVar):
            bound = self._map.get(head)
            if bound is not None:
                return bound
        return head

    def apply_term(self, t: Term) -> Term:
        if isinstance(t, IndVar):
            bound = self._map.get(t)
            return bound if bound is not None else t
        if isinstance(t, Compound):
            return Compound(self.apply_head(t.head), self.apply_hedge(t.args))
        if isinstance(t, CtxApply):
            arg = self.apply_term(t.arg)
            ctx = self._map.get(t.var)
            if ctx is None:
                return CtxApply(t.var, arg)
            return apply_context(ctx, arg)
        return t  # Hole

    def apply_hedge(self, h) -> tuple:
        out = []
        for item in h:
            if isinstance(item, SeqVar):
                bound = self._map.get(item)
                if bound is None:
                    out.append(item)
                else:
                    out.extend(bound)
            else:
                out.append(self.apply_term(item))
        return tuple(out)

    def apply_binding(self, var, value):
        if isinstance(var, SeqVar):
            return self.apply_hedge(value)
        if isinstance(var, FunVar):
            return self.apply_head(value)
        return self.apply_term(value)

    def compose(self, other: "Subst") -> "Subst":
        """The substitution acting as this one followed by ``other``."""
        m = {var: other.apply_binding(var, value) for var, value in self._map.items()}
        for var, value in other._map.items():
            m.setdefault(var, value)
        return Subst(m, _checked=True)

    def __contains__(self, var) -> bool:
        return var in self._map

    def __len__(self) -> int:
        return len(self._map)

    def __bool__(self) -> bool:
        return bool(self._map)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subst) and self._map == other._map

    def __hash__(self) -> int:
        return hash(frozenset(self._map.items()))

    def __repr__(self) -> str:
        def show(value):
            if isinstance(value, tuple):
                if not value:
                    return "eps"
                if len(value) == 1:
                    return repr(value[0])
                return "(" + ",".join(map(repr, value)) + ")"
            return repr(value)

        inner = ", ".join(f"{v!r} -> {show(b)}" for v, b in self._map.items())
        return "{" + inner + "}"


EMPTY_SUBST = Subst()
