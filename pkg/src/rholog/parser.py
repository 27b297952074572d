"""Lexer and recursive-descent parser.

Input formats (full EBNF in docs/grammar.md):

* programs: clauses terminated by ``.``, with ``%`` line comments;
* queries: ``?(Goal, Result).`` for exact answers, or
  ``?(Goal, Threshold, Degree, Result).`` for threshold answers, where
  the markers are capitalized identifiers;
* proximity declarations: lines of ``prox(sym, sym, degree).``.

Identifier tokens are ``[A-Za-z0-9_]+``; names starting with ``i_``,
``s_``, ``f_``, ``c_`` are variables of the corresponding kind, and
the comparison operators ``=<  <  >  >=`` double as function symbols
so they can be passed as strategy arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, InvalidOperation

from .errors import (
    DegreeRangeError,
    ParseError,
    ThresholdRangeError,
    UnsupportedFeatureError,
)
from .program import (
    NotGoal,
    PredAtom,
    PredClause,
    Query,
    RhoAtom,
    RhoClause,
    SourceProgram,
    StrategyAbbrev,
)
from .terms import (
    HOLE,
    Compound,
    CtxApply,
    CtxVar,
    FunVar,
    IndVar,
    SeqVar,
    Sym,
)

_COMPARE_OPS = ("=<", "<", ">", ">=")

# Longest first so maximal munch works with plain startswith.
_PUNCT = ("=\\=>", "==>", ">=", "=<", "::", ":-", ":=", "(", ")", ",", "?", ".", "<", ">")


@dataclass(frozen=True)
class Token:
    kind: str  # "ident" | "num" | "punct" | "eof"
    text: str
    line: int
    col: int


def tokenize(text: str) -> list:
    tokens = []
    i, line, col = 0, 1, 1
    n = len(text)

    def advance(k):
        nonlocal i, line, col
        for _ in range(k):
            if text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        c = text[i]
        if c in " \t\r\n":
            advance(1)
            continue
        if c == "%":
            while i < n and text[i] != "\n":
                advance(1)
            continue
        if c.isalnum() or c == "_":
            start, tline, tcol = i, line, col
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[start:j]
            if word.isdigit() and j + 1 < n and text[j] == "." and text[j + 1].isdigit():
                k = j + 1
                while k < n and text[k].isdigit():
                    k += 1
                advance(k - i)
                tokens.append(Token("num", text[start:k], tline, tcol))
            else:
                advance(j - i)
                kind = "num" if word.isdigit() else "ident"
                tokens.append(Token(kind, word, tline, tcol))
            continue
        for p in _PUNCT:
            if text.startswith(p, i):
                tokens.append(Token("punct", p, line, col))
                advance(len(p))
                break
        else:
            raise ParseError(f"unexpected character {c!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self, offset=0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def take(self) -> Token:
        tok = self.peek()
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def at_punct(self, *texts) -> bool:
        tok = self.peek()
        return tok.kind == "punct" and tok.text in texts

    def at_ident(self, text) -> bool:
        tok = self.peek()
        return tok.kind == "ident" and tok.text == text

    def expect_punct(self, text) -> Token:
        tok = self.peek()
        if tok.kind != "punct" or tok.text != text:
            self.fail(f"unexpected {self._describe(tok)}", tok, expected=(repr(text),))
        return self.take()

    def expect_eof(self) -> None:
        tok = self.peek()
        if tok.kind != "eof":
            self.fail(f"unexpected trailing {self._describe(tok)}", tok,
                      expected=("end of input",))

    @staticmethod
    def _describe(tok: Token) -> str:
        return "end of input" if tok.kind == "eof" else repr(tok.text)

    def fail(self, message, tok=None, expected=()):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.col, expected)

    # -- terms and sequences ------------------------------------------------

    def term(self):
        tok = self.peek()
        if tok.kind == "ident":
            word = tok.text
            if word == "hole":
                self.take()
                return HOLE
            if word == "eps":
                self.fail("eps is the empty sequence, not a term", tok)
            if word.startswith("i_"):
                self.take()
                return self._var(IndVar, tok)
            if word.startswith("s_"):
                self.fail(
                    "sequence variable not allowed here (only inside a sequence)", tok
                )
            if word.startswith("f_"):
                self.take()
                return Compound(self._var(FunVar, tok), self.opt_args())
            if word.startswith("c_"):
                self.take()
                self.expect_punct("(")
                arg = self.term()
                self.expect_punct(")")
                return CtxApply(self._var(CtxVar, tok), arg)
            self.take()
            return Compound(self._sym(tok), self.opt_args())
        if tok.kind == "num":
            self.take()
            return Compound(Sym(tok.text))
        if tok.kind == "punct" and tok.text in _COMPARE_OPS:
            self.take()
            return Compound(Sym(tok.text), self.opt_args())
        self.fail(f"unexpected {self._describe(tok)}", tok, expected=("a term",))

    def _var(self, ctor, tok: Token):
        try:
            return ctor(tok.text)
        except ValueError as exc:
            self.fail(str(exc), tok)

    def _sym(self, tok: Token) -> Sym:
        try:
            return Sym(tok.text)
        except ValueError as exc:
            self.fail(str(exc), tok)

    def opt_args(self) -> tuple:
        if not self.at_punct("("):
            return ()
        self.take()
        if self.at_punct(")"):
            self.take()
            return ()
        items = self.seq_items()
        self.expect_punct(")")
        return items

    def seq_items(self) -> tuple:
        items = []
        while True:
            items.extend(self.seq_elem())
            if self.at_punct(","):
                self.take()
                continue
            return tuple(items)

    def seq_elem(self) -> tuple:
        tok = self.peek()
        if tok.kind == "ident":
            if tok.text == "eps":
                self.take()
                return ()
            if tok.text.startswith("s_"):
                self.take()
                return (self._var(SeqVar, tok),)
        if self.at_punct("("):
            self.take()
            inner = self.seq_items()
            self.expect_punct(")")
            return inner
        return (self.term(),)

    def seq_expr(self) -> tuple:
        """A sequence on one side of an atom: eps, one item, or (items)."""
        tok = self.peek()
        if tok.kind == "ident" and tok.text == "eps":
            self.take()
            return ()
        if self.at_punct("("):
            self.take()
            if self.at_punct(")"):
                self.take()
                return ()
            items = self.seq_items()
            self.expect_punct(")")
            return items
        if tok.kind == "ident" and tok.text.startswith("s_"):
            self.take()
            return (self._var(SeqVar, tok),)
        return (self.term(),)

    # -- literals, clauses, programs ----------------------------------------

    def literal(self):
        if self.at_ident("not") and self.peek(1).kind == "punct" and self.peek(1).text == "(":
            self.take()
            self.take()
            inner = self.literal()
            self.expect_punct(")")
            return NotGoal(inner)
        parsed = self.literal_or_term()
        if isinstance(parsed, (RhoAtom, PredAtom, NotGoal)):
            return parsed
        tok = self.peek()
        if isinstance(parsed, Compound):
            return PredAtom(parsed.head, parsed.args)
        self.fail("expected a literal", tok)

    def literal_or_term(self):
        """Parse a literal if an atom shape follows, otherwise a bare term."""
        if self.at_ident("not") and self.peek(1).kind == "punct" and self.peek(1).text == "(":
            return self.literal()
        t = self.term()
        if self.at_punct("::"):
            self.take()
            lhs = self.seq_expr()
            if self.at_punct("==>"):
                positive = True
            elif self.at_punct("=\\=>"):
                positive = False
            else:
                self.fail("expected an arrow after the left-hand side",
                          expected=("'==>'", "'=\\=>'"))
            self.take()
            rhs = self.seq_expr()
            return RhoAtom(t, lhs, rhs, positive)
        if self.at_punct(*_COMPARE_OPS):
            op = self.take()
            rhs = self.term()
            return PredAtom(Sym(op.text), (t, rhs))
        return t

    def body(self) -> tuple:
        literals = [self.literal()]
        while self.at_punct(","):
            self.take()
            literals.append(self.literal())
        return tuple(literals)

    def clause(self):
        head = self.term()
        if self.at_punct("::"):
            self.take()
            lhs = self.seq_expr()
            if self.at_punct("=\\=>"):
                self.fail("a clause head cannot be negated")
            self.expect_punct("==>")
            rhs = self.seq_expr()
            if self.at_ident("where"):
                tok = self.peek()
                raise UnsupportedFeatureError(
                    "'where' constraints are not supported", tok.line, tok.col
                )
            body = ()
            if self.at_punct(":-"):
                self.take()
                body = self.body()
            self.expect_punct(".")
            return RhoClause(head, lhs, rhs, body)
        if self.at_punct(":="):
            self.take()
            rhs = self.term()
            self.expect_punct(".")
            return StrategyAbbrev(head, rhs)
        if self.at_punct(":-") or self.at_punct("."):
            if not (isinstance(head, Compound) and isinstance(head.head, Sym)):
                self.fail("a predicate clause head must be symbol-headed")
            body = ()
            if self.at_punct(":-"):
                self.take()
                body = self.body()
            self.expect_punct(".")
            return PredClause(head.head.name, head.args, body)
        self.fail(f"unexpected {self._describe(self.peek())}",
                  expected=("'::'", "':='", "':-'", "'.'"))

    def program(self) -> SourceProgram:
        clauses = []
        while self.peek().kind != "eof":
            clauses.append(self.clause())
        return SourceProgram(tuple(clauses))

    # -- queries -------------------------------------------------------------

    def query(self) -> Query:
        self.expect_punct("?")
        self.expect_punct("(")
        entries = [self.literal_or_term()]
        while self.at_punct(","):
            self.take()
            entries.append(self.literal_or_term())
        self.expect_punct(")")
        self.expect_punct(".")
        self.expect_eof()
        return self._classify_query(entries)

    @staticmethod
    def _marker_name(entry):
        if (
            isinstance(entry, Compound)
            and isinstance(entry.head, Sym)
            and not entry.args
            and entry.head.name[0].isupper()
        ):
            return entry.head.name
        return None

    @staticmethod
    def _number_value(entry):
        if isinstance(entry, Compound) and isinstance(entry.head, Sym) and not entry.args:
            try:
                value = Decimal(entry.head.name)
            except InvalidOperation:
                return None
            return value
        return None

    def _classify_query(self, entries) -> Query:
        result_var = self._marker_name(entries[-1]) if entries else None
        if result_var is None:
            self.fail("a query must end with a result variable "
                      "(a capitalized identifier)")
        threshold = None
        degree_var = None
        goal_entries = entries[:-1]
        if len(entries) >= 3:
            maybe_degree = self._marker_name(entries[-2])
            maybe_threshold = self._number_value(entries[-3])
            if maybe_degree is not None and maybe_threshold is not None:
                degree_var = maybe_degree
                threshold = maybe_threshold
                if not (0 <= threshold <= 1):
                    raise ThresholdRangeError(
                        f"threshold must be in [0, 1], got {threshold}"
                    )
                goal_entries = entries[:-3]
        goal = []
        for entry in goal_entries:
            if isinstance(entry, (RhoAtom, PredAtom, NotGoal)):
                goal.append(entry)
            elif self._marker_name(entry) is not None:
                self.fail(f"unexpected variable {entry!r} in the goal")
            elif isinstance(entry, Compound):
                goal.append(PredAtom(entry.head, entry.args))
            else:
                self.fail(f"not a literal: {entry!r}")
        if not goal:
            self.fail("query has no goal literals")
        return Query(tuple(goal), result_var, threshold, degree_var)


def parse_program(text: str) -> SourceProgram:
    return _Parser(text).program()


def parse_query(text: str) -> Query:
    return _Parser(text).query()


def parse_proximity_decls(text: str) -> list:
    """Parse ``prox(sym, sym, degree).`` declarations into triples."""
    p = _Parser(text)
    out = []
    while p.peek().kind != "eof":
        tok = p.peek()
        if not p.at_ident("prox"):
            p.fail(f"unexpected {p._describe(tok)}", tok, expected=("'prox'",))
        p.take()
        p.expect_punct("(")
        a = _prox_symbol(p)
        p.expect_punct(",")
        b = _prox_symbol(p)
        p.expect_punct(",")
        d = _prox_degree(p)
        p.expect_punct(")")
        p.expect_punct(".")
        out.append((a, b, d))
    return out


def _prox_symbol(p: _Parser) -> Sym:
    tok = p.peek()
    if tok.kind in ("ident", "num") or (tok.kind == "punct" and tok.text in _COMPARE_OPS):
        p.take()
        try:
            return Sym(tok.text)
        except ValueError as exc:
            p.fail(str(exc), tok)
    p.fail(f"unexpected {p._describe(tok)}", tok, expected=("a symbol",))


def _prox_degree(p: _Parser) -> Decimal:
    tok = p.peek()
    if tok.kind != "num":
        p.fail(f"unexpected {p._describe(tok)}", tok, expected=("a degree",))
    p.take()
    value = Decimal(tok.text)
    if not (0 < value <= 1):
        raise DegreeRangeError(f"proximity degree must be in (0, 1], got {value}")
    return value


def parse_term(text: str):
    p = _Parser(text)
    t = p.term()
    p.expect_eof()
    return t


def parse_sequence(text: str) -> tuple:
    p = _Parser(text)
    h = p.seq_expr()
    p.expect_eof()
    return h


def parse_literal(text: str):
    p = _Parser(text)
    lit = p.literal()
    p.expect_eof()
    return lit
