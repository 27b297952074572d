"""Command-line front end: program loading, batch queries, and a REPL.

Batch mode answers print in transcript style, one block per query::

    ?- ?(merge_all_proximals :: (a,b,d,b,c) ==> s_Ans, 0.5, Degree, Result).
    Degree = 0.6,
    Result = [s_Ans ---> (d,c)] ;
    false.

Interactively, answers appear one at a time: type ``;`` for the next
answer, anything else (or just Enter) to stop. ``false.`` marks stream
exhaustion. Exit codes: 0 on success, 1 on load errors, 2 on query
errors.
"""

from __future__ import annotations

import argparse
import sys

from .engine import Answer, EngineConfig, load_program, solve
from .errors import RhoError
from .parser import parse_program, parse_proximity_decls, parse_query
from .printer import render_answer
from .program import Query, SourceProgram
from .proximity import ProximityRelation


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="rholog",
        description="Interpreter for a strategy-based transformation language "
        "over unranked terms.",
    )
    ap.add_argument(
        "--load",
        metavar="FILE",
        action="append",
        default=[],
        help="program file to load (repeatable; clause order follows file order)",
    )
    ap.add_argument(
        "--prox",
        metavar="FILE",
        help="proximity declaration file (prox(sym, sym, degree). lines)",
    )
    ap.add_argument(
        "--query",
        metavar="QUERY",
        action="append",
        default=[],
        help="query to run in batch mode (repeatable); omit for a REPL",
    )
    ap.add_argument(
        "--answers", metavar="N", type=int, help="stop after N answers per query"
    )
    ap.add_argument(
        "--nf-limit", metavar="N", type=int, help="rewrite-step limit for nf"
    )
    ap.add_argument(
        "--trace",
        action="store_true",
        help="print selected literals and chosen clauses to stderr",
    )
    return ap


def _load_session(args):
    clauses = []
    for path in args.load:
        with open(path, encoding="utf-8") as handle:
            clauses.extend(parse_program(handle.read()).clauses)
    db = load_program(SourceProgram(tuple(clauses)))
    relation = ProximityRelation()
    if args.prox:
        with open(args.prox, encoding="utf-8") as handle:
            relation = ProximityRelation(parse_proximity_decls(handle.read()))
    return db, relation


def _answer_lines(query: Query, answer: Answer) -> list:
    lines = []
    if query.wants_degree:
        lines.append(f"{query.degree_var} = {answer.degree},")
    lines.append(f"{query.result_var} = {render_answer(answer)}")
    return lines


_CAUGHT = (RhoError, ValueError, RecursionError)


def run_batch(queries, db, relation, config) -> int:
    """Run queries to exhaustion (or the answer limit); 0 iff no errors."""
    status = 0
    for text in queries:
        print(f"?- {text.strip()}")
        try:
            query = parse_query(text)
            limit = config.answer_limit
            shown = 0
            exhausted = True
            for answer in solve(db, query, relation, config):
                lines = _answer_lines(query, answer)
                lines[-1] += " ;"
                print("\n".join(lines))
                shown += 1
                if limit is not None and shown >= limit:
                    exhausted = False
                    break
            if exhausted:
                print("false.")
        except _CAUGHT as exc:
            print(f"error: {exc}", file=sys.stderr)
            status = 2
        print()
    return status


def run_repl(db, relation, config) -> int:
    print("rholog. Queries look like ?(st :: lhs ==> rhs, Result). "
          "Type halt. to quit.")
    while True:
        try:
            line = input("?- ")
        except EOFError:
            print()
            return 0
        line = line.strip()
        if not line:
            continue
        if line in ("halt.", "quit.", "exit."):
            return 0
        try:
            query = parse_query(line)
        except _CAUGHT as exc:
            print(f"error: {exc}", file=sys.stderr)
            continue
        try:
            _repl_answers(query, db, relation, config)
        except _CAUGHT as exc:
            print(f"error: {exc}", file=sys.stderr)


def _repl_answers(query, db, relation, config) -> None:
    shown = 0
    for answer in solve(db, query, relation, config):
        print("\n".join(_answer_lines(query, answer)))
        shown += 1
        if config.answer_limit is not None and shown >= config.answer_limit:
            print(".")
            return
        try:
            response = input("")
        except EOFError:
            return
        if response.strip() != ";":
            print(".")
            return
    print("false.")


def main(argv=None) -> int:
    # deep nf chains nest generators; give them room (still bounded, and
    # --nf-limit is the real safety valve for runaway rule systems)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))
    args = build_arg_parser().parse_args(argv)
    try:
        db, relation = _load_session(args)
    except (OSError, *_CAUGHT) as exc:
        print(f"load error: {exc}", file=sys.stderr)
        return 1
    config = EngineConfig(
        nf_step_limit=args.nf_limit,
        answer_limit=args.answers,
        trace=args.trace,
    )
    if args.query:
        return run_batch(args.query, db, relation, config)
    return run_repl(db, relation, config)


if __name__ == "__main__":
    sys.exit(main())
