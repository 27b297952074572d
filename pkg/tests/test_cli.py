import io
from pathlib import Path

from rholog.cli import main

PROGRAMS = Path(__file__).resolve().parent.parent / "programs"

MERGE_BATCH_EXPECTED = """\
?- ?(merge_all_proximals :: (a,b,d,b,c) ==> s_Ans, 0.5, Degree, Result).
Degree = 0.6,
Result = [s_Ans ---> (d,c)] ;
false.

?- ?(merge_all_proximals :: (a,b,d,b,c) ==> s_Ans, 0.7, Degree, Result).
Degree = 0.8,
Result = [s_Ans ---> (a,d,c)] ;
false.

?- ?(merge_all_proximals :: (b,d,b,c,a) ==> s_Ans, 0.5, Degree, Result).
Degree = 0.6,
Result = [s_Ans ---> (d,c,a)] ;
false.

?- ?(merge_all_proximals :: (b,d,b,c,a) ==> s_Ans, 0.7, Degree, Result).
Degree = 0.8,
Result = [s_Ans ---> (d,c,a)] ;
false.

"""

MERGE_ARGS = [
    "--load", str(PROGRAMS / "proximity.rho"),
    "--prox", str(PROGRAMS / "proximity.prox"),
    "--query", "?(merge_all_proximals :: (a,b,d,b,c) ==> s_Ans, 0.5, Degree, Result).",
    "--query", "?(merge_all_proximals :: (a,b,d,b,c) ==> s_Ans, 0.7, Degree, Result).",
    "--query", "?(merge_all_proximals :: (b,d,b,c,a) ==> s_Ans, 0.5, Degree, Result).",
    "--query", "?(merge_all_proximals :: (b,d,b,c,a) ==> s_Ans, 0.7, Degree, Result).",
]


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBatch:
    def test_merge_session_transcript(self, capsys):
        code, out, err = run(capsys, MERGE_ARGS)
        assert code == 0
        assert err == ""
        assert out == MERGE_BATCH_EXPECTED

    def test_batch_output_is_stable_across_runs(self, capsys):
        _, first, _ = run(capsys, MERGE_ARGS)
        _, second, _ = run(capsys, MERGE_ARGS)
        assert first == second

    def test_sorting_session(self, capsys):
        code, out, err = run(capsys, [
            "--load", str(PROGRAMS / "sorting.rho"),
            "--query", "?(bubble_sort(=<) :: (1,3,4,3,2) ==> s_X, Result).",
        ])
        assert code == 0
        assert out == (
            "?- ?(bubble_sort(=<) :: (1,3,4,3,2) ==> s_X, Result).\n"
            "Result = [s_X ---> (1,2,3,3,4)] ;\n"
            "false.\n\n"
        )

    def test_rewriting_session(self, capsys):
        code, out, err = run(capsys, [
            "--load", str(PROGRAMS / "rewriting.rho"),
            "--query", "?(rewrite_step(st) :: f(f(g(a),a),a) ==> s_Out, Result).",
        ])
        assert code == 0
        assert out == (
            "?- ?(rewrite_step(st) :: f(f(g(a),a),a) ==> s_Out, Result).\n"
            "Result = [s_Out ---> f(f(g(b),a),a)] ;\n"
            "Result = [s_Out ---> f(f(g(a),b),a)] ;\n"
            "Result = [s_Out ---> f(f(g(a),a),b)] ;\n"
            "false.\n\n"
        )

    def test_answer_limit_suppresses_false(self, capsys):
        code, out, err = run(capsys, [
            "--load", str(PROGRAMS / "rewriting.rho"),
            "--answers", "2",
            "--query", "?(rewrite_step(st) :: f(f(g(a),a),a) ==> s_Out, Result).",
        ])
        assert code == 0
        assert out.count("Result =") == 2
        assert "false." not in out

    def test_empty_query_list_runs_nothing(self, capsys):
        from rholog.cli import run_batch
        from rholog.engine import ClauseDB, EngineConfig
        from rholog.proximity import ProximityRelation

        code = run_batch([], ClauseDB(), ProximityRelation(), EngineConfig())
        captured = capsys.readouterr()
        assert code == 0
        assert captured.out == "" and captured.err == ""

    def test_load_error_exit_code(self, capsys):
        code, out, err = run(capsys, ["--load", "no/such/file.rho"])
        assert code == 1
        assert "load error:" in err

    def test_parse_error_in_program_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.rho"
        bad.write_text("st :: a ==> b", encoding="utf-8")
        code, out, err = run(capsys, ["--load", str(bad)])
        assert code == 1
        assert "load error:" in err

    def test_query_error_exit_code_and_continuation(self, capsys):
        code, out, err = run(capsys, [
            "--load", str(PROGRAMS / "sorting.rho"),
            "--query", "?(syntactically broken",
            "--query", "?(bubble_sort(=<) :: (2,1) ==> s_X, Result).",
        ])
        assert code == 2
        assert "error:" in err
        assert "Result = [s_X ---> (1,2)] ;" in out

    def test_runtime_error_is_reported_per_query(self, capsys):
        code, out, err = run(capsys, [
            "--query", "?(missing :: a ==> b, Result).",
        ])
        assert code == 2
        assert "unknown strategy" in err

    def test_trace_goes_to_stderr(self, capsys):
        code, out, err = run(capsys, [
            "--load", str(PROGRAMS / "sorting.rho"),
            "--trace",
            "--query", "?(bubble_sort(=<) :: (2,1) ==> s_X, Result).",
        ])
        assert code == 0
        assert "select:" in err


class TestRepl:
    def feed(self, monkeypatch, text):
        monkeypatch.setattr("sys.stdin", io.StringIO(text))

    def test_answer_stepping_to_exhaustion(self, capsys, monkeypatch):
        self.feed(monkeypatch, "?(bubble_sort(=<) :: (1,3,4,3,2) ==> s_X, Result).\n;\nhalt.\n")
        code, out, err = run(capsys, ["--load", str(PROGRAMS / "sorting.rho")])
        assert code == 0
        assert "Result = [s_X ---> (1,2,3,3,4)]" in out
        assert "false." in out

    def test_plain_enter_stops_stepping(self, capsys, monkeypatch):
        self.feed(monkeypatch, "?(rewrite_step(st) :: f(a,a) ==> s_O, Result).\n\nhalt.\n")
        code, out, err = run(capsys, ["--load", str(PROGRAMS / "rewriting.rho")])
        assert code == 0
        assert out.count("Result =") == 1
        assert "false." not in out

    def test_zero_answer_query_prints_false(self, capsys, monkeypatch):
        self.feed(monkeypatch, "?(id :: a ==> b, Result).\nhalt.\n")
        code, out, err = run(capsys, [])
        assert code == 0
        assert "false." in out

    def test_errors_do_not_end_the_session(self, capsys, monkeypatch):
        self.feed(
            monkeypatch,
            "?(unknown_thing :: a ==> b, Result).\n"
            "not a query at all\n"
            "?(id :: a ==> i_X, Result).\n\nhalt.\n",
        )
        code, out, err = run(capsys, [])
        assert code == 0
        assert "unknown strategy" in err
        assert "error:" in err
        assert "Result = [i_X ---> a]" in out

    def test_answer_limit_stops_stepping(self, capsys, monkeypatch):
        # the limit kicks in before any stepping prompt, so halt comes next
        self.feed(
            monkeypatch,
            "?(rewrite_step(st) :: f(a,a) ==> s_O, Result).\nhalt.\n",
        )
        code, out, err = run(capsys, [
            "--load", str(PROGRAMS / "rewriting.rho"), "--answers", "1",
        ])
        assert code == 0
        assert out.count("Result =") == 1
        assert "false." not in out

    def test_eof_ends_the_session(self, capsys, monkeypatch):
        self.feed(monkeypatch, "")
        code, out, err = run(capsys, [])
        assert code == 0
