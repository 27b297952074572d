import pytest

from rholog import (
    EMPTY_SUBST,
    HOLE,
    Compound,
    CtxApply,
    CtxVar,
    FunVar,
    IndVar,
    SeqVar,
    Subst,
    Sym,
    apply_context,
    free_vars,
    hole_count,
    is_ground,
    parse_sequence,
    parse_term,
    seq,
)
from rholog.errors import KindMismatchError

from tests.genrand import ground_subst_for, ground_term, make_rng, pattern_hedge


def T(text):
    return parse_term(text)


def H(text):
    return parse_sequence(text)


class TestApplyContext:
    def test_plug_context_into_context(self):
        ctx = T("f(i_X,g(i_Y,hole),a)")
        assert apply_context(ctx, T("g(b,hole)")) == T("f(i_X,g(i_Y,g(b,hole)),a)")

    def test_plug_term_into_context(self):
        ctx = T("f(i_X,g(i_Y,hole),a)")
        assert apply_context(ctx, T("g(b,c)")) == T("f(i_X,g(i_Y,g(b,c)),a)")

    def test_identity_context(self):
        t = T("f(a,b)")
        assert apply_context(HOLE, t) == t

    def test_hole_count_is_preserved(self):
        ctx = T("f(hole,b)")
        assert hole_count(apply_context(ctx, T("g(hole)"))) == 1
        assert hole_count(apply_context(ctx, T("g(a)"))) == 0

    def test_rejects_non_context(self):
        with pytest.raises(ValueError):
            apply_context(T("f(a)"), T("b"))


class TestApplySubst:
    def test_extension_to_sequences(self):
        sigma = Subst(
            {
                CtxVar("c_Ctx"): T("f(hole)"),
                IndVar("i_Term"): T("g(s_X)"),
                FunVar("f_Funct"): Sym("g"),
                SeqVar("s_Seq1"): (),
                SeqVar("s_Seq2"): H("(b,c)"),
            }
        )
        s = H("(c_Ctx(i_Term), f_Funct(s_Seq1,a,s_Seq2))")
        assert sigma.apply_hedge(s) == H("(f(g(s_X)), g(a,b,c))")

    def test_empty_subst_is_identity(self):
        rng = make_rng(7)
        for _ in range(100):
            pattern = pattern_hedge(rng)
            assert EMPTY_SUBST.apply_hedge(pattern) == pattern

    def test_function_variable_head(self):
        sigma = Subst({FunVar("f_F"): Sym("g")})
        assert sigma.apply_term(T("f_F(a,b)")) == T("g(a,b)")

    def test_empty_splice(self):
        sigma = Subst({SeqVar("s_X"): ()})
        assert sigma.apply_hedge(H("(a, s_X, b)")) == H("(a,b)")

    def test_splice_and_flatten(self):
        sigma = Subst({SeqVar("s_X"): H("(a,b)")})
        assert sigma.apply_hedge(H("(s_X, s_X)")) == H("(a,b,a,b)")

    def test_unbound_variables_stay(self):
        sigma = Subst({IndVar("i_X"): T("a")})
        assert sigma.apply_hedge(H("(i_X, i_Y, s_Z)")) == H("(a, i_Y, s_Z)")

    def test_context_binding_to_bare_hole(self):
        sigma = Subst({CtxVar("c_X"): HOLE})
        assert sigma.apply_term(T("c_X(f(a))")) == T("f(a)")


class TestCompose:
    def test_left_identity(self):
        theta = Subst({IndVar("i_Y"): T("b")})
        assert EMPTY_SUBST.compose(theta) == theta

    def test_disjoint_domains(self):
        sigma = Subst({IndVar("i_X"): T("a")})
        theta = Subst({IndVar("i_Y"): T("b")})
        assert sigma.compose(theta) == Subst(
            {IndVar("i_X"): T("a"), IndVar("i_Y"): T("b")}
        )

    def test_chained_binding(self):
        sigma = Subst({IndVar("i_X"): IndVar("i_Y")})
        theta = Subst({IndVar("i_Y"): T("c")})
        assert sigma.compose(theta) == Subst(
            {IndVar("i_X"): T("c"), IndVar("i_Y"): T("c")}
        )

    def test_defining_equation_on_random_probes(self):
        rng = make_rng(20)
        for _ in range(200):
            pattern = pattern_hedge(rng)
            sigma = ground_subst_for(rng, pattern)
            # theta binds a fresh disjoint pattern's variables, so that some
            # bindings chain through sigma and others pass straight through
            other = pattern_hedge(rng)
            theta = ground_subst_for(rng, other)
            lhs = sigma.compose(theta).apply_hedge(pattern)
            rhs = theta.apply_hedge(sigma.apply_hedge(pattern))
            assert lhs == rhs


class TestStructure:
    def test_is_ground(self):
        assert is_ground(H("(f(a),b)"))
        assert not is_ground(H("s_X"))
        assert not is_ground(T("f(i_X)"))

    def test_free_vars_order(self):
        assert free_vars(T("c_X(f_Y(a))")) == (CtxVar("c_X"), FunVar("f_Y"))
        assert free_vars(H("(s_A, i_B, s_A)")) == (SeqVar("s_A"), IndVar("i_B"))

    def test_hole_count(self):
        assert hole_count(T("f(hole,g(a))")) == 1
        assert hole_count(T("f(a)")) == 0
        assert hole_count(H("(hole, f(hole))")) == 2

    def test_seq_flattening_is_associative(self):
        a, b, c = T("a"), T("b"), T("c")
        assert seq(seq(a, b), c) == seq(a, seq(b, c)) == (a, b, c)

    def test_numerals_are_constants(self):
        assert T("3") == Compound(Sym("3"))
        assert T("0.5") == Compound(Sym("0.5"))


class TestValidation:
    def test_symbol_name_restrictions(self):
        with pytest.raises(ValueError):
            Sym("hole")
        with pytest.raises(ValueError):
            Sym("eps")
        with pytest.raises(ValueError):
            Sym("i_bad")
        with pytest.raises(ValueError):
            Sym("")

    def test_variable_name_restrictions(self):
        with pytest.raises(ValueError):
            IndVar("x")
        with pytest.raises(ValueError):
            SeqVar("s_")

    def test_kind_mismatches(self):
        with pytest.raises(KindMismatchError):
            Subst({IndVar("i_X"): H("(a,b)")})
        with pytest.raises(KindMismatchError):
            Subst({SeqVar("s_X"): T("a")})
        with pytest.raises(KindMismatchError):
            Subst({FunVar("f_X"): T("a")})
        with pytest.raises(KindMismatchError):
            Subst({CtxVar("c_X"): T("f(a)")})  # no hole
        with pytest.raises(KindMismatchError):
            Subst({IndVar("i_X"): T("f(hole)")})  # hole leaks into a term

    def test_identity_bindings_normalize_away(self):
        assert Subst({IndVar("i_X"): IndVar("i_X")}) == EMPTY_SUBST
        assert Subst({SeqVar("s_X"): (SeqVar("s_X"),)}) == EMPTY_SUBST
        assert Subst({CtxVar("c_X"): CtxApply(CtxVar("c_X"), HOLE)}) == EMPTY_SUBST

    def test_rebinding_conflict(self):
        sigma = Subst({IndVar("i_X"): T("a")})
        with pytest.raises(ValueError):
            sigma.bind(IndVar("i_X"), T("b"))
        assert sigma.bind(IndVar("i_X"), T("a")) == sigma


def test_random_context_application_keeps_hole_count():
    rng = make_rng(3)
    from tests.genrand import ground_context

    for _ in range(200):
        ctx = ground_context(rng)
        t = ground_term(rng)
        assert hole_count(apply_context(ctx, t)) == 0
        assert hole_count(apply_context(ctx, T("g(hole)"))) == 1
