import pytest
from hypothesis import given

from beliefkit.formula import (
    BOT,
    FALSE,
    TOP,
    TRUE,
    And,
    CnfFormula,
    Const,
    DnfFormula,
    Literal,
    Not,
    Or,
    Term,
    Var,
    atoms,
    depth,
    size,
    substitute,
    to_cnf,
    to_dnf,
    to_nnf,
)
from beliefkit.parser import ParseError, parse, render
from beliefkit.semantics import equivalent

from conftest import formulas

a, b, c, m = Var("a"), Var("b"), Var("c"), Var("m")


def lits(*names):
    return [Literal.parse(n) for n in names]


class TestParse:
    def test_grammar_examples(self):
        assert parse("!a | (b & !c)") == Or(Not(a), And(b, Not(c)))
        assert parse("true") == Const(True)
        assert parse("a -> b") == Or(Not(a), b)

    def test_iff_desugars(self):
        assert parse("a <-> b") == And(Or(Not(a), b), Or(Not(b), a))

    def test_implication_is_right_associative(self):
        assert parse("a -> b -> c") == Or(Not(a), Or(Not(b), c))

    def test_precedence(self):
        assert parse("a | b & c") == Or(a, And(b, c))
        assert parse("!a & b") == And(Not(a), b)
        assert parse("a & b | c -> m") == Or(Not(Or(And(a, b), c)), m)

    def test_binary_operators_left_associative(self):
        assert parse("a & b & c") == And(And(a, b), c)
        assert parse("a | b | c") == Or(Or(a, b), c)

    def test_whitespace_insignificant(self):
        assert parse("  a&(  b|c )") == parse("a & (b | c)")

    @pytest.mark.parametrize("text,pos", [("", 0), ("   ", 0), ("a &", 3), ("(a", 2), ("a b", 2), ("a $ b", 2)])
    def test_errors_carry_position(self, text, pos):
        with pytest.raises(ParseError) as err:
            parse(text)
        assert err.value.position == pos

    def test_case_sensitive_atoms(self):
        assert atoms(parse("A & a")) == {"A", "a"}


class TestRender:
    def test_examples(self):
        assert render(Or(Not(a), b)) == "!a | b"
        assert render(FALSE) == "false"
        assert render(And(a, Or(b, c))) == "a & (b | c)"

    def test_right_nested_same_operator_keeps_parens(self):
        assert render(And(a, And(b, c))) == "a & (b & c)"
        assert render(And(And(a, b), c)) == "a & b & c"

    def test_negated_compound(self):
        assert render(Not(And(a, b))) == "!(a & b)"
        assert render(Not(Not(a))) == "!!a"

    @given(formulas())
    def test_round_trip(self, f):
        assert parse(render(f)) == f

    @given(formulas())
    def test_render_parse_fixpoint(self, f):
        text = render(f)
        assert render(parse(text)) == text

    def test_long_chain_renders_without_recursion(self):
        f = Var("x0")
        for i in range(1, 20000):
            f = Or(f, Var(f"x{i}"))
        assert render(f).count("|") == 19999


class TestMeasures:
    def test_atoms(self):
        assert atoms(parse("a & (b | a)")) == {"a", "b"}
        assert atoms(TRUE) == frozenset()
        assert atoms(parse("!a")) == {"a"}

    def test_depth(self):
        assert depth(parse("!a | (b & !c)")) == 3
        assert depth(a) == 0
        assert depth(Not(a)) == 1
        assert depth(parse("a & b & c")) == 2
        assert depth(And(a, And(b, c))) == 2

    @given(formulas())
    def test_depth_recursion(self, f):
        if isinstance(f, (Var, Const)):
            assert depth(f) == 0
        elif isinstance(f, Not):
            assert depth(f) == 1 + depth(f.arg)
        else:
            assert depth(f) == 1 + max(depth(f.left), depth(f.right))

    def test_size(self):
        assert size(a) == 1
        assert size(parse("a & !b")) == 4
        assert size(DnfFormula.of([Term.of(lits("a", "!b"))])) == 4


class TestSubstitute:
    def test_examples(self):
        assert substitute(And(a, b), "a", TRUE) == And(TRUE, b)
        assert substitute(Or(a, b), "c", FALSE) == Or(a, b)
        assert substitute(parse("a & (b | a)"), "a", Not(c)) == parse("!c & (b | !c)")

    @given(formulas())
    def test_removes_atom(self, f):
        g = substitute(f, "a", Not(Var("z")))
        assert "a" not in atoms(g)
        assert atoms(g) - {"z"} == atoms(f) - {"a"}


class TestNnf:
    def test_examples(self):
        assert to_nnf(parse("!(a & b)")) == parse("!a | !b")
        assert to_nnf(parse("!!a")) == a
        assert to_nnf(parse("!(a | (b & c))")) == parse("!a & (!b | !c)")
        assert to_nnf(parse("!true")) == FALSE
        assert to_nnf(parse("!!false")) == FALSE

    @given(formulas())
    def test_negation_only_on_atoms(self, f):
        stack = [to_nnf(f)]
        while stack:
            g = stack.pop()
            if isinstance(g, Not):
                assert isinstance(g.arg, Var)
            elif isinstance(g, (And, Or)):
                stack += [g.left, g.right]

    @given(formulas())
    def test_equivalent(self, f):
        assert equivalent(f, to_nnf(f))

    @given(formulas())
    def test_deterministic(self, f):
        g = parse(render(f))
        assert to_nnf(f) == to_nnf(g)
        assert to_dnf(f) == to_dnf(g)
        assert to_cnf(f) == to_cnf(g)


class TestDnf:
    def test_examples(self):
        assert to_dnf(parse("(a | b) & c")) == DnfFormula.of([lits("a", "c"), lits("b", "c")])
        assert to_dnf(parse("a | b & c")) == DnfFormula.of([lits("a"), lits("b", "c")])
        psi = parse("b & !m | !b & m")
        assert to_dnf(psi) == DnfFormula.of([lits("b", "!m"), lits("!b", "m")])

    def test_keeps_inconsistent_terms(self):
        d = to_dnf(parse("a & !a | b"))
        assert Term.of(lits("a", "!a")) in d.terms
        assert not Term.of(lits("a", "!a")).consistent

    def test_constants(self):
        assert to_dnf(TRUE) == DnfFormula((Term(),))
        assert to_dnf(FALSE) == DnfFormula((Term((BOT,)),))
        assert to_dnf(parse("a & true")) == DnfFormula.of([lits("a")])

    def test_canonical_order(self):
        d = to_dnf(parse("c | b & a | !a"))
        assert [str(t) for t in d] == ["!a", "a & b", "c"]

    @given(formulas())
    def test_equivalent(self, f):
        assert equivalent(f, to_dnf(f).to_formula(), None)

    def test_json_round_trip(self):
        d = to_dnf(parse("a & !b | c"))
        assert d.to_json() == '[["a", "!b"], ["c"]]'
        assert DnfFormula.from_json(d.to_json()) == d


class TestCnf:
    def test_examples(self):
        assert to_cnf(parse("a | b & c")) == CnfFormula.of([lits("a", "b"), lits("a", "c")])
        assert to_cnf(parse("a & b | c")) == CnfFormula.of([lits("a", "c"), lits("b", "c")])
        assert to_cnf(parse("a & b")) == CnfFormula.of([lits("a"), lits("b")])

    def test_keeps_tautological_clauses(self):
        assert lits("!a", "a") in [list(cl) for cl in to_cnf(parse("(a | !a) & b"))]

    @given(formulas())
    def test_equivalent(self, f):
        assert equivalent(f, to_cnf(f).to_formula())


class TestLiteral:
    def test_complement(self):
        l = Literal("a", True)
        assert l.complement().complement() == l
        assert TOP.complement() == BOT

    def test_term_consistency(self):
        assert Term.of(lits("a", "b")).consistent
        assert not Term.of(lits("a", "!a")).consistent
        assert not Term.of([BOT, Literal("a")]).consistent
        assert Term.of([TOP]).consistent

    def test_term_dedups_and_sorts(self):
        assert Term.of(lits("b", "a", "b")).literals == tuple(lits("a", "b"))
