import random

from hypothesis import given, settings
from hypothesis import strategies as st

from beliefkit.bench import SIZE_BOUND_C, random_dnf
from beliefkit.compositional import update_c
from beliefkit.formula import And, DnfFormula, Literal, Term, atoms, to_dnf
from beliefkit.oracles import forget_subst, update_ss_models
from beliefkit.semantics import Vocabulary, enumerate_models, equivalent
from beliefkit.syntactic import eliminant, size_report, update_syntactic

from conftest import formulas, p

V = Vocabulary(("a", "b", "c", "d"))


def lits(*names):
    return [Literal.parse(n) for n in names]


class TestEliminant:
    def test_strips_to_tautology(self):
        got = eliminant({"b"}, p("b & !m | !b & m"))
        assert got == DnfFormula.of([lits("!m"), lits("m")])
        assert str(got) == "!m | m"

    def test_empty_set_is_dnf(self):
        f = p("(a | b) & !c")
        assert eliminant(set(), f) == to_dnf(f)

    def test_everything_stripped(self):
        assert eliminant({"a", "b"}, p("a & b")) == DnfFormula((Term(),))

    def test_inconsistent_terms_are_not_revived(self):
        # stripping b from (a & b & !b) would leave a; the term has no models
        got = eliminant({"b"}, p("a & b & !b | c"))
        assert got == DnfFormula.of([lits("c")])

    def test_accepts_clause_form(self):
        d = DnfFormula.of([lits("a", "b"), lits("!a", "c")])
        assert eliminant({"a"}, d) == DnfFormula.of([lits("b"), lits("c")])

    @given(formulas(("a", "b", "c", "d")), st.sets(st.sampled_from("abcd")))
    def test_matches_substitution(self, f, P):
        assert equivalent(eliminant(P, f).to_formula(), forget_subst(f, P), V)


class TestUpdate:
    def test_examples(self):
        got = update_syntactic(p("b & !m | !b & m"), p("b"))
        assert equivalent(got.to_formula(), p("b & (m | !m)"))
        got = update_syntactic(p("!b & !m"), p("b | m"))
        assert got == DnfFormula.of([lits("b", "!m"), lits("!b", "m")])

    def test_inconsistent_update_is_false(self):
        assert update_syntactic(p("a"), p("a & !a")) == DnfFormula(())

    @settings(max_examples=300)
    @given(formulas(("a", "b", "c", "d")), formulas(("a", "b", "c", "d")))
    def test_equals_semantic_update(self, psi, mu):
        assert enumerate_models(update_syntactic(psi, mu).to_formula(), V) == update_c(psi, mu, V).models

    @given(formulas(("a", "b", "c", "d")), formulas(("a", "b", "c", "d")))
    def test_standard_semantics_via_eliminant(self, psi, mu):
        lhs = And(eliminant(atoms(mu), psi).to_formula(), mu)
        assert enumerate_models(lhs, V) == update_ss_models(psi, mu, V)

    @given(formulas(("a", "b", "c")), formulas(("a", "b", "c")), formulas(("a", "b", "c")))
    def test_output_feeds_next_update(self, psi, mu1, mu2):
        once = update_syntactic(psi, mu1)
        twice = update_syntactic(once, mu2)
        v = Vocabulary(("a", "b", "c"))
        sem = update_c(update_c(psi, mu1, v).formula.to_formula(), mu2, v).models
        assert enumerate_models(twice.to_formula(), v) == sem

    def test_raw_keeps_duplicates(self):
        psi = DnfFormula.of([lits("a", "b"), lits("a", "!b")], dedup=False)
        mu = DnfFormula.of([lits("a")])
        raw = update_syntactic(psi, p("a"), raw=True)
        assert len(raw) == 2
        assert len(update_syntactic(psi, mu)) == 2
        assert len(update_syntactic(p("a & b | a & !b"), p("b | !b"), raw=True)) == 4
        assert len(update_syntactic(p("a & b | a & !b"), p("b | !b"))) == 2


class TestSizeReport:
    def test_term_product_bound(self):
        rng = random.Random(3)
        psi = random_dnf(rng, list("abcdef"), 4, 3)
        mu = random_dnf(rng, list("abcdef"), 2, 2)
        out = update_syntactic(psi, mu, raw=True)
        rep = size_report(psi, mu, out)
        assert rep.term_counts[:2] == (4, 2)
        assert rep.term_counts[2] <= 8

    def test_small_inputs(self):
        rep = size_report(p("a"), p("b"), update_syntactic(p("a"), p("b")))
        assert rep.as_row() == {"psi_size": 1, "mu_size": 1, "out_size": 3,
                                "psi_terms": 1, "mu_terms": 1, "out_terms": 1}
        assert rep.output_size <= SIZE_BOUND_C * rep.input_psi_size * rep.input_mu_size
