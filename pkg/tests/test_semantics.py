import itertools

import pytest
from hypothesis import given

from beliefkit.formula import FALSE, TOP, TRUE, Literal, Not, Term, Var, atoms, conj, disj
from beliefkit.semantics import (
    Interpretation,
    Vocabulary,
    VocabularyError,
    diff,
    entails,
    enumerate_models,
    equivalent,
    holds,
    prime_implicants,
    restrict,
    satisfiable,
)

from conftest import formulas, models, p, vocab


def w(v, *lits):
    return Interpretation.from_literals(v, lits)


class TestEnumerate:
    def test_example_models(self):
        v = vocab("b", "m")
        assert enumerate_models(p("b & !m | !b & m"), v) == models(v, "!b m", "b !m")

    def test_false_has_no_models(self):
        assert not enumerate_models(FALSE, vocab("a", "b"))

    def test_three_models(self):
        v = vocab("a", "b", "c")
        assert enumerate_models(p("(a | b) & c"), v) == models(v, "a b c", "a !b c", "!a b c")

    def test_empty_vocabulary(self):
        v = vocab()
        assert len(enumerate_models(TRUE, v)) == 1
        assert len(enumerate_models(FALSE, v)) == 0

    def test_out_of_vocabulary(self):
        with pytest.raises(VocabularyError):
            enumerate_models(p("a & z"), vocab("a"))

    def test_cap(self, monkeypatch):
        monkeypatch.setenv("BELIEFKIT_VOCAB_CAP", "3")
        with pytest.raises(VocabularyError, match="cap"):
            enumerate_models(p("a | b | c | d"))

    @given(formulas())
    def test_partition(self, f):
        v = vocab("a", "b", "c")
        pos, neg = enumerate_models(f, v), enumerate_models(Not(f), v)
        assert not pos & neg
        assert len(pos | neg) == 8

    @given(formulas())
    def test_agrees_with_holds(self, f):
        v = vocab("a", "b", "c")
        ms = enumerate_models(f, v)
        for bits in range(8):
            assert holds(Interpretation(v, bits), f) == (bits in ms.members)


class TestSerialization:
    def test_lines_and_json(self):
        v = vocab("b", "m")
        ms = models(v, "b m", "b !m")
        assert ms.to_lines() == "b !m\nb m"
        assert ms.to_json() == '[["b", "!m"], ["b", "m"]]'

    def test_interpretation_str(self):
        assert str(w(vocab("b", "m"), "!m", "b")) == "b !m"

    def test_from_literals_must_be_total(self):
        with pytest.raises(VocabularyError):
            w(vocab("a", "b"), "a")
        with pytest.raises(VocabularyError):
            w(vocab("a"), "a", "!a")

    def test_mixed_vocab_rejected(self):
        with pytest.raises(VocabularyError):
            models(vocab("a"), "a") | models(vocab("b"), "b")


class TestHolds:
    def test_examples(self):
        v = vocab("a", "b")
        assert holds(w(v, "a", "!b"), p("a | b"))
        assert not holds(w(v, "a", "!b"), Var("b"))
        v = vocab("b", "m")
        assert holds(w(v, "!b", "m"), p("b & !m | !b & m"))

    def test_out_of_vocabulary(self):
        with pytest.raises(VocabularyError):
            holds(w(vocab("a"), "a"), Var("z"))


class TestRestrict:
    def test_examples(self):
        v = vocab("a", "b", "c")
        L = Literal.parse
        assert restrict(w(v, "a", "!b", "!c"), [L("b"), L("!c")]) == {L("a")}
        v = vocab("a", "b")
        assert restrict(w(v, "a", "!b"), []) == {L("a"), L("!b")}
        assert restrict(w(v, "a", "!b"), [L("a"), L("!a")]) == {L("!b")}

    def test_constants_ignored(self):
        v = vocab("a")
        assert restrict(w(v, "a"), [TOP]) == {Literal("a")}

    def test_output_avoids_gamma_atoms(self):
        v = vocab("a", "b", "c")
        for bits in range(8):
            for gamma in itertools.combinations([Literal("a"), Literal("b", False), Literal("c")], 2):
                out = restrict(Interpretation(v, bits), gamma)
                assert not {l.atom for l in out} & {l.atom for l in gamma}


class TestDiff:
    def test_examples(self):
        v = vocab("b", "m")
        assert diff(w(v, "!b", "m"), w(v, "b", "m")) == {"b"}
        assert diff(w(v, "!b", "m"), w(v, "b", "!m")) == {"b", "m"}
        assert diff(w(v, "b", "m"), w(v, "b", "m")) == frozenset()

    def test_symmetric_and_zero_iff_equal(self):
        v = vocab("a", "b", "c")
        for x, y in itertools.product(range(8), repeat=2):
            wx, wy = Interpretation(v, x), Interpretation(v, y)
            assert diff(wx, wy) == diff(wy, wx)
            assert (diff(wx, wy) == frozenset()) == (x == y)

    def test_vocab_mismatch(self):
        with pytest.raises(VocabularyError):
            diff(w(vocab("a"), "a"), w(vocab("b"), "b"))


class TestEntailment:
    def test_examples(self):
        assert entails(p("a & b"), p("a"))
        assert equivalent(p("!a & b | b"), p("b"))
        assert not entails(p("a | b"), p("a"))
        assert satisfiable(p("a"))
        assert not satisfiable(p("a & !a"))


def brute_primes(f):
    """Subset-minimal consistent literal sets over atoms(f) entailing f."""
    names = sorted(atoms(f))
    cands = []
    for signs in itertools.product((None, True, False), repeat=len(names)):
        t = [Literal(n, s) for n, s in zip(names, signs) if s is not None]
        if entails(conj(l.to_formula() for l in t), f, Vocabulary.of(f)):
            cands.append(frozenset(t))
    return {c for c in cands if not any(d < c for d in cands)}


class TestPrimeImplicants:
    def test_tautology(self):
        assert prime_implicants(p("a | !a")) == (Term((TOP,)),)

    def test_unsatisfiable(self):
        assert prime_implicants(p("a & !a")) == ()

    def test_absorption(self):
        assert prime_implicants(p("a & (a | b)")) == (Term.of([Literal("a")]),)

    def test_collapses_to_d(self):
        f = p("a & d | !c & d | !a & d | !c & d")
        assert prime_implicants(f) == (Term.of([Literal("d")]),)

    def test_consensus_term_found(self):
        got = {str(t) for t in prime_implicants(p("(!a | b) & (!b | c)"))}
        assert got == {"!a & !b", "!a & c", "b & c"}

    @given(formulas(constants=False))
    def test_matches_brute_force(self, f):
        got = prime_implicants(f)
        if not satisfiable(f) or equivalent(f, TRUE, Vocabulary.of(f)):
            return
        assert {frozenset(t) for t in got} == brute_primes(f)

    @given(formulas(constants=False))
    def test_cover_equivalent(self, f):
        if satisfiable(f):
            cover = disj(t.to_formula() for t in prime_implicants(f))
            assert equivalent(cover, f, Vocabulary.of(f))
