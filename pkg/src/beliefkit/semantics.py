"""Finite-vocabulary model theory.

An interpretation over a :class:`Vocabulary` is stored as an int: bit ``i``
is the truth value of ``vocab.atoms[i]``.  Model enumeration evaluates a
formula on whole truth tables at once, using Python ints as bitsets of
length ``2**len(vocab)``.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .formula import (
    BOT,
    TOP,
    And,
    Const,
    DnfFormula,
    Formula,
    Literal,
    Not,
    Or,
    Term,
    Var,
    atoms,
    chain,
)

DEFAULT_VOCAB_CAP = 24


class VocabularyError(ValueError):
    """Out-of-vocabulary atom, mismatched vocabularies, or enumeration cap exceeded."""


def vocab_cap() -> int:
    return int(os.environ.get("BELIEFKIT_VOCAB_CAP", DEFAULT_VOCAB_CAP))


@dataclass(frozen=True)
class Vocabulary:
    atoms: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        ordered = tuple(sorted(set(self.atoms)))
        object.__setattr__(self, "atoms", ordered)
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(ordered)})

    @classmethod
    def of(cls, *groups: Iterable[str] | Formula) -> Vocabulary:
        names: set[str] = set()
        for g in groups:
            names |= atoms(g) if isinstance(g, Formula) else set(g)
        return cls(tuple(names))

    def index(self, atom: str) -> int:
        try:
            return self._index[atom]
        except KeyError:
            raise VocabularyError(f"atom {atom!r} is not in the vocabulary") from None

    def __contains__(self, atom: str) -> bool:
        return atom in self._index

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[str]:
        return iter(self.atoms)

    def widen(self, extra: Iterable[str]) -> Vocabulary:
        return Vocabulary(self.atoms + tuple(extra))

    def check(self, f: Formula) -> None:
        missing = atoms(f) - set(self.atoms)
        if missing:
            raise VocabularyError(f"atoms {sorted(missing)} are not in the vocabulary")

    def check_cap(self) -> None:
        if len(self) > vocab_cap():
            raise VocabularyError(
                f"vocabulary of {len(self)} atoms exceeds the enumeration cap of {vocab_cap()}"
                " (set BELIEFKIT_VOCAB_CAP to raise it)"
            )

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for a in names:
            m |= 1 << self.index(a)
        return m

    @property
    def full(self) -> int:
        return (1 << len(self)) - 1


@dataclass(frozen=True)
class Interpretation:
    vocab: Vocabulary
    bits: int

    @classmethod
    def from_literals(cls, vocab: Vocabulary, lits: Iterable[Literal | str]) -> Interpretation:
        """Build from a literal set that assigns every vocabulary atom exactly once."""
        lits = [Literal.parse(l) if isinstance(l, str) else l for l in lits]
        bits = 0
        seen = set()
        for lit in lits:
            if lit.is_constant:
                if lit == BOT:
                    raise VocabularyError("an interpretation cannot contain false")
                continue
            if lit.atom in seen:
                raise VocabularyError(f"atom {lit.atom!r} assigned twice")
            seen.add(lit.atom)
            if lit.positive:
                bits |= 1 << vocab.index(lit.atom)
        if len(seen) != len(vocab):
            raise VocabularyError("literal set is not total over the vocabulary")
        return cls(vocab, bits)

    def value(self, atom: str) -> bool:
        return bool(self.bits >> self.vocab.index(atom) & 1)

    def literals(self) -> tuple[Literal, ...]:
        return tuple(Literal(a, bool(self.bits >> i & 1)) for i, a in enumerate(self.vocab.atoms))

    def term(self) -> Term:
        return Term.of(self.literals())

    def __str__(self) -> str:
        return " ".join(str(l) for l in self.literals())


def _repeat(pattern: int, period: int, length: int) -> int:
    while period < length:
        pattern |= pattern << period
        period *= 2
    return pattern


@lru_cache(maxsize=64)
def _tables(vocab: Vocabulary) -> tuple[tuple[int, ...], int]:
    """Truth tables of each atom over all ``2**n`` interpretations, and the all-ones table."""
    n = len(vocab)
    length = 1 << n
    tables = []
    for i in range(n):
        half = 1 << i
        block = ((1 << half) - 1) << half
        tables.append(_repeat(block, 2 * half, length))
    return tuple(tables), (1 << length) - 1


def truth_table(f: Formula, vocab: Vocabulary) -> int:
    """Bitset whose bit ``m`` is set iff interpretation ``m`` satisfies ``f``."""
    vocab.check(f)
    vocab.check_cap()
    tables, full = _tables(vocab)
    cache: dict[int, int] = {}

    def ev(g: Formula) -> int:
        key = id(g)
        if key in cache:
            return cache[key]
        if isinstance(g, Var):
            r = tables[vocab.index(g.name)]
        elif isinstance(g, Const):
            r = full if g.value else 0
        elif isinstance(g, Not):
            r = full ^ ev(g.arg)
        elif isinstance(g, And):
            r = full
            for h in chain(g):
                r &= ev(h)
        else:
            r = 0
            for h in chain(g):
                r |= ev(h)
        cache[key] = r
        return r

    return ev(f)


def _set_bits(x: int) -> list[int]:
    s = format(x, "b")[::-1]
    out = []
    i = s.find("1")
    while i >= 0:
        out.append(i)
        i = s.find("1", i + 1)
    return out


@dataclass(frozen=True)
class ModelSet:
    vocab: Vocabulary
    members: frozenset[int]

    @classmethod
    def of(cls, vocab: Vocabulary, members: Iterable[int | Interpretation]) -> ModelSet:
        bits = []
        for m in members:
            if isinstance(m, Interpretation):
                if m.vocab != vocab:
                    raise VocabularyError("interpretation over a different vocabulary")
                m = m.bits
            bits.append(m)
        return cls(vocab, frozenset(bits))

    @classmethod
    def from_table(cls, vocab: Vocabulary, table: int) -> ModelSet:
        return cls(vocab, frozenset(_set_bits(table)))

    @classmethod
    def from_terms(cls, vocab: Vocabulary, models: Iterable[Iterable[Literal | str]]) -> ModelSet:
        return cls.of(vocab, (Interpretation.from_literals(vocab, m) for m in models))

    def _same(self, other: ModelSet) -> None:
        if self.vocab != other.vocab:
            raise VocabularyError(
                f"model sets over different vocabularies {self.vocab.atoms} and {other.vocab.atoms}"
            )

    def __or__(self, other: ModelSet) -> ModelSet:
        self._same(other)
        return ModelSet(self.vocab, self.members | other.members)

    def __and__(self, other: ModelSet) -> ModelSet:
        self._same(other)
        return ModelSet(self.vocab, self.members & other.members)

    def __sub__(self, other: ModelSet) -> ModelSet:
        self._same(other)
        return ModelSet(self.vocab, self.members - other.members)

    def __le__(self, other: ModelSet) -> bool:
        self._same(other)
        return self.members <= other.members

    def __len__(self) -> int:
        return len(self.members)

    def __bool__(self) -> bool:
        return bool(self.members)

    def __contains__(self, w: Interpretation | int) -> bool:
        if isinstance(w, Interpretation):
            if w.vocab != self.vocab:
                raise VocabularyError("interpretation over a different vocabulary")
            w = w.bits
        return w in self.members

    def __iter__(self) -> Iterator[Interpretation]:
        return iter(self.interpretations())

    def interpretations(self) -> list[Interpretation]:
        ws = [Interpretation(self.vocab, b) for b in self.members]
        return sorted(ws, key=lambda w: [str(l) for l in w.literals()])

    def to_lines(self) -> str:
        return "\n".join(str(w) for w in self.interpretations())

    def to_json(self) -> str:
        return json.dumps([[str(l) for l in w.literals()] for w in self.interpretations()])

    def to_dnf(self) -> DnfFormula:
        """Disjunction of full model terms (an empty vocabulary gives the empty term)."""
        return DnfFormula.of(w.term() for w in self.interpretations())

    def complement(self) -> ModelSet:
        return ModelSet(self.vocab, frozenset(range(1 << len(self.vocab))) - self.members)


def enumerate_models(f: Formula, vocab: Vocabulary | None = None) -> ModelSet:
    """All interpretations over ``vocab`` (default: atoms of ``f``) satisfying ``f``."""
    if vocab is None:
        vocab = Vocabulary.of(f)
    return ModelSet.from_table(vocab, truth_table(f, vocab))


def holds(w: Interpretation, f: Formula | DnfFormula) -> bool:
    if isinstance(f, DnfFormula):
        return any(all(_lit_holds(w, l) for l in t) for t in f.terms)
    if isinstance(f, Var):
        return w.value(f.name)
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Not):
        return not holds(w, f.arg)
    if isinstance(f, And):
        return all(holds(w, g) for g in chain(f))
    if isinstance(f, Or):
        return any(holds(w, g) for g in chain(f))
    raise TypeError(f"not a formula: {f!r}")


def _lit_holds(w: Interpretation, lit: Literal) -> bool:
    if lit.is_constant:
        return lit.positive
    return w.value(lit.atom) == lit.positive


def restrict(w: Interpretation, gamma: Iterable[Literal]) -> frozenset[Literal]:
    """The literals of ``w`` over atoms not mentioned (with either sign) in ``gamma``."""
    drop = {l.atom for l in gamma if not l.is_constant}
    return frozenset(l for l in w.literals() if l.atom not in drop)


def diff(w1: Interpretation, w2: Interpretation) -> frozenset[str]:
    """Atoms on which two interpretations disagree."""
    if w1.vocab != w2.vocab:
        raise VocabularyError("interpretations over different vocabularies")
    x = w1.bits ^ w2.bits
    return frozenset(a for i, a in enumerate(w1.vocab.atoms) if x >> i & 1)


def entails(f: Formula, g: Formula, vocab: Vocabulary | None = None) -> bool:
    vocab = vocab or Vocabulary.of(f, g)
    tf, tg = truth_table(f, vocab), truth_table(g, vocab)
    return tf & ~tg == 0


def equivalent(f: Formula, g: Formula, vocab: Vocabulary | None = None) -> bool:
    vocab = vocab or Vocabulary.of(f, g)
    return truth_table(f, vocab) == truth_table(g, vocab)


def satisfiable(f: Formula, vocab: Vocabulary | None = None) -> bool:
    return truth_table(f, vocab or Vocabulary.of(f)) != 0


def prime_implicants(f: Formula) -> tuple[Term, ...]:
    """Subset-minimal consistent literal sets over ``atoms(f)`` that entail ``f``.

    A tautology yields the single term ``{TOP}``; an unsatisfiable formula
    yields no terms.  Exhaustive search by increasing term size.
    """
    vocab = Vocabulary.of(f)
    table = truth_table(f, vocab)
    tables, full = _tables(vocab)
    if table == full:
        return (Term((TOP,)),)
    if table == 0:
        return ()
    n = len(vocab)
    # An implicant is prime iff dropping any single literal breaks entailment,
    # because entailment is preserved by adding literals.
    implicant: dict[tuple[int, ...], bool] = {}

    def is_implicant(signs: tuple[int, ...]) -> bool:
        # signs[i]: 0 absent, 1 positive, 2 negative
        if signs not in implicant:
            cover = full
            for i, s in enumerate(signs):
                if s == 1:
                    cover &= tables[i]
                elif s == 2:
                    cover &= full ^ tables[i]
            implicant[signs] = cover & ~table == 0
        return implicant[signs]

    primes = []
    for signs in itertools.product((0, 1, 2), repeat=n):
        if not is_implicant(signs):
            continue
        if any(
            is_implicant(signs[:i] + (0,) + signs[i + 1 :]) for i, s in enumerate(signs) if s
        ):
            continue
        primes.append(
            Term.of(Literal(vocab.atoms[i], s == 1) for i, s in enumerate(signs) if s)
        )
    return tuple(sorted(primes, key=lambda t: t.literals))
