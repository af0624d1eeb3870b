"""Compositional update, erasure, forgetting and revision.

``ul`` and ``el`` follow the six-case recursion literally.  The recursion
steps never look at the interpretation, only the base case does, so the
decomposition of a formula set into literal sets is computed once
(:func:`ul_leaves` / :func:`el_leaves`) and the base case is then applied to
each model.  Operators over a knowledge base reuse one decomposition for all
of its models.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .formula import (
    BOT,
    TOP,
    TRUE,
    And,
    DnfFormula,
    Formula,
    Literal,
    Not,
    Or,
    Var,
    as_literal,
    conj,
    disj,
    is_consistent,
)
from .semantics import (
    Interpretation,
    ModelSet,
    Vocabulary,
    entails,
    enumerate_models,
    prime_implicants,
)


@dataclass(frozen=True)
class ChangeResult:
    models: ModelSet
    formula: DnfFormula | None = None

    def __post_init__(self):
        if self.formula is None:
            object.__setattr__(self, "formula", self.models.to_dnf())

    @property
    def vocab(self) -> Vocabulary:
        return self.models.vocab


def _formula_set(gamma: Formula | Iterable[Formula]) -> tuple[Formula, ...]:
    if isinstance(gamma, Formula):
        return (gamma,)
    members = tuple(dict.fromkeys(gamma))
    # The empty set behaves as {true}.
    return members or (TRUE,)


def _decompose(
    gamma: Sequence[Formula], rng: random.Random | None, dual: bool
) -> Iterator[frozenset[Literal]]:
    """Literal sets at the leaves of the UL (``dual=False``) or EL recursion.

    Without ``rng`` the first non-literal member is expanded; with ``rng`` a
    random member is picked, which exercises order independence.
    """
    stack: list[tuple[tuple[Formula, ...], frozenset[Literal]]] = [(tuple(gamma), frozenset())]
    while stack:
        pending, lits = stack.pop()
        if not pending:
            yield lits
            continue
        i = rng.randrange(len(pending)) if rng is not None else 0
        f = pending[i]
        rest = pending[:i] + pending[i + 1 :]
        lit = as_literal(f)
        if lit is not None:
            stack.append((rest, lits | {lit}))
            continue
        if isinstance(f, Not):
            g = f.arg
            if isinstance(g, Not):
                stack.append(((g.arg,) + rest, lits))
                continue
            # !(a | b) is handled as !a & !b, and !(a & b) as !a | !b.
            parts = (Not(g.left), Not(g.right))
            splits = isinstance(g, And) != dual
        else:
            parts = (f.left, f.right)
            splits = isinstance(f, Or) != dual
        if splits:
            stack.append(((parts[1],) + rest, lits))
            stack.append(((parts[0],) + rest, lits))
        else:
            stack.append((parts + rest, lits))


def ul_leaves(gamma: Formula | Iterable[Formula], rng: random.Random | None = None):
    return _decompose(_formula_set(gamma), rng, dual=False)


def el_leaves(gamma: Formula | Iterable[Formula], rng: random.Random | None = None):
    return _decompose(_formula_set(gamma), rng, dual=True)


# A base-case step compiled against a vocabulary: w' = (w & ~mask) | value.
Step = tuple[int, int]


def _ul_step(lits: frozenset[Literal], vocab: Vocabulary) -> Step | None:
    if not is_consistent(lits):
        return None
    mask = value = 0
    for lit in lits:
        if lit.is_constant:
            continue
        bit = 1 << vocab.index(lit.atom)
        mask |= bit
        if lit.positive:
            value |= bit
    return mask, value


def _el_step(lits: frozenset[Literal], vocab: Vocabulary) -> Step | None:
    # The disjunction of the set is valid iff it holds TOP or a complementary pair.
    if TOP in lits or not is_consistent(lits - {BOT}):
        return None
    mask = value = 0
    for lit in lits:
        if lit.is_constant:
            continue
        bit = 1 << vocab.index(lit.atom)
        mask |= bit
        if not lit.positive:
            value |= bit
    return mask, value


def _steps(leaves, vocab: Vocabulary, compile_step) -> list[Step]:
    steps = {compile_step(l, vocab) for l in set(leaves)}
    steps.discard(None)
    return sorted(steps)


def _apply(steps: list[Step], bits: Iterable[int]) -> set[int]:
    return {(w & ~mask) | value for w in bits for mask, value in steps}


def ul(w: Interpretation, gamma: Formula | Iterable[Formula], rng: random.Random | None = None) -> ModelSet:
    """Interpretations closest to ``w`` according to the formula set ``gamma``."""
    gamma = _formula_set(gamma)
    for f in gamma:
        w.vocab.check(f)
    steps = _steps(ul_leaves(gamma, rng), w.vocab, _ul_step)
    return ModelSet(w.vocab, frozenset(_apply(steps, [w.bits])))


def el(w: Interpretation, gamma: Formula | Iterable[Formula], rng: random.Random | None = None) -> ModelSet:
    """Erasure counterpart of :func:`ul`."""
    gamma = _formula_set(gamma)
    for f in gamma:
        w.vocab.check(f)
    steps = _steps(el_leaves(gamma, rng), w.vocab, _el_step)
    return ModelSet(w.vocab, frozenset(_apply(steps, [w.bits])))


def _vocab(vocab: Vocabulary | None, *fs: Formula) -> Vocabulary:
    base = Vocabulary.of(*fs)
    if vocab is None:
        return base
    for f in fs:
        vocab.check(f)
    return vocab


def _image(base: ModelSet, steps: list[Step], jobs: int = 1) -> set[int]:
    bits = sorted(base.members)
    if jobs <= 1 or len(bits) < 2:
        return _apply(steps, bits)
    chunks = [bits[i::jobs] for i in range(jobs)]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(lambda c: _apply(steps, c), chunks))
    return set().union(*parts)


def update_c(
    psi: Formula, mu: Formula, vocab: Vocabulary | None = None, jobs: int = 1
) -> ChangeResult:
    """Union of ``ul(w, {mu})`` over the models ``w`` of ``psi``."""
    vocab = _vocab(vocab, psi, mu)
    base = enumerate_models(psi, vocab)
    steps = _steps(ul_leaves(mu), vocab, _ul_step)
    return ChangeResult(ModelSet(vocab, frozenset(_image(base, steps, jobs))))


def erase_c(psi: Formula, mu: Formula, vocab: Vocabulary | None = None) -> ChangeResult:
    """Erasure as ``Mod(psi)`` plus the update of ``psi`` by ``!mu``."""
    vocab = _vocab(vocab, psi, mu)
    base = enumerate_models(psi, vocab)
    steps = _steps(ul_leaves(Not(mu)), vocab, _ul_step)
    return ChangeResult(ModelSet(vocab, base.members | frozenset(_apply(steps, base.members))))


def erase_c_direct(psi: Formula, mu: Formula, vocab: Vocabulary | None = None) -> ChangeResult:
    """Erasure built on ``el``: ``Mod(psi)`` plus ``el(w, {mu})`` per model."""
    vocab = _vocab(vocab, psi, mu)
    base = enumerate_models(psi, vocab)
    steps = _steps(el_leaves(mu), vocab, _el_step)
    return ChangeResult(ModelSet(vocab, base.members | frozenset(_apply(steps, base.members))))


def update_c_guarded(psi: Formula, mu: Formula, vocab: Vocabulary | None = None) -> ChangeResult:
    """Leaves ``psi`` alone when it already entails ``mu``."""
    vocab = _vocab(vocab, psi, mu)
    if entails(psi, mu, vocab):
        return ChangeResult(enumerate_models(psi, vocab))
    return update_c(psi, mu, vocab)


def pi_formula(mu: Formula) -> Formula:
    """Disjunction of the prime implicants of ``mu`` in canonical order."""
    terms = prime_implicants(mu)
    return disj(t.to_formula() for t in terms)


def update_c_pi(psi: Formula, mu: Formula, vocab: Vocabulary | None = None) -> ChangeResult:
    vocab = _vocab(vocab, psi, mu)
    return update_c(psi, pi_formula(mu), vocab)


def full_dnf(mu: Formula, vocab: Vocabulary | None = None) -> Formula:
    """Disjunction of the model terms of ``mu`` over ``vocab`` (default: its own atoms)."""
    return enumerate_models(mu, vocab).to_dnf().to_formula()


def update_c_ss(psi: Formula, mu: Formula, vocab: Vocabulary | None = None) -> ChangeResult:
    vocab = _vocab(vocab, psi, mu)
    return update_c(psi, full_dnf(mu), vocab)


def update_c_triv(psi: Formula, mu: Formula, vocab: Vocabulary | None = None) -> ChangeResult:
    vocab = _vocab(vocab, psi, mu)
    return update_c(psi, full_dnf(mu, vocab), vocab)


def tautology_over(names: Iterable[str]) -> Formula:
    """``(p | !p) & ...`` over ``names`` in sorted order; ``true`` when empty."""
    return conj(Or(Var(p), Not(Var(p))) for p in sorted(set(names)))


def forget(psi: Formula, names: Iterable[str], vocab: Vocabulary | None = None) -> ChangeResult:
    """Forget ``names`` by updating with a tautology over them."""
    names = set(names)
    vocab = vocab or Vocabulary.of(psi, names)
    return update_c(psi, tautology_over(names), vocab)


def revise_c(psi: Formula, mu: Formula, vocab: Vocabulary | None = None) -> ChangeResult:
    """Compositional revision: ul-candidates kept when their change from the
    source model is a subset-minimal difference between ``psi`` and ``mu``.
    """
    vocab = _vocab(vocab, psi, mu)
    base = enumerate_models(psi, vocab)
    targets = enumerate_models(mu, vocab)
    diffs = {w ^ v for w in base.members for v in targets.members}
    minimal = {d for d in diffs if not any(e != d and e & d == e for e in diffs)}
    steps = _steps(ul_leaves(mu), vocab, _ul_step)
    kept = {
        v
        for w in base.members
        for mask, value in steps
        if ((v := (w & ~mask) | value) ^ w) in minimal
    }
    return ChangeResult(ModelSet(vocab, frozenset(kept)))
