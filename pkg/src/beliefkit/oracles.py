"""Reference model-based operators, written directly from their definitions.

These deliberately avoid the decomposition machinery in
:mod:`beliefkit.compositional`: every operator is a plain double loop over
model sets, comparing atom-set differences.
"""

from __future__ import annotations

from typing import Iterable, Literal

from .formula import FALSE, TRUE, Formula, Or, atoms, substitute
from .semantics import Interpretation, ModelSet, Vocabulary, diff, enumerate_models

DiffSet = frozenset[frozenset[str]]


def _models(psi: Formula, mu: Formula, vocab: Vocabulary | None):
    vocab = vocab or Vocabulary.of(psi, mu)
    return vocab, enumerate_models(psi, vocab).interpretations(), enumerate_models(mu, vocab).interpretations()


def _closest(w: Interpretation, candidates: list[Interpretation]) -> list[Interpretation]:
    """Members of ``candidates`` whose difference from ``w`` is subset-minimal."""
    diffs = [(c, diff(w, c)) for c in candidates]
    return [c for c, d in diffs if not any(e < d for _, e in diffs)]


def update_pma(psi: Formula, mu: Formula, vocab: Vocabulary | None = None) -> ModelSet:
    """Possible models approach: per model of ``psi``, the closest models of ``mu``."""
    vocab, base, targets = _models(psi, mu, vocab)
    out = [c for w in base for c in _closest(w, targets)]
    return ModelSet.of(vocab, out)


def update_ss_models(psi: Formula, mu: Formula, vocab: Vocabulary | None = None) -> ModelSet:
    """Standard semantics: models of ``mu`` that differ from a model of ``psi`` only on ``atoms(mu)``."""
    vocab, base, targets = _models(psi, mu, vocab)
    letters = atoms(mu)
    out = [c for w in base for c in targets if diff(w, c) <= letters]
    return ModelSet.of(vocab, out)


Mode = Literal["subset", "cardinality"]


def delta_min(
    alpha: Formula,
    beta: Formula,
    mode: Mode = "subset",
    vocab: Vocabulary | None = None,
) -> DiffSet:
    """Minimal symmetric differences between models of ``alpha`` and ``beta``."""
    vocab, left, right = _models(alpha, beta, vocab)
    diffs = {diff(w1, w2) for w1 in left for w2 in right}
    if not diffs:
        return frozenset()
    if mode == "subset":
        return frozenset(d for d in diffs if not any(e < d for e in diffs))
    if mode == "cardinality":
        least = min(len(d) for d in diffs)
        return frozenset(d for d in diffs if len(d) == least)
    raise ValueError(f"unknown mode {mode!r}")


def _revise(psi: Formula, mu: Formula, mode, vocab: Vocabulary | None) -> ModelSet:
    vocab, base, targets = _models(psi, mu, vocab)
    closest = delta_min(psi, mu, mode, vocab)
    out = [c for c in targets if any(diff(w, c) in closest for w in base)]
    return ModelSet.of(vocab, out)


def revise_satoh(psi: Formula, mu: Formula, vocab: Vocabulary | None = None) -> ModelSet:
    return _revise(psi, mu, "subset", vocab)


def revise_dalal(psi: Formula, mu: Formula, vocab: Vocabulary | None = None) -> ModelSet:
    return _revise(psi, mu, "cardinality", vocab)


def forget_subst(psi: Formula, names: Iterable[str]) -> Formula:
    """Fold ``psi[p/true] | psi[p/false]`` over ``names`` in sorted order."""
    for p in sorted(set(names)):
        psi = Or(substitute(psi, p, TRUE), substitute(psi, p, FALSE))
    return psi
