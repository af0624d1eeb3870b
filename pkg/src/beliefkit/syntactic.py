"""Symbolic compositional update over disjunctive normal forms.

``eliminant(P, psi)`` drops every literal over ``P`` from each term of
``dnf(psi)``; ``update_syntactic(psi, mu)`` conjoins, for every term ``t`` of
``dnf(mu)``, the eliminant of ``atoms(t)`` in ``psi`` with ``t``.  The output
is again a canonical dnf, so it can be fed straight back in as a new base.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .formula import (
    DnfFormula,
    Formula,
    Term,
    dnf_masks,
    masks_to_literals,
    size,
    atoms,
)


def _index(*groups: Iterable[str]) -> tuple[dict[str, int], list[str]]:
    names = sorted(set().union(*groups))
    return {a: i + 1 for i, a in enumerate(names)}, [""] + names


def _consistent(m: tuple[int, int]) -> bool:
    pos, neg = m
    return not (pos & neg) and not (neg & 1)


def _terms(psi: Formula | DnfFormula, index: dict[str, int]) -> list[tuple[int, int]]:
    if isinstance(psi, DnfFormula):
        out = []
        for t in psi.terms:
            pos = neg = 0
            for lit in t.literals:
                bit = 1 if lit.is_constant else 1 << index[lit.atom]
                if lit.positive:
                    # TOP inside a term carries no information.
                    pos |= 0 if lit.is_constant else bit
                else:
                    neg |= bit
            out.append((pos, neg))
        return out
    return sorted(dnf_masks(psi, index))


def _atoms_of(f: Formula | DnfFormula) -> frozenset[str]:
    return f.atoms() if isinstance(f, DnfFormula) else atoms(f)


def _strip(terms, drop: int, dedup: bool) -> list[tuple[int, int]]:
    # Inconsistent terms denote false and contribute nothing to the disjunction;
    # stripping them first would wrongly revive them.
    out = [(pos & ~drop, neg & ~drop) for pos, neg in terms if _consistent((pos, neg))]
    return list(dict.fromkeys(out)) if dedup else out


def _to_dnf(masks, names: list[str], dedup: bool) -> DnfFormula:
    return DnfFormula.of((Term.of(masks_to_literals(m, names)) for m in masks), dedup=dedup)


def eliminant(P: Iterable[str], psi: Formula | DnfFormula, raw: bool = False) -> DnfFormula:
    """Existentially quantify the atoms ``P`` out of ``psi``."""
    P = set(P)
    index, names = _index(_atoms_of(psi), P)
    drop = 0
    for p in P:
        drop |= 1 << index[p]
    return _to_dnf(_strip(_terms(psi, index), drop, not raw), names, not raw)


def update_syntactic(psi: Formula | DnfFormula, mu: Formula | DnfFormula, raw: bool = False) -> DnfFormula:
    """Compositional update computed on dnf terms.

    With ``raw`` the per-term results are concatenated without removing
    duplicate terms, which is the size the algorithm itself produces.
    """
    index, names = _index(_atoms_of(psi), _atoms_of(mu))
    base = _terms(psi, index)
    out: list[tuple[int, int]] = []
    for t in _terms(mu, index):
        if not _consistent(t):
            continue
        tpos, tneg = t
        for pos, neg in _strip(base, tpos | tneg, not raw):
            out.append((pos | tpos, neg | tneg))
    return _to_dnf(out, names, not raw)


@dataclass(frozen=True)
class SizeReport:
    input_psi_size: int
    input_mu_size: int
    output_size: int
    term_counts: tuple[int, int, int]

    def as_row(self) -> dict[str, int]:
        return {
            "psi_size": self.input_psi_size,
            "mu_size": self.input_mu_size,
            "out_size": self.output_size,
            "psi_terms": self.term_counts[0],
            "mu_terms": self.term_counts[1],
            "out_terms": self.term_counts[2],
        }


def size_report(psi: Formula | DnfFormula, mu: Formula | DnfFormula, output: DnfFormula) -> SizeReport:
    """Node counts of the canonical renderings plus dnf term counts."""
    def count(f):
        if isinstance(f, DnfFormula):
            return len(f)
        index, _ = _index(atoms(f))
        return len(dnf_masks(f, index))

    return SizeReport(
        input_psi_size=size(psi),
        input_mu_size=size(mu),
        output_size=size(output),
        term_counts=(count(psi), count(mu), len(output)),
    )
