"""Instance family showing that compositional update can blow up in size.

For ``n`` atoms ``X = x1..xn`` the base is one clause ``gamma_i | !c_i`` per
3-literal clause ``gamma_i`` over ``X`` (with a fresh atom ``c_i``), and the
update is ``!x1 & !y1 & ... & !xn & !yn``.  A 3CNF ``beta`` over ``X`` is
satisfiable iff the interpretation ``omega_beta`` (``c_i`` true exactly for
the clauses of ``beta``, everything else false) is a model of the update.

Clause convention: with ``n >= 3`` a clause is 3 literals over 3 distinct
atoms.  Below that there are no such clauses, so a clause is any multiset of
3 literals over ``X``, stored as its literal set; repeated literals collapse
and complementary pairs are allowed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .formula import Formula, Literal, Not, Or, Var, conj, disj
from .semantics import Interpretation, Vocabulary, truth_table

MAX_BLOWUP_N = 4

CLAUSE_CONVENTION = (
    "n>=3: 3 literals over 3 distinct atoms; "
    "n<3: multisets of 3 literals over X collapsed to literal sets"
)


@dataclass(frozen=True)
class BlowupInstance:
    n: int
    clauses: tuple[tuple[Literal, ...], ...]
    psi: Formula
    mu: Formula
    vocab: Vocabulary

    def clause_atom(self, i: int) -> str:
        return f"c{i + 1}"

    def omega_beta(self, beta: Sequence[int]) -> Interpretation:
        """Interpretation with ``c_i`` true iff clause ``i`` is in ``beta``; all x, y false."""
        chosen = {self.clause_atom(i) for i in beta}
        bits = 0
        for a in chosen:
            bits |= 1 << self.vocab.index(a)
        return Interpretation(self.vocab, bits)


def three_literal_clauses(n: int) -> list[tuple[Literal, ...]]:
    xs = [f"x{i}" for i in range(1, n + 1)]
    lits = [Literal(x, s) for x in xs for s in (True, False)]
    if n >= 3:
        raw = (
            tuple(Literal(a, s) for a, s in zip(trio, signs))
            for trio in itertools.combinations(xs, 3)
            for signs in itertools.product((True, False), repeat=3)
        )
    else:
        raw = itertools.combinations_with_replacement(lits, 3)
    seen = dict.fromkeys(tuple(sorted(set(c))) for c in raw)
    return sorted(seen, key=lambda c: (len(c), c))


def gen_blowup(n: int) -> BlowupInstance:
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > MAX_BLOWUP_N:
        raise ValueError(f"n={n} is beyond the desk-scale limit of {MAX_BLOWUP_N}")
    clauses = three_literal_clauses(n)
    psi = conj(
        Or(disj(l.to_formula() for l in gamma), Not(Var(f"c{i + 1}")))
        for i, gamma in enumerate(clauses)
    )
    mu = conj(
        f for i in range(1, n + 1) for f in (Not(Var(f"x{i}")), Not(Var(f"y{i}")))
    )
    names = [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]
    names += [f"c{i + 1}" for i in range(len(clauses))]
    return BlowupInstance(n, tuple(clauses), psi, mu, Vocabulary(tuple(names)))


def random_3cnf(rng: random.Random, inst: BlowupInstance, max_clauses: int | None = None) -> list[int]:
    """Indices of a random nonempty set of clauses of ``inst``."""
    k = rng.randint(1, min(max_clauses or len(inst.clauses), len(inst.clauses)))
    return sorted(rng.sample(range(len(inst.clauses)), k))


def beta_formula(inst: BlowupInstance, beta: Sequence[int]) -> Formula:
    return conj(disj(l.to_formula() for l in inst.clauses[i]) for i in beta)


def beta_satisfiable(inst: BlowupInstance, beta: Sequence[int]) -> bool:
    """Decide satisfiability of ``beta`` by enumerating assignments of X."""
    X = Vocabulary(tuple(f"x{i}" for i in range(1, inst.n + 1)))
    return truth_table(beta_formula(inst, beta), X) != 0
