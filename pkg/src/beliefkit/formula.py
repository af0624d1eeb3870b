"""Propositional formula AST, literals, terms and the fixed normal-form procedures.

Formulas are immutable trees built from :class:`Const`, :class:`Var`,
:class:`Not`, :class:`And` and :class:`Or`.  Implication and the
biconditional only exist in the concrete syntax and are expanded by the
parser.

The normal forms are produced by one fixed procedure (negation normal form,
then distribution) followed by canonical ordering.  Nothing is simplified:
inconsistent terms and tautological clauses survive, so two syntactically
different but equivalent inputs usually give different outputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, NamedTuple, Sequence, Union


class Formula:
    """Base class for formula nodes."""

    __slots__ = ()

    def __and__(self, other: Formula) -> Formula:
        return And(self, other)

    def __or__(self, other: Formula) -> Formula:
        return Or(self, other)

    def __invert__(self) -> Formula:
        return Not(self)

    def __str__(self) -> str:
        from .parser import render

        return render(self)


@dataclass(frozen=True, slots=True)
class Const(Formula):
    value: bool

    def __repr__(self) -> str:
        return "TRUE" if self.value else "FALSE"


@dataclass(frozen=True, slots=True)
class Var(Formula):
    name: str

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Not(Formula):
    arg: Formula

    def __repr__(self) -> str:
        return f"Not({self.arg!r})"


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"And({self.left!r}, {self.right!r})"


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"Or({self.left!r}, {self.right!r})"


TRUE = Const(True)
FALSE = Const(False)


def conj(fs: Iterable[Formula]) -> Formula:
    """Left-associated conjunction; the empty conjunction is ``true``."""
    fs = list(fs)
    if not fs:
        return TRUE
    return reduce(And, fs)


def disj(fs: Iterable[Formula]) -> Formula:
    """Left-associated disjunction; the empty disjunction is ``false``."""
    fs = list(fs)
    if not fs:
        return FALSE
    return reduce(Or, fs)


# ---------------------------------------------------------------------------
# Literals, terms, clause-form normal forms
# ---------------------------------------------------------------------------


class Literal(NamedTuple):
    """A signed atom.  The empty atom name is reserved for TOP and BOT."""

    atom: str
    positive: bool = True

    @property
    def is_constant(self) -> bool:
        return self.atom == ""

    def complement(self) -> Literal:
        return Literal(self.atom, not self.positive)

    def to_formula(self) -> Formula:
        if self.is_constant:
            return Const(self.positive)
        v = Var(self.atom)
        return v if self.positive else Not(v)

    def __str__(self) -> str:
        if self.is_constant:
            return "true" if self.positive else "false"
        return self.atom if self.positive else "!" + self.atom

    @classmethod
    def parse(cls, text: str) -> Literal:
        text = text.strip()
        if text in ("true", "false"):
            return cls("", text == "true")
        if text.startswith("!"):
            return cls(text[1:].strip(), False)
        return cls(text, True)


TOP = Literal("", True)
BOT = Literal("", False)


def as_literal(f: Formula) -> Literal | None:
    """Return ``f`` as a literal if it is one (``!true`` counts as BOT)."""
    if isinstance(f, Var):
        return Literal(f.name, True)
    if isinstance(f, Const):
        return TOP if f.value else BOT
    if isinstance(f, Not):
        if isinstance(f.arg, Var):
            return Literal(f.arg.name, False)
        if isinstance(f.arg, Const):
            return BOT if f.arg.value else TOP
    return None


def is_consistent(lits: Iterable[Literal]) -> bool:
    """A literal set is consistent iff it holds no BOT and no complementary pair."""
    seen: dict[str, bool] = {}
    for lit in lits:
        if lit == BOT:
            return False
        if lit.is_constant:
            continue
        if seen.setdefault(lit.atom, lit.positive) != lit.positive:
            return False
    return True


@dataclass(frozen=True)
class Term:
    """A conjunction of literals, deduplicated and sorted."""

    literals: tuple[Literal, ...] = ()

    @classmethod
    def of(cls, lits: Iterable[Literal]) -> Term:
        return cls(tuple(sorted(set(lits))))

    @property
    def consistent(self) -> bool:
        return is_consistent(self.literals)

    def atoms(self) -> frozenset[str]:
        return frozenset(l.atom for l in self.literals if not l.is_constant)

    def to_formula(self) -> Formula:
        if not self.literals:
            return TRUE
        return conj(l.to_formula() for l in self.literals)

    def __iter__(self) -> Iterator[Literal]:
        return iter(self.literals)

    def __len__(self) -> int:
        return len(self.literals)

    def __str__(self) -> str:
        return str(self.to_formula())


@dataclass(frozen=True)
class DnfFormula:
    """Disjunction of terms.  No terms means false; an empty term means true."""

    terms: tuple[Term, ...] = ()

    @classmethod
    def of(cls, terms: Iterable[Term | Iterable[Literal]], dedup: bool = True) -> DnfFormula:
        ts = [t if isinstance(t, Term) else Term.of(t) for t in terms]
        if dedup:
            ts = list(set(ts))
        return cls(tuple(sorted(ts, key=_term_key)))

    def to_formula(self) -> Formula:
        return disj(t.to_formula() for t in self.terms)

    def to_json(self) -> str:
        return json.dumps([[str(l) for l in t] for t in self.terms])

    @classmethod
    def from_json(cls, text: str) -> DnfFormula:
        data = json.loads(text)
        return cls.of(Term.of(Literal.parse(s) for s in term) for term in data)

    def atoms(self) -> frozenset[str]:
        return frozenset().union(*(t.atoms() for t in self.terms))

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return str(self.to_formula())


@dataclass(frozen=True)
class CnfFormula:
    """Conjunction of clauses, each a sorted tuple of literals read disjunctively."""

    clauses: tuple[tuple[Literal, ...], ...] = ()

    @classmethod
    def of(cls, clauses: Iterable[Iterable[Literal]]) -> CnfFormula:
        cs = {tuple(sorted(set(c))) for c in clauses}
        return cls(tuple(sorted(cs, key=_lits_key)))

    def to_formula(self) -> Formula:
        return conj(disj(l.to_formula() for l in c) for c in self.clauses)

    def to_json(self) -> str:
        return json.dumps([[str(l) for l in c] for c in self.clauses])

    def __iter__(self):
        return iter(self.clauses)

    def __len__(self) -> int:
        return len(self.clauses)

    def __str__(self) -> str:
        return str(self.to_formula())


def _lits_key(lits: Sequence[Literal]):
    return tuple(lits)


def _term_key(t: Term):
    return t.literals


# ---------------------------------------------------------------------------
# Structural operations
# ---------------------------------------------------------------------------


def atoms(f: Formula) -> frozenset[str]:
    out: set[str] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Var):
            out.add(g.name)
        elif isinstance(g, Not):
            stack.append(g.arg)
        elif isinstance(g, (And, Or)):
            stack.append(g.left)
            stack.append(g.right)
    return frozenset(out)


def chain(f: Formula) -> list[Formula]:
    """Operands of the left-nested run of ``type(f)`` rooted at ``f``.

    ``chain(And(And(a, b), c)) == [a, b, c]``.  Walking chains iteratively
    keeps long disjunctions (such as dnf renderings) off the call stack.
    """
    op = type(f)
    rights = []
    while type(f) is op:
        rights.append(f.right)
        f = f.left
    rights.append(f)
    rights.reverse()
    return rights


def rebuild(op: type, parts: list[Formula]) -> Formula:
    return reduce(op, parts)


def depth(f: Formula) -> int:
    """Maximum nesting of connectives; 0 for atoms and constants."""
    if isinstance(f, (Var, Const)):
        return 0
    if isinstance(f, Not):
        return 1 + depth(f.arg)
    parts = chain(f)
    # In a left-nested chain of n operands the head sits under n-1 binary
    # nodes and operand k >= 1 under n-k.
    n = len(parts)
    return max((n - 1 if k == 0 else n - k) + depth(g) for k, g in enumerate(parts))


def size(f: Formula | DnfFormula | CnfFormula) -> int:
    """Number of AST nodes."""
    if isinstance(f, (DnfFormula, CnfFormula)):
        f = f.to_formula()
    n = 0
    stack = [f]
    while stack:
        g = stack.pop()
        n += 1
        if isinstance(g, Not):
            stack.append(g.arg)
        elif isinstance(g, (And, Or)):
            stack.append(g.left)
            stack.append(g.right)
    return n


def substitute(f: Formula, p: str, g: Formula) -> Formula:
    """Replace every occurrence of atom ``p`` in ``f`` by ``g``."""
    if isinstance(f, Var):
        return g if f.name == p else f
    if isinstance(f, Const):
        return f
    if isinstance(f, Not):
        return Not(substitute(f.arg, p, g))
    return rebuild(type(f), [substitute(h, p, g) for h in chain(f)])


def to_nnf(f: Formula) -> Formula:
    return _nnf(f, True)


def _nnf(f: Formula, positive: bool) -> Formula:
    if isinstance(f, Const):
        return f if positive else Const(not f.value)
    if isinstance(f, Var):
        return f if positive else Not(f)
    if isinstance(f, Not):
        return _nnf(f.arg, not positive)
    op = type(f) if positive else (Or if isinstance(f, And) else And)
    return rebuild(op, [_nnf(g, positive) for g in chain(f)])


# Clause-form work happens on (pos, neg) bitmask pairs over a local atom index.
# Bit 0 is reserved for the constant: in a term, neg bit 0 is BOT; in a
# clause, pos bit 0 is TOP.  Masks keep the distribution step cheap enough for
# the large products produced by the blow-up family.

Masks = tuple[int, int]


def _index_of(f: Formula) -> dict[str, int]:
    return {a: i + 1 for i, a in enumerate(sorted(atoms(f)))}


def _lit_masks(lit: Literal, index: dict[str, int]) -> Masks:
    bit = 1 if lit.is_constant else 1 << index[lit.atom]
    return (bit, 0) if lit.positive else (0, bit)


def dnf_masks(f: Formula, index: dict[str, int]) -> set[Masks]:
    """Terms of the dnf of ``to_nnf(f)`` as a set of (pos, neg) masks.

    ``true`` contributes nothing to a term; ``false`` is kept as the BOT bit.
    """
    return _distribute(to_nnf(f), index, conj_is_product=True)


def cnf_masks(f: Formula, index: dict[str, int]) -> set[Masks]:
    return _distribute(to_nnf(f), index, conj_is_product=False)


def _distribute(f: Formula, index: dict[str, int], conj_is_product: bool) -> set[Masks]:
    lit = as_literal(f)
    if lit is not None:
        if lit.is_constant and lit.positive == conj_is_product:
            # TOP inside a term, or BOT inside a clause: the unit element.
            return {(0, 0)}
        return {_lit_masks(lit, index)}
    parts = [_distribute(g, index, conj_is_product) for g in chain(f)]
    if isinstance(f, And) != conj_is_product:
        return set().union(*parts)
    acc = parts[0]
    for right in parts[1:]:
        acc = {(lp | rp, ln | rn) for lp, ln in acc for rp, rn in right}
    return acc


def masks_to_literals(m: Masks, names: Sequence[str]) -> list[Literal]:
    """Decode a mask pair; ``names[i]`` is the atom at bit ``i`` (``names[0]`` unused)."""
    pos, neg = m
    out: list[Literal] = []
    if neg & 1:
        out.append(BOT)
    if pos & 1:
        out.append(TOP)
    pos >>= 1
    neg >>= 1
    i = 1
    while pos or neg:
        if pos & 1:
            out.append(Literal(names[i], True))
        if neg & 1:
            out.append(Literal(names[i], False))
        pos >>= 1
        neg >>= 1
        i += 1
    return out


def _names(index: dict[str, int]) -> list[str]:
    names = [""] * (len(index) + 1)
    for a, i in index.items():
        names[i] = a
    return names


def to_dnf(f: Formula) -> DnfFormula:
    """nnf, then distribute conjunction over disjunction, then sort.

    Inconsistent terms are kept.
    """
    index = _index_of(f)
    names = _names(index)
    return DnfFormula.of(Term.of(masks_to_literals(m, names)) for m in dnf_masks(f, index))


def to_cnf(f: Formula) -> CnfFormula:
    """nnf, then distribute disjunction over conjunction, then sort.

    Tautological clauses are kept.
    """
    index = _index_of(f)
    names = _names(index)
    return CnfFormula.of(masks_to_literals(m, names) for m in cnf_masks(f, index))


AnyFormula = Union[Formula, DnfFormula, CnfFormula]


def as_formula(f: AnyFormula) -> Formula:
    if isinstance(f, (DnfFormula, CnfFormula)):
        return f.to_formula()
    return f
