"""Katsuno-Mendelzon update postulates as executable checks.

``check`` evaluates one postulate on one instance over a vocabulary fixed to
the union of the instance's atoms.  ``search_counterexample`` runs ``check``
on seeded random instances and reports the first failure by trial index.
"""

from __future__ import annotations

import enum
import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Mapping

from . import compositional as comp
from . import oracles
from .formula import FALSE, TRUE, And, Const, Formula, Not, Or, Var, conj, to_cnf, to_dnf, to_nnf
from .parser import render
from .semantics import ModelSet, Vocabulary, enumerate_models
from .syntactic import update_syntactic

UpdateOp = Callable[[Formula, Formula, Vocabulary], ModelSet]


class PostulateId(str, enum.Enum):
    U1 = "U1"
    U2 = "U2"
    U3 = "U3"
    U4 = "U4"
    U5 = "U5"
    U6 = "U6"
    U7 = "U7"
    U8 = "U8"
    LEVI = "LEVI"
    HARPER = "HARPER"
    DISJ = "DISJ"


ARITY: dict[PostulateId, tuple[str, ...]] = {
    PostulateId.U1: ("psi", "mu"),
    PostulateId.U2: ("psi", "mu"),
    PostulateId.U3: ("psi", "mu"),
    PostulateId.U4: ("psi1", "psi2", "mu1", "mu2"),
    PostulateId.U5: ("psi", "mu", "phi"),
    PostulateId.U6: ("psi", "mu1", "mu2"),
    PostulateId.U7: ("psi", "mu1", "mu2"),
    PostulateId.U8: ("psi1", "psi2", "mu"),
    PostulateId.LEVI: ("psi", "mu"),
    PostulateId.HARPER: ("psi", "mu"),
    PostulateId.DISJ: ("psi", "mu1", "mu2"),
}


def _syntactic(psi: Formula, mu: Formula, vocab: Vocabulary) -> ModelSet:
    return enumerate_models(update_syntactic(psi, mu).to_formula(), vocab)


OPERATORS: dict[str, UpdateOp] = {
    "compositional": lambda p, m, v: comp.update_c(p, m, v).models,
    "guarded": lambda p, m, v: comp.update_c_guarded(p, m, v).models,
    "pi": lambda p, m, v: comp.update_c_pi(p, m, v).models,
    "ss": lambda p, m, v: comp.update_c_ss(p, m, v).models,
    "triv": lambda p, m, v: comp.update_c_triv(p, m, v).models,
    "pma": oracles.update_pma,
    "ss-models": oracles.update_ss_models,
    "syntactic": _syntactic,
}

# Erasure partners for the identity checks.
ERASERS: dict[str, UpdateOp] = {
    "compositional": lambda p, m, v: comp.erase_c_direct(p, m, v).models,
}


class ArityError(ValueError):
    pass


@dataclass
class Verdict:
    postulate: PostulateId
    operator: str
    outcome: str  # "pass" | "fail" | "vacuous"
    trials: int = 1
    seed: int | None = None
    witness: dict | None = None
    passed: int = 0
    vacuous: int = 0

    def to_dict(self) -> dict:
        return {
            "postulate": self.postulate.value,
            "operator": self.operator,
            "outcome": self.outcome,
            "trials": self.trials,
            "seed": self.seed,
            "witness": self.witness,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _operator(op: str | UpdateOp) -> tuple[str, UpdateOp]:
    if isinstance(op, str):
        try:
            return op, OPERATORS[op]
        except KeyError:
            raise ValueError(f"unknown operator {op!r}; choose from {sorted(OPERATORS)}") from None
    return getattr(op, "__name__", "custom"), op


def _witness(instance: Mapping[str, Formula], model=None, **extra) -> dict:
    w = {k: render(v) for k, v in instance.items()}
    if model is not None:
        w["model"] = str(model)
    w.update(extra)
    return w


def _first(models: ModelSet):
    return models.interpretations()[0]


def check(
    postulate: PostulateId | str,
    op: str | UpdateOp,
    instance: Mapping[str, Formula],
    vocab: Vocabulary | None = None,
) -> Verdict:
    """Evaluate ``postulate`` for ``op`` on one instance.

    ``instance`` maps the argument names in :data:`ARITY` to formulas.  The
    outcome is ``vacuous`` when an antecedent of the postulate does not hold.
    """
    pid = PostulateId(postulate)
    name, update = _operator(op)
    expected = ARITY[pid]
    if set(instance) != set(expected):
        raise ArityError(f"{pid.value} takes {expected}, got {tuple(instance)}")
    V = Vocabulary.of(*instance.values())
    if vocab is not None:
        V = vocab.widen(V.atoms)
    mods = lambda f: enumerate_models(f, V)  # noqa: E731
    upd = lambda p, m: update(p, m, V)  # noqa: E731

    def verdict(outcome: str, model=None, **extra) -> Verdict:
        witness = _witness(instance, model, **extra) if outcome == "fail" else None
        return Verdict(pid, name, outcome, witness=witness,
                       passed=int(outcome == "pass"), vacuous=int(outcome == "vacuous"))

    def same(a: ModelSet, b: ModelSet) -> Verdict:
        if a == b:
            return verdict("pass")
        return verdict("fail", _first((a - b) | (b - a)))

    def subset(a: ModelSet, b: ModelSet) -> Verdict:
        extra = a - b
        return verdict("fail", _first(extra)) if extra else verdict("pass")

    g = instance.get
    if pid is PostulateId.U1:
        return subset(upd(g("psi"), g("mu")), mods(g("mu")))
    if pid is PostulateId.U2:
        base = mods(g("psi"))
        if not base <= mods(g("mu")):
            return verdict("vacuous")
        return same(upd(g("psi"), g("mu")), base)
    if pid is PostulateId.U3:
        if not mods(g("psi")) or not mods(g("mu")):
            return verdict("vacuous")
        return verdict("pass") if upd(g("psi"), g("mu")) else verdict("fail")
    if pid is PostulateId.U4:
        if mods(g("psi1")) != mods(g("psi2")) or mods(g("mu1")) != mods(g("mu2")):
            return verdict("vacuous")
        return same(upd(g("psi1"), g("mu1")), upd(g("psi2"), g("mu2")))
    if pid is PostulateId.U5:
        lhs = upd(g("psi"), g("mu")) & mods(g("phi"))
        return subset(lhs, upd(g("psi"), And(g("mu"), g("phi"))))
    if pid is PostulateId.U6:
        r1, r2 = upd(g("psi"), g("mu1")), upd(g("psi"), g("mu2"))
        if not (r1 <= mods(g("mu2")) and r2 <= mods(g("mu1"))):
            return verdict("vacuous")
        return same(r1, r2)
    if pid is PostulateId.U7:
        if len(mods(g("psi"))) != 1:
            return verdict("vacuous")
        lhs = upd(g("psi"), g("mu1")) & upd(g("psi"), g("mu2"))
        return subset(lhs, upd(g("psi"), Or(g("mu1"), g("mu2"))))
    if pid is PostulateId.U8:
        lhs = upd(Or(g("psi1"), g("psi2")), g("mu"))
        return same(lhs, upd(g("psi1"), g("mu")) | upd(g("psi2"), g("mu")))
    if pid is PostulateId.DISJ:
        lhs = upd(g("psi"), Or(g("mu1"), g("mu2")))
        return same(lhs, upd(g("psi"), g("mu1")) | upd(g("psi"), g("mu2")))
    erase = ERASERS.get(name)
    if erase is None:
        raise ValueError(f"{pid.value} needs an erasure operator; none is paired with {name!r}")
    if pid is PostulateId.LEVI:
        rhs = erase(g("psi"), Not(g("mu")), V) & mods(g("mu"))
        return same(upd(g("psi"), g("mu")), rhs)
    # HARPER
    rhs = mods(g("psi")) | upd(g("psi"), Not(g("mu")))
    return same(erase(g("psi"), g("mu"), V), rhs)


# ---------------------------------------------------------------------------
# Random instances
# ---------------------------------------------------------------------------


def random_formula(seed: int | random.Random, vocab: Vocabulary, max_depth: int,
                   leaf_prob: float = 0.3) -> Formula:
    """Reproducible random formula over ``vocab`` with depth at most ``max_depth``."""
    if not len(vocab):
        raise ValueError("random_formula needs a nonempty vocabulary")
    if max_depth < 0:
        raise ValueError("max_depth must be nonnegative")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    names = vocab.atoms

    def gen(d: int) -> Formula:
        if d == 0 or rng.random() < leaf_prob:
            if rng.random() < 0.1:
                return TRUE if rng.random() < 0.5 else FALSE
            return Var(rng.choice(names))
        r = rng.random()
        if r < 0.25:
            return Not(gen(d - 1))
        if r < 0.625:
            return And(gen(d - 1), gen(d - 1))
        return Or(gen(d - 1), gen(d - 1))

    return gen(max_depth)


def complete_formula(rng: random.Random, vocab: Vocabulary) -> Formula:
    """Conjunction of the literals of one random interpretation."""
    return conj(Var(a) if rng.random() < 0.5 else Not(Var(a)) for a in vocab.atoms)


def _double_negate(rng: random.Random, f: Formula) -> Formula:
    """Insert double negations at random; the nnf is unchanged."""
    if isinstance(f, (Var, Const)):
        out = f
    elif isinstance(f, Not):
        out = Not(_double_negate(rng, f.arg))
    else:
        out = type(f)(_double_negate(rng, f.left), _double_negate(rng, f.right))
    return Not(Not(out)) if rng.random() < 0.2 else out


def equivalent_rewrite(rng: random.Random, f: Formula, vocab: Vocabulary) -> Formula:
    """A randomly chosen formula equivalent to ``f``."""
    choice = rng.randrange(6)
    if choice == 0:
        return to_nnf(f)
    if choice == 1:
        return to_dnf(f).to_formula()
    if choice == 2:
        return to_cnf(f).to_formula()
    if choice == 3:
        return _double_negate(rng, f)
    if choice == 4:
        return Or(f, And(f, random_formula(rng, vocab, 2)))
    return And(f, Or(f, Not(f)))


def random_instance(pid: PostulateId, rng: random.Random, vocab: Vocabulary, max_depth: int = 3,
                    op: UpdateOp | None = None) -> dict[str, Formula]:
    """Arguments for one trial of ``pid``; antecedents are made likely to hold."""
    rf = lambda: random_formula(rng, vocab, max_depth)  # noqa: E731
    if pid is PostulateId.U2:
        psi = rf()
        return {"psi": psi, "mu": Or(psi, rf()) if rng.random() < 0.8 else rf()}
    if pid is PostulateId.U4:
        psi, mu = rf(), rf()
        return {"psi1": psi, "psi2": equivalent_rewrite(rng, psi, vocab),
                "mu1": mu, "mu2": equivalent_rewrite(rng, mu, vocab)}
    if pid is PostulateId.U6:
        psi, mu1 = rf(), rf()
        if op is not None and rng.random() < 0.5:
            mu2 = op(psi, mu1, vocab).to_dnf().to_formula()
        else:
            mu2 = rf()
        return {"psi": psi, "mu1": mu1, "mu2": mu2}
    if pid is PostulateId.U7:
        return {"psi": complete_formula(rng, vocab), "mu1": rf(), "mu2": rf()}
    return {name: rf() for name in ARITY[pid]}


def search_counterexample(
    postulate: PostulateId | str,
    op: str | UpdateOp,
    vocab: Vocabulary,
    trials: int,
    seed: int,
    max_depth: int = 3,
    jobs: int = 1,
) -> Verdict:
    """Run ``check`` on ``trials`` random instances.

    Returns the first failing trial by index, else a ``pass`` verdict (or
    ``vacuous`` when no trial met the postulate's antecedent).
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    pid = PostulateId(postulate)
    name, update = _operator(op)

    def trial(i: int) -> Verdict:
        rng = random.Random(f"{seed}:{pid.value}:{i}")
        inst = random_instance(pid, rng, vocab, max_depth, update)
        v = check(pid, op, inst, vocab)
        if v.witness is not None:
            v.witness["trial"] = i
        return v

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(trial, range(trials)))
    else:
        results = []
        for i in range(trials):
            v = trial(i)
            results.append(v)
            if v.outcome == "fail":
                break
    for i, v in enumerate(results):
        if v.outcome == "fail":
            return Verdict(pid, name, "fail", trials=i + 1, seed=seed, witness=v.witness,
                           passed=sum(r.passed for r in results[:i]),
                           vacuous=sum(r.vacuous for r in results[:i]))
    passed = sum(r.passed for r in results)
    return Verdict(pid, name, "pass" if passed else "vacuous", trials=trials, seed=seed,
                   passed=passed, vacuous=trials - passed)
