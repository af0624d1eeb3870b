"""``beliefkit`` command line.

Formula arguments are inline text, ``@path`` to read the text from a file,
or a clause-form JSON list (``[["a","!b"],["c"]]``) read as a dnf.

Exit status: 0 ok, 1 usage or parse error, 2 semantic error (vocabulary or
enumeration cap), 3 engine mismatch under ``--verify``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import bench as benchmod
from . import compositional as comp
from . import oracles
from .blowup import CLAUSE_CONVENTION, MAX_BLOWUP_N, gen_blowup
from .formula import DnfFormula, Formula, to_dnf
from .parser import ParseError, parse, render
from .postulates import ARITY, OPERATORS, ArityError, PostulateId, check, search_counterexample
from .semantics import ModelSet, Vocabulary, VocabularyError, enumerate_models
from .syntactic import eliminant, update_syntactic

EXIT_OK, EXIT_USAGE, EXIT_SEMANTIC, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Mismatch(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# Input and output
# ---------------------------------------------------------------------------


def read_text(arg: str) -> str:
    if arg.startswith("@"):
        try:
            return Path(arg[1:]).read_text()
        except OSError as e:
            raise UsageError(f"cannot read {arg[1:]}: {e.strerror}") from None
    return arg


def read_input(arg: str) -> Formula | DnfFormula:
    text = read_text(arg).strip()
    if text.startswith("["):
        try:
            return DnfFormula.from_json(text)
        except (ValueError, TypeError) as e:
            raise UsageError(f"bad clause-form JSON: {e}") from None
    return parse(text)


def as_formula(f: Formula | DnfFormula) -> Formula:
    return f.to_formula() if isinstance(f, DnfFormula) else f


def read_formula(arg: str) -> Formula:
    return as_formula(read_input(arg))


def atom_list(text: str | None) -> list[str]:
    if not text:
        return []
    return [a for a in (s.strip() for s in read_text(text).replace(",", " ").split()) if a]


class Result:
    """An operator result: a model set, a formula, or both."""

    def __init__(self, vocab: Vocabulary, models: ModelSet | None = None,
                 formula: Formula | DnfFormula | None = None):
        self.vocab = vocab
        self._models = models
        self.formula = formula

    @property
    def models(self) -> ModelSet:
        if self._models is None:
            self._models = enumerate_models(as_formula(self.formula), self.vocab)
        return self._models

    def dnf(self) -> DnfFormula:
        if isinstance(self.formula, DnfFormula):
            return self.formula
        if self.formula is not None:
            return to_dnf(self.formula)
        return self.models.to_dnf()

    def render(self, fmt: str) -> str:
        if fmt == "models":
            return self.models.to_lines()
        if fmt == "dnf":
            return self.dnf().to_json()
        if isinstance(self.formula, Formula):
            return render(self.formula)
        return render(self.dnf().to_formula())


def _change(vocab: Vocabulary, r: comp.ChangeResult) -> Result:
    return Result(vocab, r.models, r.formula)


def _emit(text: str) -> None:
    if text:
        sys.stdout.write(text + "\n")


def _vocab(args, *fs: Formula, extra: Sequence[str] = ()) -> Vocabulary:
    return Vocabulary.of(*fs, extra, atom_list(getattr(args, "vocab", None)))


def _verify(results: dict[str, Result]) -> None:
    names = list(results)
    first = results[names[0]].models
    for n in names[1:]:
        other = results[n].models
        if first != other:
            only = sorted(str(w) for w in ((first - other) | (other - first)).interpretations())
            raise Mismatch(f"{names[0]} and {n} disagree on {len(only)} model(s), e.g. {only[0]}")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _update_engines(args, psi_in, mu_in, V) -> dict[str, Callable[[], Result]]:
    psi, mu = as_formula(psi_in), as_formula(mu_in)
    return {
        "compositional": lambda: _change(V, comp.update_c(psi, mu, V, jobs=args.jobs)),
        "guarded": lambda: _change(V, comp.update_c_guarded(psi, mu, V)),
        "pi": lambda: _change(V, comp.update_c_pi(psi, mu, V)),
        "ss": lambda: _change(V, comp.update_c_ss(psi, mu, V)),
        "triv": lambda: _change(V, comp.update_c_triv(psi, mu, V)),
        "pma": lambda: Result(V, oracles.update_pma(psi, mu, V)),
        "ss-models": lambda: Result(V, oracles.update_ss_models(psi, mu, V)),
        "syntactic": lambda: Result(V, formula=update_syntactic(psi_in, mu_in, raw=args.raw)),
    }


def cmd_update(args) -> int:
    psi_in, mu_in = read_input(args.psi), read_input(args.mu)
    V = _vocab(args, as_formula(psi_in), as_formula(mu_in))
    engines = _update_engines(args, psi_in, mu_in, V)
    result = engines[args.engine]()
    if args.verify:
        _verify({"compositional": engines["compositional"](), "syntactic": engines["syntactic"]()})
    _emit(result.render(args.format))
    return EXIT_OK


def cmd_erase(args) -> int:
    psi, mu = read_formula(args.psi), read_formula(args.mu)
    V = _vocab(args, psi, mu)
    engines = {
        "harper": lambda: _change(V, comp.erase_c(psi, mu, V)),
        "direct": lambda: _change(V, comp.erase_c_direct(psi, mu, V)),
    }
    result = engines[args.engine]()
    if args.verify:
        _verify({k: f() for k, f in engines.items()})
    _emit(result.render(args.format))
    return EXIT_OK


def cmd_forget(args) -> int:
    psi = read_formula(args.psi)
    names = atom_list(args.atoms)
    if not names:
        raise UsageError("--atoms needs at least one atom")
    V = _vocab(args, psi, extra=names)
    engines = {
        "update": lambda: _change(V, comp.forget(psi, names, V)),
        "subst": lambda: Result(V, formula=oracles.forget_subst(psi, names)),
        "ss": lambda: _change(V, comp.update_c_ss(psi, comp.tautology_over(names), V)),
    }
    result = engines[args.engine]()
    if args.verify:
        _verify({k: f() for k, f in engines.items()})
    _emit(result.render(args.format))
    return EXIT_OK


def cmd_revise(args) -> int:
    psi, mu = read_formula(args.psi), read_formula(args.mu)
    V = _vocab(args, psi, mu)
    engines = {
        "compositional": lambda: _change(V, comp.revise_c(psi, mu, V)),
        "satoh": lambda: Result(V, oracles.revise_satoh(psi, mu, V)),
        "dalal": lambda: Result(V, oracles.revise_dalal(psi, mu, V)),
    }
    result = engines[args.engine]()
    if args.verify:
        _verify({"compositional": engines["compositional"](), "satoh": engines["satoh"]()})
    _emit(result.render(args.format))
    return EXIT_OK


def cmd_eliminant(args) -> int:
    psi_in = read_input(args.psi)
    names = atom_list(args.atoms)
    V = _vocab(args, as_formula(psi_in), extra=names)
    result = Result(V, formula=eliminant(names, psi_in, raw=args.raw))
    if args.verify:
        _verify({"eliminant": result,
                 "forget": _change(V, comp.forget(as_formula(psi_in), names, V))})
    _emit(result.render(args.format))
    return EXIT_OK


def cmd_check(args) -> int:
    given = {k: getattr(args, k) for k in ("psi", "psi1", "psi2", "mu", "mu1", "mu2", "phi")
             if getattr(args, k) is not None}
    pid = PostulateId(args.postulate)
    if given:
        instance = {k: read_formula(v) for k, v in given.items()}
        vocab = Vocabulary(tuple(atom_list(args.vocab))) if args.vocab else None
        verdict = check(pid, args.op, instance, vocab)
    else:
        names = atom_list(args.vocab) or ["a", "b", "c"]
        verdict = search_counterexample(pid, args.op, Vocabulary(tuple(names)), args.trials,
                                        args.seed, max_depth=args.max_depth, jobs=args.jobs)
    _emit(verdict.to_json())
    return EXIT_OK


def _n_range(text: str) -> range:
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            return range(int(lo), int(hi) + 1)
        n = int(text)
        return range(n, n + 1)
    except ValueError:
        raise UsageError(f"bad n range {text!r}; use N or LO:HI") from None


def cmd_bench(args) -> int:
    ns = _n_range(args.n)
    if not ns or ns.start < 1:
        raise UsageError("n range must be nonempty and start at 1 or more")
    if args.family == "blowup" and ns.stop - 1 > MAX_BLOWUP_N:
        raise UsageError(f"blowup family is limited to n <= {MAX_BLOWUP_N}")
    rows = benchmod.run(args.family, ns, engine=args.engine, seed=args.seed,
                        raw=args.raw, timing=args.timing)
    sys.stdout.write(benchmod.to_csv(rows, args.family))
    return EXIT_OK


def cmd_gen(args) -> int:
    if not 1 <= args.n <= MAX_BLOWUP_N:
        raise UsageError(f"n must be between 1 and {MAX_BLOWUP_N}")
    inst = gen_blowup(args.n)
    if args.format == "json":
        doc = {
            "n": inst.n,
            "clause_convention": CLAUSE_CONVENTION,
            "clauses": [[str(l) for l in c] for c in inst.clauses],
            "psi": render(inst.psi),
            "mu": render(inst.mu),
            "vocab": list(inst.vocab.atoms),
        }
        _emit(json.dumps(doc, indent=2))
    else:
        _emit(f"psi: {render(inst.psi)}\nmu: {render(inst.mu)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def _common(p: argparse.ArgumentParser, *, fmt: bool = True, verify: bool = True) -> None:
    p.add_argument("--vocab", help="extra atoms to include, comma separated (or @file)")
    if fmt:
        p.add_argument("--format", choices=("formula", "dnf", "models"), default="formula")
    if verify:
        p.add_argument("--verify", action="store_true",
                       help="also run a second engine and exit 3 if the results differ")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="beliefkit", description="Propositional belief change.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("update", help="update psi by mu")
    p.add_argument("--psi", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--engine", choices=tuple(OPERATORS), default="compositional")
    p.add_argument("--raw", action="store_true", help="syntactic engine: keep duplicate terms")
    p.add_argument("--jobs", type=int, default=1)
    _common(p)
    p.set_defaults(func=cmd_update)

    p = sub.add_parser("erase", help="erase mu from psi")
    p.add_argument("--psi", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--engine", choices=("harper", "direct"), default="harper")
    _common(p)
    p.set_defaults(func=cmd_erase)

    p = sub.add_parser("forget", help="forget atoms of psi")
    p.add_argument("--psi", required=True)
    p.add_argument("--atoms", required=True, help="comma separated atoms")
    p.add_argument("--engine", choices=("update", "subst", "ss"), default="update")
    _common(p)
    p.set_defaults(func=cmd_forget)

    p = sub.add_parser("revise", help="revise psi by mu")
    p.add_argument("--psi", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--engine", choices=("compositional", "satoh", "dalal"), default="compositional")
    _common(p)
    p.set_defaults(func=cmd_revise)

    p = sub.add_parser("eliminant", help="existentially quantify atoms out of psi (dnf)")
    p.add_argument("--psi", required=True)
    p.add_argument("--atoms", default="", help="comma separated atoms")
    p.add_argument("--raw", action="store_true")
    _common(p)
    p.set_defaults(func=cmd_eliminant)

    postulates = ", ".join(f"{pid.value}({','.join(ARITY[pid])})" for pid in PostulateId)
    p = sub.add_parser("check", help="check an update postulate",
                       epilog=f"postulates and their arguments: {postulates}. "
                              "Without instance arguments, random instances are searched.")
    p.add_argument("--postulate", required=True, choices=[pid.value for pid in PostulateId])
    p.add_argument("--op", choices=tuple(OPERATORS), default="compositional")
    for name in ("psi", "psi1", "psi2", "mu", "mu1", "mu2", "phi"):
        p.add_argument(f"--{name}")
    p.add_argument("--vocab", help="atoms (random search default: a,b,c)")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-depth", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="measure update output sizes (CSV)",
                       epilog=f"blowup clause convention: {CLAUSE_CONVENTION}")
    p.add_argument("--family", choices=benchmod.FAMILIES, default="dnf")
    p.add_argument("--n", default="1:5", help="N or LO:HI (inclusive)")
    p.add_argument("--engine", choices=("syntactic", "compositional"), default="syntactic")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--raw", action="store_true")
    p.add_argument("--timing", action="store_true",
                   help="fill the wall_time column (output is then not reproducible)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="print a blowup instance",
                       epilog=f"clause convention: {CLAUSE_CONVENTION}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except Mismatch as e:
        print(f"beliefkit: verification failed: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    except VocabularyError as e:
        print(f"beliefkit: {e}", file=sys.stderr)
        return EXIT_SEMANTIC
    except (ParseError, UsageError, ArityError) as e:
        print(f"beliefkit: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
