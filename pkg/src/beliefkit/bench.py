"""Size measurements for the syntactic update.

Three families: ``dnf`` (random dnf base and update, both growing with n),
``bounded`` (random dnf base growing with n, small fixed update) and
``blowup`` (the 3SAT-derived instances of :mod:`beliefkit.blowup`).
"""

from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import dataclass

from .blowup import CLAUSE_CONVENTION, gen_blowup
from .compositional import update_c
from .formula import DnfFormula, Literal, Term, size
from .syntactic import size_report, update_syntactic

# Largest out / (|psi| * |mu|) seen over 2000 random dnf pairs (raw and
# deduped) was 3.0, reached on single-literal inputs; pinned with headroom.
SIZE_BOUND_C = 4.0

FAMILIES = ("dnf", "bounded", "blowup")


def random_dnf(rng: random.Random, atoms: list[str], n_terms: int, max_len: int) -> DnfFormula:
    """``n_terms`` random consistent terms of 1..max_len literals, kept raw (no dedup)."""
    terms = []
    for _ in range(n_terms):
        k = rng.randint(1, min(max_len, len(atoms)))
        chosen = rng.sample(atoms, k)
        terms.append(Term.of(Literal(a, rng.random() < 0.5) for a in chosen))
    return DnfFormula.of(terms, dedup=False)


def small_update(rng: random.Random, atoms: list[str]) -> DnfFormula:
    """An update of at most 12 nodes: two terms of at most two literals."""
    while True:
        mu = random_dnf(rng, atoms, 2, 2)
        if size(mu) <= 12:
            return mu


@dataclass
class BenchRow:
    n: int
    psi_size: int
    mu_size: int
    out_size: int
    out_terms: int
    bound_ok: bool | None
    wall_time: float | None


def _instance(family: str, n: int, rng: random.Random):
    if family == "dnf":
        atoms = [f"p{i}" for i in range(1, 2 * n + 3)]
        return random_dnf(rng, atoms, 4 * n, 3), random_dnf(rng, atoms, n, 3)
    if family == "bounded":
        atoms = [f"p{i}" for i in range(1, 4 * n + 5)]
        return random_dnf(rng, atoms, 8 * n, 3), small_update(rng, atoms[:4])
    if family == "blowup":
        inst = gen_blowup(n)
        return inst.psi, inst.mu
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")


def run(family: str, ns: range, engine: str = "syntactic", seed: int = 0,
        raw: bool = False, timing: bool = False) -> list[BenchRow]:
    rows = []
    for n in ns:
        rng = random.Random(f"{seed}:{family}:{n}")
        psi, mu = _instance(family, n, rng)
        start = time.perf_counter()
        if engine == "syntactic":
            out = update_syntactic(psi, mu, raw=raw)
        elif engine == "compositional":
            p = psi.to_formula() if isinstance(psi, DnfFormula) else psi
            m = mu.to_formula() if isinstance(mu, DnfFormula) else mu
            out = update_c(p, m).formula
        else:
            raise ValueError(f"unknown engine {engine!r}")
        elapsed = time.perf_counter() - start
        rep = size_report(psi, mu, out)
        bound = None
        if family != "blowup":
            bound = rep.output_size <= SIZE_BOUND_C * rep.input_psi_size * rep.input_mu_size
        rows.append(BenchRow(n, rep.input_psi_size, rep.input_mu_size, rep.output_size,
                             rep.term_counts[2], bound, elapsed if timing else None))
    return rows


def to_csv(rows: list[BenchRow], family: str) -> str:
    buf = io.StringIO()
    if family == "blowup":
        buf.write(f"# clause convention: {CLAUSE_CONVENTION}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "psi_size", "mu_size", "out_size", "out_terms", "bound_ok", "wall_time"])
    for r in rows:
        w.writerow([
            r.n, r.psi_size, r.mu_size, r.out_size, r.out_terms,
            "" if r.bound_ok is None else str(r.bound_ok).lower(),
            "" if r.wall_time is None else f"{r.wall_time:.6f}",
        ])
    return buf.getvalue()
