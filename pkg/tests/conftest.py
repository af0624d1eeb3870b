import random

from hypothesis import strategies as st

from beliefkit.formula import FALSE, TRUE, And, Not, Or, Var
from beliefkit.parser import parse
from beliefkit.postulates import random_formula
from beliefkit.semantics import ModelSet, Vocabulary


def formulas(names=("a", "b", "c"), max_leaves=12, constants=True):
    leaf = st.sampled_from([Var(n) for n in names])
    if constants:
        leaf = leaf | st.sampled_from([TRUE, FALSE])
    return st.recursive(
        leaf,
        lambda kids: st.one_of(
            kids.map(Not),
            st.tuples(kids, kids).map(lambda p: And(*p)),
            st.tuples(kids, kids).map(lambda p: Or(*p)),
        ),
        max_leaves=max_leaves,
    )


def vocab(*names):
    return Vocabulary(tuple(names))


def models(v, *lines):
    """ModelSet from lines like "b !m"."""
    return ModelSet.from_terms(v, (line.split() for line in lines))


def p(text):
    return parse(text)


def random_cases(n, seed, sizes=(3, 4, 5, 6), max_depth=6):
    """Yield (rng, vocab) pairs with vocabularies of 3-6 atoms."""
    for i in range(n):
        rng = random.Random(f"{seed}:{i}")
        k = sizes[i % len(sizes)]
        yield rng, Vocabulary(tuple("abcdef"[:k]))


def rf(rng, v, max_depth=4):
    return random_formula(rng, v, max_depth)
