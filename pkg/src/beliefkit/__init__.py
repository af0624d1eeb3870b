"""Propositional belief change: compositional update, erasure, forgetting and
revision, with model-based reference operators and the update postulates."""

from .compositional import (
    ChangeResult,
    el,
    erase_c,
    erase_c_direct,
    forget,
    revise_c,
    ul,
    update_c,
    update_c_guarded,
    update_c_pi,
    update_c_ss,
    update_c_triv,
)
from .formula import (
    FALSE,
    TRUE,
    And,
    CnfFormula,
    Const,
    DnfFormula,
    Formula,
    Literal,
    Not,
    Or,
    Term,
    Var,
    atoms,
    depth,
    size,
    to_cnf,
    to_dnf,
    to_nnf,
)
from .oracles import delta_min, forget_subst, revise_dalal, revise_satoh, update_pma, update_ss_models
from .parser import ParseError, parse, render
from .semantics import (
    Interpretation,
    ModelSet,
    Vocabulary,
    VocabularyError,
    entails,
    enumerate_models,
    equivalent,
    holds,
    prime_implicants,
)
from .syntactic import eliminant, size_report, update_syntactic

__version__ = "0.1.0"

__all__ = [
    "And",
    "atoms",
    "ChangeResult",
    "CnfFormula",
    "Const",
    "delta_min",
    "depth",
    "DnfFormula",
    "el",
    "eliminant",
    "entails",
    "enumerate_models",
    "equivalent",
    "erase_c",
    "erase_c_direct",
    "FALSE",
    "forget",
    "forget_subst",
    "Formula",
    "holds",
    "Interpretation",
    "Literal",
    "ModelSet",
    "Not",
    "Or",
    "parse",
    "ParseError",
    "prime_implicants",
    "render",
    "revise_c",
    "revise_dalal",
    "revise_satoh",
    "size",
    "size_report",
    "Term",
    "to_cnf",
    "to_dnf",
    "to_nnf",
    "TRUE",
    "ul",
    "update_c",
    "update_c_guarded",
    "update_c_pi",
    "update_c_ss",
    "update_c_triv",
    "update_pma",
    "update_ss_models",
    "update_syntactic",
    "Var",
    "Vocabulary",
    "VocabularyError",
]
