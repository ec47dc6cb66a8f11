"""Exact computations with endomorphism algebras of radical-truncated
projectives: quasihereditary stratifications, Add(G)-approximations and
minimal projective resolutions over bound quiver algebras."""

from adrkit._core import (
    ADR,
    Algebra,
    InputError,
    InternalError,
    Module,
    RModule,
    algebra_from_text,
    builtin_names,
    builtin_text,
    corpus,
    counterexample,
)

__version__ = "0.1.0"

__all__ = [
    "ADR",
    "Algebra",
    "InputError",
    "InternalError",
    "Module",
    "RModule",
    "algebra_from_text",
    "builtin_names",
    "builtin_text",
    "corpus",
    "counterexample",
    "__version__",
]
