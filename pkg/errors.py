"""
errors.py
─────────
Exception hierarchy shared by every orthorep module.

Mathematical "no" answers are returned as values (verdicts, ``False``);
exceptions are reserved for bad input, violated hypotheses and exhausted
budgets.

    from errors import PreconditionFailed

    try:
        gorenstein_dims_of_end(M, n=1)
    except PreconditionFailed as exc:
        print(exc)
"""

from __future__ import annotations


class OrthorepError(Exception):
    """Base class for all orthorep errors."""


# ── Input / construction ────────────────────────────────────────────

class NonAdmissible(OrthorepError):
    """A relation has a component of path length 0 or 1."""


class InfiniteDimensional(OrthorepError):
    """The relation ideal does not contain a power of the arrow ideal."""


class AlgebraMismatch(OrthorepError):
    """Two modules (or a module and a morphism) live over different algebras."""


class ParamsMismatch(OrthorepError):
    """Nakayama indecomposables with different parameters were combined."""


class OutOfRange(OrthorepError):
    """An integer parameter lies outside the range an operation supports."""


# ── Hypotheses ──────────────────────────────────────────────────────

class PreconditionFailed(OrthorepError):
    """A mathematical hypothesis of an operation is violated."""


class NotGenerator(PreconditionFailed):
    """The add-set does not contain every indecomposable projective."""


class NotCogenerator(PreconditionFailed):
    """The add-set does not contain every indecomposable injective."""


class NotSelfInjective(PreconditionFailed):
    """The algebra is not self-injective."""


class PeriodicityFailed(PreconditionFailed):
    """The required syzygy/Nakayama periodicity does not hold."""


class ApproximationDegenerate(PreconditionFailed):
    """A mutation pivot already lies in add of the complement."""


class CatalogueRequired(OrthorepError):
    """The operation enumerates indecomposables but no catalogue was supplied."""


class NotExact(OrthorepError):
    """A pair of composable maps is not a short exact sequence."""


# ── Budgets and internal checks ─────────────────────────────────────

class DecompositionFailed(OrthorepError):
    """Randomised splitting exhausted its retry budget."""


class Inconclusive(OrthorepError):
    """Randomised isomorphism search could not decide."""


class SearchBudgetExceeded(OrthorepError):
    """An exhaustive search hit its candidate budget.

    ``explored`` holds the fraction of the search space visited.
    """

    def __init__(self, message: str, explored: float = 0.0):
        super().__init__(message)
        self.explored = explored


class InternalInconsistency(OrthorepError):
    """A linear system that must be solvable was not, or two equivalent
    criteria disagreed."""
