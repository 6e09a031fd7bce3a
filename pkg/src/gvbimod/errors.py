"""Shared exception types."""


class GvError(Exception):
    """Base class for library errors."""


class ValidationError(GvError):
    """An algebra, bimodule or map failed its structural axioms."""


class AlgebraMismatchError(GvError):
    """Operands live over incompatible algebras."""


class UnsupportedCaseError(GvError):
    """Input falls outside the supported algorithmic cases."""


class InternalConsistencyError(GvError):
    """Two construction paths that must agree did not; indicates an
    index-convention bug, never a mathematical phenomenon."""
