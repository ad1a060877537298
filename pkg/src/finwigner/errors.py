"""Exception types shared across the package."""


class DomainError(ValueError):
    """An index or parameter is outside its allowed range."""


class DimensionMismatch(ValueError):
    """Matrix operands have incompatible shapes."""


class SingularMatrix(ArithmeticError):
    """Inversion was attempted on a singular matrix."""


class MissingVariable(KeyError):
    """A polynomial variable has no value in a substitution map."""


class InvalidWord(ValueError):
    """A string is not a valid Dyck word."""


class DuplicateNodes(ValueError):
    """Vandermonde nodes must be pairwise distinct."""


class CostGuardError(RuntimeError):
    """The requested computation exceeds the configured cost bound.

    Guarded entry points accept ``unguarded=True`` (CLI: ``--unsafe-no-guard``)
    to run anyway.
    """
