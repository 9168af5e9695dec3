class AppError(Exception):
    """Application error translatable to a process exit.

    Domain layers raise these exceptions; the CLI boundary in
    ``src.modules.verify.commands`` catches them, logs them and exits with
    ``exit_code``. ``code`` is machine-readable and ends up in reports.
    """

    exit_code = 2
    code = "APPLICATION_ERROR"
    field: str | None = None

    def __init__(self, detail: str, *, field: str | None = None):
        self.detail = detail
        if field is not None:
            self.field = field
        super().__init__(detail)


class PadicError(AppError):
    """Invalid p-adic operation."""

    code = "PADIC_ERROR"


class PrimeMismatchError(PadicError):
    """Operands live in different p-adic rings."""

    code = "PRIME_MISMATCH"

    def __init__(self, p: int, q: int):
        super().__init__(f"Prime mismatch: {p} != {q}")


class NotAUnitError(PadicError):
    """The operation requires a p-adic unit."""

    code = "NOT_A_UNIT"


class PrecisionError(PadicError):
    """Not enough p-adic digits to determine the result."""

    code = "INSUFFICIENT_PRECISION"


class NotAResidueError(PadicError):
    """The integer has no square root in Z_p."""

    code = "NOT_A_RESIDUE"


class CharacterError(AppError):
    """Invalid Dirichlet character data."""

    code = "CHARACTER_ERROR"


class EmbeddingError(CharacterError):
    """A root of unity of the requested order does not live in Z_p."""

    code = "EMBEDDING_IMPOSSIBLE"


class BernoulliError(AppError):
    """Generalized Bernoulli computation failure."""

    code = "BERNOULLI_ERROR"


class ConvergenceError(BernoulliError):
    """The power-sum limit did not stabilize below the configured ceiling."""

    code = "NO_CONVERGENCE"


class NonIntegralError(BernoulliError):
    """The value is not p-integral; ``valuation`` holds the measured v_p."""

    code = "NOT_P_INTEGRAL"

    def __init__(self, detail: str, *, valuation: int):
        self.valuation = valuation
        super().__init__(detail)


class FieldDataError(AppError):
    """Invalid field data (input integers or an external document)."""

    code = "FIELD_DATA_ERROR"


class OutOfScopeError(FieldDataError):
    """The (field, prime) pair is outside the supported range.

    ``status`` is the harness classification (e.g. ``skipped-inert``).
    """

    code = "OUT_OF_SCOPE"

    def __init__(self, detail: str, *, status: str):
        self.status = status
        super().__init__(detail)


class ConfigurationError(AppError):
    """Bad command-line or config-file input."""

    code = "CONFIGURATION_ERROR"
