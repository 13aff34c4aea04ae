"""Domain-specific exceptions raised across the package."""


class ParseError(ValueError):
    """Expression text does not conform to the grammar.

    ``position`` is the 0-based character offset of the offending token.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"col {position + 1}: {message}"
        super().__init__(message)
        self.position = position


class ProblemFileError(ValueError):
    """Problem file failed validation; carries the 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MinorLimitExceeded(RuntimeError):
    """Minor enumeration would exceed the configured size cap."""


class CriterionInapplicable(ValueError):
    """The whole-space degree criterion is undefined for this input
    (the polynomial vanishes identically once the spatial variables are
    set to zero)."""


class FullColumnRankMode(ValueError):
    """No zero-past witness exists: the mode matrix has full column rank."""


class ModeNotRankConstant(ValueError):
    """Patching requested at a mode whose rank is not constant in time."""


class LatentRecoveryError(RuntimeError):
    """A supplied endpoint trajectory could not be reproduced from the
    image representation; it is not a member of the mode behaviour."""


class GrowthBoundViolation(ValueError):
    """A mode amplitude exceeds the configured polynomial growth bound."""

    def __init__(self, n_vec, amplitude, bound):
        super().__init__(
            f"mode {tuple(n_vec)} amplitude {amplitude:.3e} exceeds growth bound {bound:.3e}"
        )
        self.n_vec = tuple(n_vec)
        self.amplitude = amplitude
        self.bound = bound
