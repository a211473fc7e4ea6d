"""Exception types shared across the package.

The CLI maps each class to a fixed process exit code, see ``wablfuzz.cli``.
"""


class FuzzyError(Exception):
    """Base class for every error raised by wablfuzz."""


class DomainError(FuzzyError, ValueError):
    """An argument lies outside the domain where the operation is defined."""


class RangeError(FuzzyError, ValueError):
    """Evaluation would produce a non-finite value (e.g. density at 0 for m < 1)."""


class RepresentationError(FuzzyError, ValueError):
    """A membership function cannot be put in level (LR) form."""


class DegenerateInputError(FuzzyError, ValueError):
    pass


class ConfigError(FuzzyError, ValueError):
    """Invalid controller or simulation document, or missing inputs."""


class UnknownTermError(ConfigError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return str(self.args[0]) if self.args else ""


class NoRuleFiresError(FuzzyError):
    """Normalized aggregation was requested but every firing degree is zero."""


class MetricsWindowError(FuzzyError, ValueError):
    pass
