"""Exception hierarchy for mmdnmf.

All library errors derive from MMDNMFError so callers (and the CLI) can
catch one base class and map it to a nonzero exit code.
"""


class MMDNMFError(Exception):
    pass


class DimensionError(MMDNMFError, ValueError):
    """Matrix or vector shapes are inconsistent."""


class ConfigurationError(MMDNMFError, ValueError):
    """An invalid parameter value (rank, guard, a, b, k, ...)."""


class InputError(MMDNMFError, ValueError):
    """Invalid in-memory input data (empty labels, length mismatch, ...)."""


class InfeasibleError(MMDNMFError, ValueError):
    """The supervised problem is infeasible (e.g. no between-class pairs)."""


class DegenerateMultiplierError(MMDNMFError, ArithmeticError):
    """Slack update in paper mode hit a zero multiplier sum."""


class ScaleError(MMDNMFError, ValueError):
    """A brute-force oracle was asked for an instance too large to enumerate."""


class EvaluationError(MMDNMFError, ValueError):
    """Evaluation is undefined on this input (e.g. empty between-pair set)."""


class ValidationError(MMDNMFError, ValueError):
    """A dataset file contains an invalid cell (negative or non-numeric)."""


class SchemaError(MMDNMFError, ValueError):
    """A dataset file is structurally malformed (missing header or column)."""
