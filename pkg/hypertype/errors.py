"""
Exception hierarchy for hypertype.

Library code raises these; only the command line front end and the web
application catch them and turn them into exit codes or HTTP responses.
"""


class HypertypeError(Exception):
    """Base class for every error raised by the library."""

    kind = "error"


class ConfigError(HypertypeError):
    kind = "config"


class UsageError(HypertypeError):
    kind = "usage"


class DomainError(HypertypeError):
    kind = "domain"


class BranchCutError(DomainError):
    kind = "branch_cut"


class PoleError(DomainError):
    kind = "pole"


class DivisionError(DomainError):
    kind = "division"


class OutOfDomain(DomainError):
    kind = "out_of_domain"


class InvalidOperator(HypertypeError):
    kind = "invalid_operator"


class IrregularPoint(HypertypeError):
    kind = "irregular_point"


class UnknownFactorization(HypertypeError):
    kind = "unknown_factorization"


class DegenerateParameters(HypertypeError):
    kind = "degenerate_parameters"


class DegenerateNormalization(HypertypeError):
    kind = "degenerate_normalization"


class ParseError(HypertypeError):
    """Contour or literal parse failure; `position` is the offending offset."""

    kind = "parse"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class NonIntegrableEndpoint(HypertypeError):
    kind = "non_integrable_endpoint"


class TruncationError(HypertypeError):
    kind = "truncation"


class ParameterConstraintViolated(HypertypeError):
    kind = "parameter_constraint"
