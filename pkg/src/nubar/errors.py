"""Exception hierarchy.

Every error carries a short machine-readable ``code`` that the CLI echoes
in its ``{"error": code, "message": ...}`` payload.
"""


class NubarError(Exception):
    code = "error"


class InputError(NubarError, ValueError):
    """Base for errors caused by bad input (CLI exit code 2)."""

    code = "input_error"


class EmptyGeneratorSet(InputError):
    code = "empty_generator_set"


class UnitIdeal(InputError):
    code = "unit_ideal"


class DimensionMismatch(InputError):
    code = "dimension_mismatch"


class DimensionTooLarge(InputError):
    code = "dimension_too_large"


class ZeroPolynomial(InputError):
    code = "zero_polynomial"


class NotPrimary(InputError):
    code = "not_primary"


class ContainmentViolated(InputError):
    code = "containment_violated"


class PolygonUnsupportedDimension(InputError):
    code = "polygon_unsupported_dimension"


class NotMonomial(InputError):
    code = "not_monomial"


class NotIntegral(InputError):
    code = "not_integral"


class CertificateNotFound(NubarError):
    """No dependence relation with ``m <= m_max``; the caller should raise the bound."""

    code = "not_found"


class TruncationMismatch(InputError):
    code = "truncation_mismatch"


class TruncationTooSmall(InputError):
    code = "truncation_too_small"


class NonPositiveWeight(InputError):
    code = "non_positive_weight"


class IndeterminateOrder(NubarError):
    code = "indeterminate_order"


class NoCompactSide(InputError):
    code = "no_compact_side"


class InvalidExponent(InputError):
    code = "invalid_exponent"


class InvalidCharSequence(InputError):
    code = "invalid_char_sequence"


class SmoothBranch(InputError):
    code = "smooth_branch"


class ParseError(InputError):
    code = "parse_error"

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class ZeroDenominator(ParseError):
    code = "zero_denominator"


class VerificationFailed(NubarError):
    """An exact cross-check disagreed. Never expected; indicates a bug."""

    code = "verification_failed"
