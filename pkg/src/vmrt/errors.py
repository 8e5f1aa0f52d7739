"""Exception types shared across the package.

The CLI maps ParseError to exit code 1 and every other VmrtError to
exit code 2, so precondition failures stay distinguishable from
malformed input in batch runs.
"""


class VmrtError(Exception):
    """Base class for domain errors raised by this package."""


class ParseError(VmrtError):
    """Malformed textual input (polynomials, points, coefficient lists)."""


class VariableMismatch(VmrtError):
    """Operands live in different polynomial rings."""


class InvalidInput(VmrtError):
    """A precondition on arguments is violated (degrees, ranges, shapes)."""


class BasePointOnBranch(VmrtError):
    """The base point lies on the branch hypersurface, f(1, y) = 0."""


class ResultantDegenerate(VmrtError):
    """Elimination collapsed: the two forms share a positive-dimensional locus."""


class NormalizationViolated(VmrtError):
    """An operation requiring the normalization f(1, 0, ..., 0) = 1 got f_0 != 1."""
