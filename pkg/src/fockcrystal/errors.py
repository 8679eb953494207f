"""Exception types shared across the package.

Exit-code mapping used by the command line front end:
  2  malformed input (bad JSON, invalid partition data, bad parameters)
  3  ambiguity fault (strict tie checking tripped)
  4  truncation overflow (an operator pushed weight past the chosen cutoff)
"""


class FockcrystalError(Exception):
    """Base class for all package-specific errors."""


class InvalidInputError(FockcrystalError):
    """Malformed user-supplied data: non-decreasing parts, bad JSON, etc."""


class InvalidMoveError(FockcrystalError):
    """A box addition or removal that does not produce a valid shape."""


class AmbiguityError(FockcrystalError):
    """Two distinct boxes compared equal where a strict order was required."""


class TruncationOverflowError(FockcrystalError):
    """An operator produced a vector of weight above the truncation bound."""


class UnsupportedParameterError(FockcrystalError):
    """Parameters outside the domain of the requested computation."""
