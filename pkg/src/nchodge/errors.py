"""Exception types shared across the package.

Everything raised on purpose derives from NCHodgeError, so callers (and the
command line driver) can tell expected failure modes apart from genuine bugs.
"""


class NCHodgeError(Exception):
    """Base class for all package-specific errors."""


class BadParams(NCHodgeError):
    """A constructor or CLI call received parameters outside its domain."""


class SchemaError(NCHodgeError):
    """An atlas file does not follow the documented JSON layout."""


class DimensionMismatch(NCHodgeError):
    """Matrix or vector shapes disagree with the declared graded dimensions."""


class BidegreeError(NCHodgeError):
    """A Hodge type (a, b) is inconsistent with its cohomological degree."""


class LatticeError(NCHodgeError):
    """The stratum poset is inconsistent: missing or ambiguous covers."""


class EmptyDivisor(NCHodgeError):
    """An operation that needs at least one divisor component got none."""


class UnknownStratum(NCHodgeError):
    """A stratum key is not present in the atlas."""


class MissingStratum(NCHodgeError):
    """An intersection stratum required by a construction is absent."""


class CompositionNonzero(NCHodgeError):
    """Two consecutive differentials do not compose to zero."""


class NotChainMap(NCHodgeError):
    """A morphism of row families fails to commute with the differentials."""


class ChartMismatch(NCHodgeError):
    """Two log forms live on different charts."""


class NonHomogeneous(NCHodgeError):
    """A form mixes exterior degrees where a homogeneous one is required."""


class WeightTooLow(NCHodgeError):
    """A form lies outside the weight level an operation allows."""


class DegreeMismatch(NCHodgeError):
    """A supplied form has the wrong exterior degree."""
