"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """A traffic or model parameter violates its domain constraint."""


class SaturationError(InvalidParameterError):
    """lambda * range_r is too large for stable evaluation of exp terms."""


class UnsortedInputError(ValueError):
    """A vehicle list that must be sorted by position is not."""


class ClusterMembershipError(ValueError):
    """A vehicle id was expected inside a cluster but is not a member."""


class GapGeometryError(ValueError):
    """A gap handed to the bridge classifier is not a disconnection."""


class ConfigError(ValueError):
    """Bad experiment configuration (parse error, unknown key, bad value)."""
