"""Exception hierarchy. Every error is a ``ValueError`` so callers that do not
care about the distinction can catch that."""


class SphericalVectorError(ValueError):
    pass


class ZeroVector(SphericalVectorError):
    """A non-zero vector was required."""


class ZeroQuaternion(SphericalVectorError):
    """A non-zero quaternion was required."""


class NotUnit(SphericalVectorError):
    """A unit vector or unit quaternion was required."""


class InvariantViolation(SphericalVectorError):
    """Components (lambda, n) do not satisfy lambda**2 + |n|**2 == 1."""


class DegenerateSupport(SphericalVectorError):
    """The zero and straight spherical-vectors have no support plane."""


class NotInSupport(SphericalVectorError):
    """The given vector does not lie in the support plane."""
