"""Argument, polar form and exponential notation of quaternions.

Every non-zero quaternion is ``q = r (cos a + i sin a) = r e^{i a}`` with
``r = |q|`` and ``a = arg(q)`` a spherical-vector. Because the spherical-vector
group law is the quaternion product read backwards, the familiar complex
rules come out with the order swapped, e.g. ``arg(p q) = arg(q) + arg(p)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation, ZeroQuaternion
from .linalg3 import E_X, ZERO_TOL, Vec3, cross, norm as vnorm, orthonormal_to
from .quaternion import (Quaternion, UnitQuaternion, conj, embed_vector,
                         extract_vector, from_spherical, mul, norm,
                         spherical_components)
from .spherical_vector import (PairRepresentation, SphericalVector, multiple,
                               mu, mu_inv)

PAIR_CROSSCHECK_TOL = 1e-12


def _nonzero(q) -> Quaternion:
    q = Quaternion.of(q)
    if norm(q) <= ZERO_TOL:
        raise ZeroQuaternion("the zero quaternion has no argument")
    return q


def arg(q) -> SphericalVector:
    q = _nonzero(q)
    return mu_inv(UnitQuaternion.normalized(q))


def cos_sv(alpha: SphericalVector) -> float:
    return alpha.lam


def sin_sv(alpha: SphericalVector) -> Vec3:
    return alpha.n


@dataclass(frozen=True)
class PolarForm:
    r: float
    arg: SphericalVector

    def __post_init__(self):
        if not self.r > 0:
            raise InvariantViolation(f"modulus must be positive, got {self.r!r}")

    def __iter__(self):
        yield self.r
        yield self.arg

    def to_quaternion(self) -> Quaternion:
        return self.r * from_spherical(cos_sv(self.arg), sin_sv(self.arg))


def polar(q) -> PolarForm:
    q = _nonzero(q)
    return PolarForm(norm(q), arg(q))


def exp_i(alpha: SphericalVector) -> UnitQuaternion:
    """``e^{i alpha} = cos alpha + i sin alpha``."""
    return mu(alpha)


def scale_arg(alpha: SphericalVector, m: int) -> SphericalVector:
    return multiple(alpha, m)


def argument_pair(q) -> PairRepresentation:
    """A deterministic pair of unit vectors ``(u, v)`` representing ``arg(q)``.

    ``u`` is any unit vector orthogonal to the vector component ``w`` of the
    normalized quaternion (chosen by :func:`orthonormal_to`), and
    ``v = x u + w x u``. The result is checked against the quaternion
    route ``v = u * conj(q)``.
    """
    q = UnitQuaternion.normalized(_nonzero(q))
    x, w = spherical_components(q)
    if vnorm(w) <= ZERO_TOL:
        u = E_X
        v = x * u
    else:
        u = orthonormal_to(w)
        v = x * u + cross(w, u)
    v_quat = extract_vector(mul(embed_vector(u), conj(q)), tol=1e-9)
    if not v.isclose(v_quat, PAIR_CROSSCHECK_TOL):
        raise RuntimeError(f"pair cross-check failed: {v!r} vs {v_quat!r}")
    return PairRepresentation(u, v)
