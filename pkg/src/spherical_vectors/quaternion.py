"""Quaternions and their spherical form ``q = x + i w``.

Symbol table for the vector identification used throughout the package::

    vector (a, b, c)          <->  quaternion  j a + k b + c
    q = s + i ci + j cj + k ck  =  s + i (j ck - k cj + ci)
    spherical components of q  :  x = s,  w = (ck, -cj, ci)

This is *not* the usual "vector = pure quaternion" convention; the real axis
carries the z component and the i axis is reserved for the factor in
``x + i w``. Getting the permutation wrong silently breaks everything
downstream, so all conversions go through :func:`embed_vector` and
:func:`spherical_components`.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from typing import NamedTuple

from .errors import NotUnit, ZeroQuaternion
from .linalg3 import ZERO_TOL, Vec3, cross, dot, norm as vnorm

UNIT_TOL = 1e-9


@dataclass(frozen=True, slots=True, eq=False)
class Quaternion:
    """``s + i*ci + j*cj + k*ck`` with Hamilton's rules i² = j² = k² = ijk = -1."""

    s: float
    ci: float = 0.0
    cj: float = 0.0
    ck: float = 0.0

    __array_ufunc__ = None

    def __post_init__(self):
        s, ci, cj, ck = float(self.s), float(self.ci), float(self.cj), float(self.ck)
        isfinite = math.isfinite
        if not (isfinite(s) and isfinite(ci) and isfinite(cj) and isfinite(ck)):
            raise ValueError(f"non-finite component in {(s, ci, cj, ck)!r}")
        setattr_ = object.__setattr__
        setattr_(self, "s", s)
        setattr_(self, "ci", ci)
        setattr_(self, "cj", cj)
        setattr_(self, "ck", ck)

    @classmethod
    def of(cls, q) -> "Quaternion":
        if isinstance(q, Quaternion):
            return q
        if isinstance(q, numbers.Real):
            return cls(q)
        s, ci, cj, ck = q
        return cls(s, ci, cj, ck)

    def __iter__(self):
        yield self.s
        yield self.ci
        yield self.cj
        yield self.ck

    def __len__(self):
        return 4

    # value equality, so a UnitQuaternion equals the plain Quaternion it wraps
    def __eq__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return tuple(self) == tuple(other)

    def __hash__(self):
        return hash(tuple(self))

    def __add__(self, other):
        o = Quaternion.of(other)
        return Quaternion(self.s + o.s, self.ci + o.ci, self.cj + o.cj, self.ck + o.ck)

    __radd__ = __add__

    def __sub__(self, other):
        o = Quaternion.of(other)
        return Quaternion(self.s - o.s, self.ci - o.ci, self.cj - o.cj, self.ck - o.ck)

    def __rsub__(self, other):
        return Quaternion.of(other) - self

    def __neg__(self):
        return Quaternion(-self.s, -self.ci, -self.cj, -self.ck)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        if isinstance(other, numbers.Real):
            return Quaternion(self.s * other, self.ci * other, self.cj * other, self.ck * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return self * other
        return NotImplemented

    def __truediv__(self, k):
        if not isinstance(k, numbers.Real):
            return NotImplemented
        return Quaternion(self.s / k, self.ci / k, self.cj / k, self.ck / k)

    def __pow__(self, m: int):
        if not isinstance(m, numbers.Integral):
            return NotImplemented
        base = self if m >= 0 else inv(self)
        out = Quaternion(1.0)
        for _ in range(abs(int(m))):
            out = mul(out, base)
        return out

    def __repr__(self):
        return f"Quaternion({self.s!r}, {self.ci!r}, {self.cj!r}, {self.ck!r})"

    @property
    def q(self) -> "Quaternion":
        return Quaternion(self.s, self.ci, self.cj, self.ck)

    def conj(self):
        return conj(self)

    def norm(self):
        return norm(self)

    def inv(self):
        return inv(self)

    def isclose(self, other, tol=1e-9):
        o = Quaternion.of(other)
        return all(abs(a - b) <= tol for a, b in zip(self, o))


class UnitQuaternion(Quaternion):
    """A quaternion checked to have norm 1 within ``UNIT_TOL``.

    Construction never rescales; use :meth:`normalized` to project an
    arbitrary non-zero quaternion onto the unit sphere.
    """

    __slots__ = ()

    def __post_init__(self):
        Quaternion.__post_init__(self)
        r = norm(self)
        if abs(r - 1.0) > UNIT_TOL:
            raise NotUnit(f"|q| = {r!r}, expected 1")

    @classmethod
    def of(cls, q) -> "UnitQuaternion":
        if isinstance(q, UnitQuaternion):
            return q
        return cls(*Quaternion.of(q))

    @classmethod
    def normalized(cls, q) -> "UnitQuaternion":
        q = Quaternion.of(q)
        r = norm(q)
        if r <= ZERO_TOL:
            raise ZeroQuaternion("cannot normalize the zero quaternion")
        return cls(*(q / r))

    def __repr__(self):
        return f"UnitQuaternion({self.s!r}, {self.ci!r}, {self.cj!r}, {self.ck!r})"


ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def hamilton(p, q) -> tuple:
    """Hamilton product on bare ``(s, ci, cj, ck)`` tuples (no validation)."""
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def mul(p, q) -> Quaternion:
    p, q = Quaternion.of(p), Quaternion.of(q)
    return Quaternion(*hamilton((p.s, p.ci, p.cj, p.ck), (q.s, q.ci, q.cj, q.ck)))


def conj(q) -> Quaternion:
    q = Quaternion.of(q)
    return Quaternion(q.s, -q.ci, -q.cj, -q.ck)


def norm(q) -> float:
    q = Quaternion.of(q)
    return math.sqrt(q.s * q.s + q.ci * q.ci + q.cj * q.cj + q.ck * q.ck)


def inv(q) -> Quaternion:
    q = Quaternion.of(q)
    r2 = q.s * q.s + q.ci * q.ci + q.cj * q.cj + q.ck * q.ck
    if math.sqrt(r2) <= ZERO_TOL:
        raise ZeroQuaternion("the zero quaternion has no inverse")
    return conj(q) / r2


def embed_vector(w) -> Quaternion:
    """``(a, b, c) -> j a + k b + c``."""
    w = Vec3.of(w)
    return Quaternion(w.z, 0.0, w.x, w.y)


def extract_vector(q, tol=1e-12) -> Vec3:
    """Inverse of :func:`embed_vector`; ``q`` must have no i component."""
    q = Quaternion.of(q)
    if abs(q.ci) > tol:
        raise ValueError(f"{q!r} is not of the form j a + k b + c")
    return Vec3(q.cj, q.ck, q.s)


class SphericalForm(NamedTuple):
    x: float
    w: Vec3

    def to_quaternion(self) -> Quaternion:
        return from_spherical(self.x, self.w)


def spherical_components(q) -> SphericalForm:
    q = Quaternion.of(q)
    return SphericalForm(q.s, Vec3(q.ck, -q.cj, q.ci))


def from_spherical(x, w) -> Quaternion:
    # x + i (j a + k b + c) = x + i c - j b + k a
    w = Vec3.of(w)
    return Quaternion(x, w.z, -w.y, w.x)


def _check_unit_vector(u, name):
    r = vnorm(u)
    if abs(r - 1.0) > UNIT_TOL:
        raise NotUnit(f"{name} has norm {r!r}, expected 1")


def vector_quotient(u, v) -> Quaternion:
    """``u^-1 v = u.v - i (u x v)`` for unit ``u``, ``v`` (both as elements of N)."""
    u, v = Vec3.of(u), Vec3.of(v)
    _check_unit_vector(u, "u")
    _check_unit_vector(v, "v")
    return from_spherical(dot(u, v), -cross(u, v))
