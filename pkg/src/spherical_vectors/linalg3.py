"""Small immutable 3-vector type and the handful of primitives built on it.

Everything is plain double precision. ``Vec3`` supports the usual operators
(``+``, ``-``, unary ``-``, scalar ``*`` and ``/``) and iterates as ``(x, y, z)``
so ``numpy.array(v)`` works.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ZeroVector

ZERO_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class Vec3:
    x: float
    y: float
    z: float

    # keep numpy scalars from broadcasting over us in ``np.float64 * v``
    __array_ufunc__ = None

    def __post_init__(self):
        x, y, z = float(self.x), float(self.y), float(self.z)
        if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(z)):
            raise ValueError(f"non-finite component in {(x, y, z)!r}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    @classmethod
    def of(cls, v) -> "Vec3":
        """Coerce any length-3 sequence (tuple, list, ndarray) to a Vec3."""
        if isinstance(v, Vec3):
            return v
        x, y, z = v
        return cls(x, y, z)

    def __iter__(self):
        yield self.x
        yield self.y
        yield self.z

    def __len__(self):
        return 3

    def __getitem__(self, i):
        return (self.x, self.y, self.z)[i]

    def __add__(self, other):
        o = Vec3.of(other)
        return Vec3(self.x + o.x, self.y + o.y, self.z + o.z)

    __radd__ = __add__

    def __sub__(self, other):
        o = Vec3.of(other)
        return Vec3(self.x - o.x, self.y - o.y, self.z - o.z)

    def __neg__(self):
        return Vec3(-self.x, -self.y, -self.z)

    def __mul__(self, k):
        if isinstance(k, (Vec3, tuple, list)):
            return NotImplemented
        return Vec3(self.x * k, self.y * k, self.z * k)

    __rmul__ = __mul__

    def __truediv__(self, k):
        return Vec3(self.x / k, self.y / k, self.z / k)

    def __repr__(self):
        return f"Vec3({self.x!r}, {self.y!r}, {self.z!r})"

    def dot(self, other):
        return dot(self, other)

    def cross(self, other):
        return cross(self, other)

    def norm(self):
        return norm(self)

    def normalized(self):
        return normalize(self)

    def isclose(self, other, tol=1e-9):
        o = Vec3.of(other)
        return (abs(self.x - o.x) <= tol and abs(self.y - o.y) <= tol
                and abs(self.z - o.z) <= tol)


E_X = Vec3(1.0, 0.0, 0.0)
E_Y = Vec3(0.0, 1.0, 0.0)
E_Z = Vec3(0.0, 0.0, 1.0)
ZERO = Vec3(0.0, 0.0, 0.0)
BASIS = (E_X, E_Y, E_Z)


def dot(a, b) -> float:
    a, b = Vec3.of(a), Vec3.of(b)
    return a.x * b.x + a.y * b.y + a.z * b.z


def cross(a, b) -> Vec3:
    a, b = Vec3.of(a), Vec3.of(b)
    return Vec3(a.y * b.z - a.z * b.y,
                a.z * b.x - a.x * b.z,
                a.x * b.y - a.y * b.x)


def norm(a) -> float:
    a = Vec3.of(a)
    return math.sqrt(a.x * a.x + a.y * a.y + a.z * a.z)


def normalize(a) -> Vec3:
    a = Vec3.of(a)
    n = norm(a)
    if n <= ZERO_TOL:
        raise ZeroVector(f"cannot normalize {a!r}")
    return a / n


def orthonormal_to(a) -> Vec3:
    """Deterministic unit vector orthogonal to ``a``.

    Takes the basis vector least aligned with ``a`` (first one wins on ties,
    in x, y, z order), removes its component along ``a`` and normalizes.
    """
    a = Vec3.of(a)
    n = norm(a)
    if n <= ZERO_TOL:
        raise ZeroVector(f"no orthogonal direction for {a!r}")
    a_hat = a / n
    comps = [abs(c) for c in a_hat]
    e = BASIS[comps.index(min(comps))]
    return normalize(e - a_hat * dot(e, a_hat))
