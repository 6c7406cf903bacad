"""Spherical-vectors: oriented arcs on the unit sphere as a (non-abelian) group.

A spherical-vector is the class of ordered pairs ``(u, v)`` of non-zero
vectors sharing the same components

    lam = u.v / (|u||v|),    n = u x v / (|u||v|),

so ``lam**2 + |n|**2 == 1``. The map ``mu(lam, n) = lam + i n`` onto unit
quaternions is a bijection and the group law is pulled back through it with
the order *reversed*::

    alpha + beta = mu^-1( mu(beta) * mu(alpha) )

so that arcs concatenate head to tail, ``(u, v) + (v, w) == (u, w)``.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (DegenerateSupport, InvariantViolation, NotInSupport,
                     NotUnit, ZeroVector)
from .linalg3 import (ZERO, ZERO_TOL, E_X, Vec3, cross, dot, norm, normalize,
                      orthonormal_to)
from .quaternion import (UNIT_TOL, UnitQuaternion, from_spherical, hamilton,
                         spherical_components)

# |lam^2 + |n|^2 - 1| above this is an error, between RENORM_TOL and this the
# components are pulled back onto the constraint sphere.
INVARIANT_TOL = 1e-9
RENORM_TOL = 1e-12
EQ_TOL = 1e-9
SUPPORT_TOL = 1e-9
# relative threshold on |n_a x n_b| / (|n_a||n_b|) for "same support"
PARALLEL_TOL = 1e-9


@dataclass(frozen=True, slots=True, eq=False)
class SphericalVector:
    """Element ``(lam, n)`` of the group of spherical-vectors.

    ``+``, unary and binary ``-`` and integer ``*`` follow the group law.
    ``==`` compares components within ``EQ_TOL``; instances are unhashable.
    """

    lam: float
    n: Vec3

    __array_ufunc__ = None

    def __post_init__(self):
        lam = float(self.lam)
        n = Vec3.of(self.n)
        if not math.isfinite(lam):
            raise InvariantViolation(f"non-finite scalar component {lam!r}")
        s = lam * lam + n.x * n.x + n.y * n.y + n.z * n.z
        dev = abs(s - 1.0)
        if dev > INVARIANT_TOL:
            raise InvariantViolation(
                f"lam^2 + |n|^2 = {s!r} (deviation {dev:.3g} > {INVARIANT_TOL})")
        if dev > RENORM_TOL:
            r = math.sqrt(s)
            lam, n = lam / r, n / r
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "n", n)

    def __iter__(self):
        yield self.lam
        yield self.n

    def __add__(self, other):
        if not isinstance(other, SphericalVector):
            return NotImplemented
        return add(self, other)

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        if not isinstance(other, SphericalVector):
            return NotImplemented
        return add(self, neg(other))

    def __mul__(self, m):
        if not isinstance(m, numbers.Integral):
            return NotImplemented
        return multiple(self, int(m))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SphericalVector):
            return NotImplemented
        return self.isclose(other)

    __hash__ = None

    def isclose(self, other, tol=EQ_TOL) -> bool:
        return abs(self.lam - other.lam) <= tol and self.n.isclose(other.n, tol)

    @property
    def is_zero(self) -> bool:
        return norm(self.n) <= ZERO_TOL and self.lam > 0

    @property
    def is_straight(self) -> bool:
        return norm(self.n) <= ZERO_TOL and self.lam < 0

    @property
    def is_degenerate(self) -> bool:
        return norm(self.n) <= ZERO_TOL

    def __repr__(self):
        return f"SphericalVector(lam={self.lam!r}, n={self.n!r})"


@dataclass(frozen=True, slots=True)
class PairRepresentation:
    """Ordered pair of unit vectors ``(u, v)``, i.e. the arc from u to v."""

    u: Vec3
    v: Vec3

    def __post_init__(self):
        for name in ("u", "v"):
            vec = Vec3.of(getattr(self, name))
            if abs(norm(vec) - 1.0) > UNIT_TOL:
                raise NotUnit(f"{name} = {vec!r} is not a unit vector")
            object.__setattr__(self, name, vec)

    def __iter__(self):
        yield self.u
        yield self.v

    def spherical_vector(self) -> SphericalVector:
        return from_pair(self.u, self.v)


class Chain(NamedTuple):
    """Unit vectors with ``alpha = (u, v)`` and ``beta = (v, w)``."""

    u: Vec3
    v: Vec3
    w: Vec3


def zero() -> SphericalVector:
    return SphericalVector(1.0, ZERO)


def straight() -> SphericalVector:
    return SphericalVector(-1.0, ZERO)


def from_pair(u, v) -> SphericalVector:
    u, v = Vec3.of(u), Vec3.of(v)
    nu, nv = norm(u), norm(v)
    if nu <= ZERO_TOL or nv <= ZERO_TOL:
        raise ZeroVector("both vectors of a pair must be non-zero")
    r = nu * nv
    return SphericalVector(dot(u, v) / r, cross(u, v) / r)


def mu(alpha: SphericalVector) -> UnitQuaternion:
    return UnitQuaternion(*from_spherical(alpha.lam, alpha.n))


def mu_inv(q) -> SphericalVector:
    q = UnitQuaternion.of(q)
    x, w = spherical_components(q)
    return SphericalVector(x, w)


def _mu_tuple(alpha):
    n = alpha.n
    return (alpha.lam, n.z, -n.y, n.x)


def add(alpha: SphericalVector, beta: SphericalVector) -> SphericalVector:
    # reversed on purpose: mu is an anti-isomorphism. Same as
    # mu_inv(mul(mu(beta), mu(alpha))) without the intermediate objects.
    x, ci, cj, ck = hamilton(_mu_tuple(beta), _mu_tuple(alpha))
    return SphericalVector(x, Vec3(ck, -cj, ci))


def neg(alpha: SphericalVector) -> SphericalVector:
    return SphericalVector(alpha.lam, -alpha.n)


def multiple(alpha: SphericalVector, m: int) -> SphericalVector:
    """``m * alpha`` by repeated addition (``-alpha`` repeated for m < 0)."""
    step = alpha if m >= 0 else neg(alpha)
    out = zero()
    for _ in range(abs(m)):
        out = add(out, step)
    return out


def support_normal(alpha: SphericalVector) -> Vec3:
    if alpha.is_degenerate:
        raise DegenerateSupport("zero and straight spherical-vectors have no support")
    return normalize(alpha.n)


def _check_in_support(alpha, u):
    n_hat = support_normal(alpha)
    u = Vec3.of(u)
    if abs(norm(u) - 1.0) > UNIT_TOL:
        raise NotUnit(f"{u!r} is not a unit vector")
    if abs(dot(u, n_hat)) > SUPPORT_TOL:
        raise NotInSupport(f"{u!r} is not in the support plane (normal {n_hat!r})")
    return u


def solve_forward(alpha: SphericalVector, u) -> Vec3:
    """The unique unit ``v`` in the support with ``(u, v) == alpha``."""
    u = _check_in_support(alpha, u)
    return alpha.lam * u + cross(alpha.n, u)


def solve_backward(alpha: SphericalVector, u) -> Vec3:
    """The unique unit ``w`` in the support with ``(w, u) == alpha``."""
    u = _check_in_support(alpha, u)
    return alpha.lam * u - cross(alpha.n, u)


def canonical_pair(alpha: SphericalVector) -> PairRepresentation:
    """Deterministic representative ``(u, v)`` of ``alpha``.

    ``u`` is ``orthonormal_to(n)`` (``e_x`` for zero/straight) and
    ``v = lam u + n x u``.
    """
    if alpha.is_degenerate:
        return PairRepresentation(E_X, alpha.lam * E_X)
    u = orthonormal_to(alpha.n)
    return PairRepresentation(u, alpha.lam * u + cross(alpha.n, u))


def _positive_orientation(v: Vec3) -> Vec3:
    # make the largest-magnitude component positive (first one on ties)
    mags = [abs(c) for c in v]
    return -v if v[mags.index(max(mags))] < 0 else v


def chain_pair(alpha: SphericalVector, beta: SphericalVector,
               flip: bool = False) -> Chain:
    """Unit vectors ``u, v, w`` with ``alpha = (u, v)`` and ``beta = (v, w)``.

    Then ``alpha + beta == (u, w)``. When both supports are proper and
    distinct, ``v`` spans their intersection line; there are exactly two
    solutions, related by ``(u, v, w) -> (-u, -v, -w)``. The returned one has
    the largest component of ``v`` positive; ``flip=True`` gives the other.
    Coincident supports, zero and straight arguments have infinitely many
    solutions and a deterministic one is returned.
    """
    if alpha.is_degenerate and beta.is_degenerate:
        u = E_X
        v = alpha.lam * u
        w = beta.lam * v
    elif beta.is_degenerate:
        # beta is (v, v) or (v, -v)
        u, v = canonical_pair(alpha)
        w = beta.lam * v
    elif alpha.is_degenerate:
        v, w = canonical_pair(beta)
        u = alpha.lam * v
    else:
        na, nb = alpha.n, beta.n
        c = cross(na, nb)
        if norm(c) > PARALLEL_TOL * norm(na) * norm(nb):
            v = _positive_orientation(normalize(c))
        else:
            v = orthonormal_to(na)
        u = alpha.lam * v - cross(na, v)
        w = beta.lam * v + cross(nb, v)
    if flip:
        u, v, w = -u, -v, -w
    return Chain(u, v, w)
