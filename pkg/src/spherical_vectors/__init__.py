"""Spherical-vectors: arguments, polar form and exponential notation of
quaternions, with unit quaternions read as oriented arcs on the unit sphere."""

from .errors import (DegenerateSupport, InvariantViolation, NotInSupport,
                     NotUnit, SphericalVectorError, ZeroQuaternion, ZeroVector)
from .linalg3 import E_X, E_Y, E_Z, Vec3, cross, dot, normalize, orthonormal_to
from .polar import (PolarForm, arg, argument_pair, cos_sv, exp_i, polar,
                    scale_arg, sin_sv)
from .quaternion import (I, J, K, ONE, Quaternion, SphericalForm,
                         UnitQuaternion, conj, embed_vector, from_spherical,
                         inv, mul, spherical_components, vector_quotient)
from .spherical_vector import (Chain, PairRepresentation, SphericalVector, add,
                               canonical_pair, chain_pair, from_pair, mu,
                               mu_inv, neg, solve_backward, solve_forward,
                               straight, support_normal, zero)

__version__ = "0.1.0"

__all__ = [
    "add",
    "arg",
    "argument_pair",
    "canonical_pair",
    "Chain",
    "chain_pair",
    "conj",
    "cos_sv",
    "cross",
    "DegenerateSupport",
    "dot",
    "E_X",
    "E_Y",
    "E_Z",
    "embed_vector",
    "exp_i",
    "from_pair",
    "from_spherical",
    "I",
    "inv",
    "InvariantViolation",
    "J",
    "K",
    "mu",
    "mu_inv",
    "mul",
    "neg",
    "normalize",
    "NotInSupport",
    "NotUnit",
    "ONE",
    "orthonormal_to",
    "PairRepresentation",
    "polar",
    "PolarForm",
    "Quaternion",
    "scale_arg",
    "sin_sv",
    "solve_backward",
    "solve_forward",
    "spherical_components",
    "SphericalForm",
    "SphericalVector",
    "SphericalVectorError",
    "straight",
    "support_normal",
    "UnitQuaternion",
    "Vec3",
    "vector_quotient",
    "zero",
    "ZeroQuaternion",
    "ZeroVector",
]
