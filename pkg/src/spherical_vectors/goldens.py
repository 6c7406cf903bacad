"""Reference values from the worked examples, as an executable check list.

Each case computes something with the library and compares it with a value
written out by hand (square roots and all). :func:`run_checks` is what the
``paper-check`` command runs.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable

from .errors import DegenerateSupport
from .linalg3 import E_X, E_Y, E_Z, Vec3, cross, dot
from .polar import arg, argument_pair, cos_sv, exp_i, sin_sv
from .quaternion import (I, J, K, ONE, Quaternion, conj, embed_vector,
                         from_spherical, inv, mul, norm, spherical_components)
from .spherical_vector import (add, canonical_pair, chain_pair, from_pair, mu,
                               mu_inv, solve_backward, solve_forward, straight,
                               support_normal, zero)

DEFAULT_TOL = 1e-9

SQ2 = math.sqrt(2)
SQ3 = math.sqrt(3)
SQ6 = math.sqrt(6)

# worked example: two unit quaternions and their products
P = Quaternion(SQ6 / 3, 0.0, -SQ6 / 6, -SQ6 / 6)      # sqrt(6)/6 (2 - j - k)
Q = Quaternion(SQ2 / 2, SQ2 / 2, 0.0, 0.0)            # sqrt(2)/2 (1 + i)
H = Quaternion(SQ3 / 3, SQ3 / 3, 0.0, -SQ3 / 3)       # qp = sqrt(3)/3 (1 + i - k)
H2 = Quaternion(SQ3 / 3, SQ3 / 3, -SQ3 / 3, 0.0)      # pq = sqrt(3)/3 (1 + i - j)
CHAIN_U = Vec3(SQ3 / 3, SQ3 / 3, SQ3 / 3)
CHAIN_V = Vec3(SQ2 / 2, SQ2 / 2, 0.0)
CHAIN_W2 = Vec3(SQ3 / 3, SQ3 / 3, -SQ3 / 3)

# two-vector example for cosine and sine
EX_U = Vec3(SQ2 / 2, SQ2 / 2, 0.0)
EX_V = Vec3(SQ3 / 3, SQ3 / 3, SQ3 / 3)
EX_N = Vec3(SQ6 / 6, -SQ6 / 6, 0.0)


def _flat(x) -> list[float]:
    if isinstance(x, (int, float)):
        return [float(x)]
    out = []
    for item in x:
        out.extend(_flat(item))
    return out


def _raises(fn, exc) -> float:
    try:
        fn()
    except exc:
        return 1.0
    return 0.0


@dataclass(frozen=True)
class Case:
    id: str
    description: str
    compute: Callable[[], tuple]


@dataclass(frozen=True)
class CheckResult:
    id: str
    description: str
    passed: bool
    max_error: float
    tolerance: float

    def as_dict(self):
        return asdict(self)


CASES: list[Case] = [
    # two-vector example
    Case("example-dot", "u.v = sqrt(6)/3", lambda: (dot(EX_U, EX_V), SQ6 / 3)),
    Case("example-cross", "u x v = (sqrt6/6, -sqrt6/6, 0)", lambda: (cross(EX_U, EX_V), EX_N)),
    Case("example-from-pair", "(u, v) has components sqrt(6)/3 and (sqrt6/6, -sqrt6/6, 0)",
         lambda: (tuple(from_pair(EX_U, EX_V)), (SQ6 / 3, EX_N))),
    Case("example-cos-sin", "cos = sqrt(6)/3, sin = sqrt6/6 j - sqrt6/6 k",
         lambda: ((cos_sv(from_pair(EX_U, EX_V)), embed_vector(sin_sv(from_pair(EX_U, EX_V)))),
                  (SQ6 / 3, Quaternion(0.0, 0.0, SQ6 / 6, -SQ6 / 6)))),
    # vector identification
    Case("embed-e_x", "(1,0,0) is identified with j", lambda: (embed_vector(E_X), J)),
    Case("embed-e_y", "(0,1,0) is identified with k", lambda: (embed_vector(E_Y), K)),
    Case("unit-inverse-is-conjugate", "q^-1 = conj(q) for unit q",
         lambda: (inv(P), conj(P))),
    # arguments of i, j, k
    Case("spherical-i", "spherical components of i are 0 and e_z",
         lambda: (tuple(spherical_components(I)), (0.0, E_Z))),
    Case("from-spherical-i", "i = i e_z", lambda: (from_spherical(0.0, E_Z), I)),
    Case("mu-i", "mu(0, e_z) = i", lambda: (mu(mu_inv(I)), I)),
    Case("mu-inv-j", "spherical components of j are 0 and -e_y",
         lambda: (tuple(mu_inv(J)), (0.0, -E_Y))),
    Case("arg-i", "arg(i) = (0, e_z)", lambda: (tuple(arg(I)), (0.0, E_Z))),
    Case("pair-i", "arg(i) = (e_x, e_y)", lambda: (tuple(argument_pair(I)), (E_X, E_Y))),
    Case("pair-j", "arg(j) = (e_x, e_z)", lambda: (tuple(argument_pair(J)), (E_X, E_Z))),
    Case("pair-k", "arg(k) = (e_y, e_z)", lambda: (tuple(argument_pair(K)), (E_Y, E_Z))),
    Case("solve-arg-i", "(e_x, v) = arg(i) gives v = e_y",
         lambda: (solve_forward(arg(I), E_X), E_Y)),
    Case("solve-arg-k", "(e_y, v) = arg(k) gives v = e_z",
         lambda: (solve_forward(arg(K), E_Y), E_Z)),
    Case("exp-arg-i", "i = e^{i(e_x, e_y)}", lambda: (exp_i(from_pair(E_X, E_Y)), I)),
    # ki = j
    Case("ki-equals-j", "ki = j", lambda: (mul(K, I), J)),
    Case("ki-equals-j-arcs", "arg(i) + arg(k) = arg(j)",
         lambda: (tuple(add(arg(I), arg(K))), tuple(arg(J)))),
    Case("ki-equals-j-chasles", "(e_x, e_y) + (e_y, e_z) = (e_x, e_z)",
         lambda: (tuple(add(from_pair(E_X, E_Y), from_pair(E_Y, E_Z))),
                  tuple(from_pair(E_X, E_Z)))),
    # zero and straight spherical-vectors
    Case("zero-pair", "(u, u) is the zero spherical-vector",
         lambda: (tuple(from_pair(EX_V, EX_V)), (1.0, Vec3(0, 0, 0)))),
    Case("zero-from-e_x", "(e_x, e_x) = zero", lambda: (tuple(from_pair(E_X, E_X)), tuple(zero()))),
    Case("mu-zero", "mu(zero) = 1", lambda: (mu(zero()), ONE)),
    Case("zero-canonical", "zero is represented by (u, u)",
         lambda: (_flat(canonical_pair(zero()).u) , _flat(canonical_pair(zero()).v))),
    Case("straight-pair", "(u, -u) is the straight spherical-vector",
         lambda: (tuple(from_pair(EX_V, -EX_V)), (-1.0, Vec3(0, 0, 0)))),
    Case("straight-components", "straight = (-1, 0)", lambda: (tuple(straight()), (-1.0, Vec3(0, 0, 0)))),
    Case("straight-canonical", "straight is represented by (u, -u)",
         lambda: (_flat(canonical_pair(straight()).v), _flat(-canonical_pair(straight()).u))),
    Case("mu-straight", "mu(straight) = -1", lambda: (mu(straight()), -ONE)),
    Case("exp-straight", "e^{i straight} = -1", lambda: (exp_i(straight()), -ONE)),
    Case("arg-minus-one", "arg(-1) = straight", lambda: (tuple(arg(-ONE)), tuple(straight()))),
    Case("zero-has-no-support", "zero and straight have no support plane",
         lambda: ((_raises(lambda: support_normal(zero()), DegenerateSupport),
                   _raises(lambda: support_normal(straight()), DegenerateSupport)), (1.0, 1.0))),
    # worked product example
    Case("worked-q-unit", "|q| = 1", lambda: (norm(Q), 1.0)),
    Case("worked-p-unit", "|p| = 1", lambda: (norm(P), 1.0)),
    Case("worked-qp", "qp = sqrt(3)/3 (1 + i - k)", lambda: (mul(Q, P), H)),
    Case("worked-pq", "pq = sqrt(3)/3 (1 + i - j)", lambda: (mul(P, Q), H2)),
    Case("worked-spherical-p", "lam_p = sqrt(6)/3, n_p = (-sqrt6/6, sqrt6/6, 0)",
         lambda: (tuple(spherical_components(P)), (SQ6 / 3, Vec3(-SQ6 / 6, SQ6 / 6, 0.0)))),
    Case("worked-spherical-q", "q = sqrt(2)/2 + i (0, 0, sqrt(2)/2)",
         lambda: (from_spherical(SQ2 / 2, (0.0, 0.0, SQ2 / 2)), Q)),
    Case("worked-arg-q", "lam_q = sqrt(2)/2, n_q = (0, 0, sqrt(2)/2)",
         lambda: (tuple(mu_inv(Q)), (SQ2 / 2, Vec3(0.0, 0.0, SQ2 / 2)))),
    Case("worked-sum-h", "arg(p) + arg(q) = arg(qp)",
         lambda: (tuple(add(arg(P), arg(Q))), tuple(arg(H)))),
    Case("worked-sum-h-prime", "arg(q) + arg(p) = arg(pq)",
         lambda: (tuple(add(arg(Q), arg(P))), tuple(arg(H2)))),
    Case("worked-chain-pq", "arg(p) = (u, v), arg(q) = (v, e_y)",
         lambda: (tuple(chain_pair(arg(P), arg(Q))), (CHAIN_U, CHAIN_V, E_Y))),
    Case("worked-chain-qp", "arg(q) = (e_x, v), arg(p) = (v, w')",
         lambda: (tuple(chain_pair(arg(Q), arg(P))), (E_X, CHAIN_V, CHAIN_W2))),
    Case("worked-arg-h-pair", "arg(qp) = (u, e_y)",
         lambda: (tuple(from_pair(CHAIN_U, E_Y)), tuple(arg(H)))),
    Case("worked-arg-h-prime-pair", "arg(pq) = (e_x, w')",
         lambda: (tuple(from_pair(E_X, CHAIN_W2)), tuple(arg(H2)))),
    Case("worked-solve-backward", "(w, v) = arg(p) gives w = u",
         lambda: (solve_backward(arg(P), CHAIN_V), CHAIN_U)),
]


def run_checks(tol: float = DEFAULT_TOL, perturb: float = 0.0) -> list[CheckResult]:
    """Evaluate every case. ``perturb`` is added to each expected value and
    exists only to prove the harness can fail."""
    results = []
    for case in CASES:
        try:
            got, want = case.compute()
            got, want = _flat(got), _flat(want)
            if len(got) != len(want):
                raise ValueError(f"shape mismatch {len(got)} vs {len(want)}")
            err = max(abs(g - (w + perturb)) for g, w in zip(got, want))
        except Exception:  # a crashing case is a failing case
            err = math.inf
        results.append(CheckResult(case.id, case.description, err <= tol, err, tol))
    return results
