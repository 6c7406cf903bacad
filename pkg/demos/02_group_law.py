"""
Adding arcs
===========

Spherical-vectors form a group. The sum is defined so that arcs concatenate
head to tail: ``(u, v) + (v, w) = (u, w)``. Quaternion products come out
in the opposite order, ``arg(p q) = arg(q) + arg(p)``.
"""

import numpy as np

from spherical_vectors import I, J, K, add, arg, chain_pair, from_pair, mul, neg, zero

rng = np.random.default_rng(0)


def random_unit():
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


# Chasles: concatenating two arcs gives the arc from the first start to the last end.
u, v, w = random_unit(), random_unit(), random_unit()
lhs = add(from_pair(u, v), from_pair(v, w))
print("Chasles holds:", lhs == from_pair(u, w))

# The familiar ki = j, read on the sphere: arg(i) + arg(k) = arg(j).
print("k i =", mul(K, I))
print("arg(i) + arg(k) == arg(j):", add(arg(I), arg(K)) == arg(J))

# The group is not commutative.
a, b = arg(I), arg(J)
print("arg(i) + arg(j) =", tuple(add(a, b)), "  arg(j) + arg(i) =", tuple(add(b, a)))

# Neutral element and opposites: (u, u) is zero, and -(u, v) = (v, u).
print("alpha + zero == alpha:", add(a, zero()) == a)
print("-(u, v) == (v, u):", neg(from_pair(u, v)) == from_pair(v, u))

# chain_pair turns two arcs into three points u, v, w with
# alpha = (u, v) and beta = (v, w); the sum is then the arc (u, w).
chain = chain_pair(arg(I), arg(K))
print("chain for arg(i), arg(k):", chain)
