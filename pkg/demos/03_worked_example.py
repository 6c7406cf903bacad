"""
A worked product, step by step
==============================

Two unit quaternions, their arguments and their two products, with every
intermediate arc spelled out.
"""

import math

from spherical_vectors import Quaternion, add, arg, chain_pair, from_pair, mul

s2, s3, s6 = math.sqrt(2), math.sqrt(3), math.sqrt(6)
p = Quaternion(2 * s6 / 6, 0, -s6 / 6, -s6 / 6)   # sqrt(6)/6 (2 - j - k)
q = Quaternion(s2 / 2, s2 / 2, 0, 0)              # sqrt(2)/2 (1 + i)

# The two products differ; both have modulus one.
print("qp =", mul(q, p), " expected sqrt(3)/3 (1 + i - k), sqrt(3)/3 =", s3 / 3)
print("pq =", mul(p, q), " expected sqrt(3)/3 (1 + i - j)")

alpha_p, alpha_q = arg(p), arg(q)
print("arg(p) =", tuple(alpha_p))
print("arg(q) =", tuple(alpha_q))

# Put the arcs head to tail: arg(p) = (u, v) and arg(q) = (v, w).
u, v, w = chain_pair(alpha_p, alpha_q)
print("u, v, w =", u, v, w)
# arg(p) + arg(q) is the arc (u, w), which is the argument of qp.
print(add(alpha_p, alpha_q) == from_pair(u, w) == arg(mul(q, p)))

# In the other order the chain starts at e_x and ends at w'.
x, v2, w2 = chain_pair(alpha_q, alpha_p)
print("e_x, v, w' =", x, v2, w2)
print(add(alpha_q, alpha_p) == from_pair(x, w2) == arg(mul(p, q)))
