"""
Arguments of quaternions as arcs on the sphere
==============================================

A unit quaternion ``q = x + i w`` is read as a spherical-vector ``(x, w)``:
an oriented arc ``(u, v)`` of the unit sphere with ``u.v = x`` and
``u x v = w``. Here we look at i, j, k and a few others.
"""

from spherical_vectors import I, J, K, Quaternion, arg, argument_pair, from_pair, mu

# Each of i, j, k is a quarter turn; its argument has scalar component 0.
for name, q in (("i", I), ("j", J), ("k", K)):
    alpha = arg(q)
    u, v = argument_pair(q)
    print(f"arg({name}) = (lam={alpha.lam:+.0f}, n={tuple(alpha.n)})   pair u={tuple(u)} v={tuple(v)}")

# The pair is only one representative. Any rotation of (u, v) inside the
# support plane (the plane with normal n) gives the same spherical-vector.
alpha = arg(I)
print(from_pair((1, 0, 0), (0, 1, 0)) == alpha, from_pair((-1, 0, 0), (0, -1, 0)) == alpha)

# The modulus does not matter: arg(3q) = arg(q).
q = Quaternion(1, 2, -1, 0.5)
print(arg(3 * q) == arg(q))

# mu maps the arc back to its unit quaternion.
print(mu(arg(q)), "vs", q / q.norm())
