import math

import pytest
from hypothesis import assume, given

from conftest import (SQ2, SQ3, SQ6, max_abs_diff, random_spherical_vectors,
                      random_unit_vectors, spherical_vectors, unit_vectors)
from spherical_vectors.errors import (DegenerateSupport, InvariantViolation,
                                      NotInSupport, NotUnit, ZeroVector)
from spherical_vectors.linalg3 import (E_X, E_Y, E_Z, ZERO, Vec3, cross, dot,
                                       norm, normalize)
from spherical_vectors.quaternion import (I, J, K, ONE, Quaternion, conj, inv,
                                          mul)
from spherical_vectors.spherical_vector import (PairRepresentation,
                                                SphericalVector, add,
                                                canonical_pair, chain_pair,
                                                from_pair, mu, mu_inv, neg,
                                                solve_backward, solve_forward,
                                                straight, support_normal, zero)

P = SQ6 / 6 * Quaternion(2, 0, -1, -1)
Q = SQ2 / 2 * Quaternion(1, 1, 0, 0)
H = SQ3 / 3 * Quaternion(1, 1, 0, -1)
U = Vec3(SQ3 / 3, SQ3 / 3, SQ3 / 3)
V = Vec3(SQ2 / 2, SQ2 / 2, 0)


class TestConstruction:
    def test_invariant_is_enforced(self):
        with pytest.raises(InvariantViolation):
            SphericalVector(1.0, (0.1, 0, 0))
        with pytest.raises(InvariantViolation):
            SphericalVector(1.0 + 2e-9, ZERO)

    def test_small_drift_is_projected_back(self):
        a = SphericalVector(0.6 * (1 + 1e-10), (0.8 * (1 + 1e-10), 0, 0))
        assert a.lam ** 2 + dot(a.n, a.n) == pytest.approx(1.0, abs=1e-15)

    def test_no_renormalization_below_threshold(self):
        lam = 0.6 + 1e-14
        assert SphericalVector(lam, (0.8, 0, 0)).lam == lam

    def test_tolerant_equality(self):
        a = SphericalVector(0.6, (0.8, 0, 0))
        assert a == SphericalVector(0.6 + 5e-10, (0.8 - 4e-10, 0, 0))
        assert a != SphericalVector(0.6, (-0.8, 0, 0))
        with pytest.raises(TypeError):
            hash(a)


class TestFromPair:
    def test_two_vector_example(self):
        a = from_pair((SQ2 / 2, SQ2 / 2, 0), (SQ3 / 3, SQ3 / 3, SQ3 / 3))
        assert a.lam == pytest.approx(SQ6 / 3, abs=1e-15)
        assert a.n.isclose((SQ6 / 6, -SQ6 / 6, 0), 1e-15)

    @given(unit_vectors())
    def test_equal_and_opposite_pairs(self, u):
        assert from_pair(u, u) == zero()
        assert from_pair(u, -u) == straight()

    def test_scale_invariance(self):
        assert from_pair((3, 0, 0), (0, 0.5, 0)) == from_pair(E_X, E_Y)

    def test_zero_vector_rejected(self):
        with pytest.raises(ZeroVector):
            from_pair(ZERO, E_X)


class TestMu:
    def test_examples(self):
        assert mu(zero()) == ONE
        assert mu(straight()) == -ONE
        assert mu(SphericalVector(0, E_Z)) == I

    def test_inverse_examples(self):
        assert tuple(mu_inv(ONE)) == (1.0, ZERO)
        lam, n = mu_inv(Q)
        assert lam == pytest.approx(SQ2 / 2, abs=1e-15)
        assert n.isclose((0, 0, SQ2 / 2), 1e-15)
        assert tuple(mu_inv(J)) == (0.0, Vec3(0, -1, 0))

    def test_non_unit_rejected(self):
        with pytest.raises(NotUnit):
            mu_inv(Quaternion(2))

    @given(spherical_vectors())
    def test_roundtrip(self, a):
        assert a.isclose(mu_inv(mu(a)), 1e-12)

    @given(unit_vectors(), unit_vectors())
    def test_mu_of_pair_is_quotient(self, u, v):
        # mu((u, v)) = v^-1 u with vectors read as quaternions j a + k b + c
        from spherical_vectors.quaternion import embed_vector
        oracle = mul(inv(embed_vector(v)), embed_vector(u))
        assert max_abs_diff(mu(from_pair(u, v)), oracle) <= 1e-12


class TestGroupLaw:
    def test_ki_equals_j(self):
        assert add(mu_inv(I), mu_inv(K)) == mu_inv(J)

    def test_worked_sum(self):
        assert add(mu_inv(P), mu_inv(Q)).isclose(mu_inv(H), 1e-15)

    @given(spherical_vectors(), spherical_vectors())
    def test_anti_isomorphism(self, a, b):
        assert max_abs_diff(mu(add(a, b)), mul(mu(b), mu(a))) <= 1e-12

    @given(spherical_vectors())
    def test_neutral_and_inverse(self, a):
        assert add(a, zero()).isclose(a, 1e-12)
        assert add(zero(), a).isclose(a, 1e-12)
        assert add(a, neg(a)).isclose(zero(), 1e-12)
        assert add(neg(a), a).isclose(zero(), 1e-12)

    @given(spherical_vectors())
    def test_neg_matches_conjugate(self, a):
        # the opposite corresponds to the inverse (= conjugate) unit quaternion
        assert neg(a).isclose(mu_inv(conj(mu(a))), 1e-15)

    def test_neg_fixed_points(self):
        assert neg(zero()) == zero()
        assert neg(straight()) == straight()

    def test_straight_is_order_two(self):
        # (-1)(-1) = 1
        assert add(straight(), straight()) == zero()

    @given(spherical_vectors(), spherical_vectors(), spherical_vectors())
    def test_associativity(self, a, b, c):
        assert add(add(a, b), c).isclose(add(a, add(b, c)), 1e-9)

    @given(unit_vectors(), unit_vectors(), unit_vectors())
    def test_chasles(self, u, v, w):
        assert add(from_pair(u, v), from_pair(v, w)).isclose(from_pair(u, w), 1e-9)

    @given(unit_vectors(), unit_vectors())
    def test_opposite_swaps_pair(self, u, v):
        assert neg(from_pair(u, v)).isclose(from_pair(v, u), 1e-12)

    def test_operators(self):
        a, b = mu_inv(I), mu_inv(K)
        assert a + b == add(a, b)
        assert -a == neg(a)
        assert a - b == add(a, neg(b))
        assert 2 * a == a * 2 == add(a, a) == straight()


class TestSupport:
    def test_examples(self):
        assert support_normal(SphericalVector(0, E_Z)) == E_Z
        a = SphericalVector(SQ6 / 3, (SQ6 / 6, -SQ6 / 6, 0))
        assert support_normal(a).isclose(normalize(a.n), 0)
        assert support_normal(a).isclose((SQ2 / 2, -SQ2 / 2, 0), 1e-15)

    def test_degenerate(self):
        with pytest.raises(DegenerateSupport):
            support_normal(zero())
        with pytest.raises(DegenerateSupport):
            support_normal(straight())


class TestSolvers:
    def test_forward_examples(self):
        assert solve_forward(mu_inv(I), E_X) == E_Y
        assert solve_forward(mu_inv(K), E_Y) == E_Z

    def test_forward_worked_family(self):
        a = SphericalVector(SQ6 / 3, (-SQ6 / 6, SQ6 / 6, 0))
        v = solve_forward(a, V)
        assert from_pair(V, v).isclose(a, 1e-15)

    def test_backward_examples(self):
        a = mu_inv(I)
        assert solve_backward(a, E_Y) == E_X
        assert from_pair(E_X, E_Y) == a
        assert solve_backward(mu_inv(P), V).isclose(U, 1e-15)

    @given(spherical_vectors(), unit_vectors())
    def test_defining_properties(self, a, x):
        assume(not a.is_degenerate and norm(a.n) > 1e-6)
        n = normalize(a.n)
        u_raw = x - n * dot(x, n)
        assume(norm(u_raw) > 1e-3)
        u = normalize(u_raw)
        v = solve_forward(a, u)
        w = solve_backward(a, u)
        assert abs(norm(v) - 1) <= 1e-12 and abs(norm(w) - 1) <= 1e-12
        assert from_pair(u, v).isclose(a, 1e-12)
        assert from_pair(w, u).isclose(a, 1e-12)

    def test_uniqueness(self, rng):
        for a in random_spherical_vectors(rng, 200):
            n = normalize(a.n)
            u = normalize(cross(n, random_unit_vectors(rng, 1)[0]))
            v = solve_forward(a, u)
            # random competitors anywhere on the sphere
            for other in random_unit_vectors(rng, 5):
                if norm(other - v) > 1e-6:
                    assert not from_pair(u, other).isclose(a, 1e-9)
            # and close competitors in the support plane
            for t in (1e-5, -1e-5, 0.3):
                other = math.cos(t) * v + math.sin(t) * cross(n, v)
                assert norm(other - v) > 1e-6
                assert not from_pair(u, other).isclose(a, 1e-9)

    def test_errors(self):
        a = mu_inv(I)
        with pytest.raises(NotInSupport):
            solve_forward(a, E_Z)
        with pytest.raises(NotUnit):
            solve_forward(a, (2, 0, 0))
        with pytest.raises(DegenerateSupport):
            solve_backward(zero(), E_X)


class TestCanonicalPair:
    def test_examples(self):
        assert tuple(canonical_pair(mu_inv(I))) == (E_X, E_Y)
        u, v = canonical_pair(zero())
        assert u == v
        u, v = canonical_pair(straight())
        assert v == -u

    @given(spherical_vectors())
    def test_roundtrip(self, a):
        pair = canonical_pair(a)
        assert pair.spherical_vector().isclose(a, 1e-12)
        assert canonical_pair(a) == pair

    def test_pair_requires_unit_vectors(self):
        with pytest.raises(NotUnit):
            PairRepresentation((1, 1, 0), E_X)


class TestChainPair:
    def test_worked_chains(self):
        a_p, a_q = mu_inv(P), mu_inv(Q)
        u, v, w = chain_pair(a_p, a_q)
        assert max_abs_diff((u, v, w), (U, V, E_Y)) <= 1e-15
        u, v, w = chain_pair(a_q, a_p)
        assert max_abs_diff((u, v, w), (E_X, V, (SQ3 / 3, SQ3 / 3, -SQ3 / 3))) <= 1e-15

    def test_flip_gives_the_other_solution(self):
        a_p, a_q = mu_inv(P), mu_inv(Q)
        u, v, w = chain_pair(a_p, a_q, flip=True)
        assert max_abs_diff((u, v, w), (-U, -V, -E_Y)) <= 1e-15
        assert from_pair(u, v).isclose(a_p, 1e-12)
        assert from_pair(v, w).isclose(a_q, 1e-12)

    def test_with_zero(self):
        a = mu_inv(P)
        u, v, w = chain_pair(a, zero())
        assert (u, v) == tuple(canonical_pair(a))
        assert w == v

    def _check_chain(self, a, b, chain, tol=1e-9):
        u, v, w = chain
        for x in chain:
            assert abs(norm(x) - 1) <= 1e-12
        assert from_pair(u, v).isclose(a, tol)
        assert from_pair(v, w).isclose(b, tol)
        assert add(a, b).isclose(from_pair(u, w), tol)

    def test_degenerate_cases(self):
        a = mu_inv(P)
        for b in (zero(), straight()):
            self._check_chain(a, b, chain_pair(a, b))
            self._check_chain(b, a, chain_pair(b, a))
        for a in (zero(), straight()):
            for b in (zero(), straight()):
                self._check_chain(a, b, chain_pair(a, b))
        u, v, w = chain_pair(a, straight())
        assert w == -v

    def test_shared_support(self):
        a = from_pair(E_X, E_Y)
        b = from_pair(E_Y, normalize((-1, 1, 0)))
        chain = chain_pair(a, b)
        self._check_chain(a, b, chain)
        # opposite normals are also a shared support
        b = from_pair(E_Y, normalize((1, 1, 0)))
        self._check_chain(a, b, chain_pair(a, b))

    @given(spherical_vectors(), spherical_vectors())
    def test_random_chains(self, a, b):
        self._check_chain(a, b, chain_pair(a, b))
        self._check_chain(a, b, chain_pair(a, b, flip=True))
