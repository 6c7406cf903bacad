import math
import os
import time

import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from spherical_vectors import UnitQuaternion, Vec3, mu_inv

SQ2, SQ3, SQ6 = math.sqrt(2), math.sqrt(3), math.sqrt(6)

_SESSION_START = time.perf_counter()

# the whole suite has a 10 s budget, so property tests get a small sample
# each; HYPOTHESIS_PROFILE=thorough runs a deep search instead
settings.register_profile("default", max_examples=20, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=1000, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def rng():
    return np.random.default_rng(20191031)


def random_unit_vectors(rng, n):
    a = rng.normal(size=(n, 3))
    a /= np.linalg.norm(a, axis=1, keepdims=True)
    return [Vec3(*row) for row in a]


def random_unit_quaternions(rng, n):
    a = rng.normal(size=(n, 4))
    a /= np.linalg.norm(a, axis=1, keepdims=True)
    return [UnitQuaternion(*row) for row in a]


def random_spherical_vectors(rng, n):
    return [mu_inv(q) for q in random_unit_quaternions(rng, n)]


def max_abs_diff(a, b):
    """Largest componentwise difference between two (nested) sequences."""
    fa, fb = _flatten(a), _flatten(b)
    assert len(fa) == len(fb)
    return max((abs(x - y) for x, y in zip(fa, fb)), default=0.0)


def _flatten(x):
    if isinstance(x, (int, float)):
        return [float(x)]
    out = []
    for item in x:
        out.extend(_flatten(item))
    return out


# unit-scale reals: exact zero or magnitude in [1e-6, 10]
finite = st.one_of(st.just(0.0), st.floats(1e-6, 10), st.floats(-10, -1e-6))
vectors = st.builds(Vec3, finite, finite, finite)


@st.composite
def unit_vectors(draw):
    v = draw(st.tuples(finite, finite, finite).filter(lambda t: math.hypot(*t) > 1e-3))
    r = math.hypot(*v)
    return Vec3(v[0] / r, v[1] / r, v[2] / r)


@st.composite
def spherical_vectors(draw):
    q = draw(st.tuples(finite, finite, finite, finite).filter(
        lambda t: math.sqrt(sum(c * c for c in t)) > 1e-3))
    return mu_inv(UnitQuaternion.normalized(q))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = time.perf_counter() - _SESSION_START
    status = "PASS" if elapsed < 10.0 else "FAIL"
    terminalreporter.write_line(f"[{status}] total suite runtime {elapsed:.2f} s (limit 10 s)")


def pytest_collection_modifyitems(session, config, items):
    # acceptance runs last so its final check sees the whole suite's runtime
    items.sort(key=lambda item: item.fspath.basename == "test_acceptance.py")
