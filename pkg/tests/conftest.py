import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from sttilt.algebra import RelationSpec, build
from sttilt.formats import parse_algebra
from sttilt.quiver import Quiver

ALGEBRAS = Path(__file__).resolve().parent.parent / "algebras"

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def load(name: str):
    return build(*parse_algebra((ALGEBRAS / name).read_text()))


def linear_a(n: int, rels=()):
    q = Quiver.from_edges(range(1, n + 1), [(f"a{i}", i, i + 1) for i in range(1, n)])
    return build(q, [RelationSpec.of(r) for r in rels], max(2, n))


def gls_a2():
    q = Quiver.from_edges([1, 2], [("a", 1, 2), ("e1", 1, 1), ("e2", 2, 2)])
    rels = [RelationSpec.of("e1 e1"), RelationSpec.of("e2 e2"), RelationSpec.of((1, "e1 a"), (-1, "a e2"))]
    return build(q, rels, 4)


@pytest.fixture(scope="session")
def kA2():
    return linear_a(2)


@pytest.fixture(scope="session")
def kA3():
    return linear_a(3)


@pytest.fixture(scope="session")
def glsA2():
    return gls_a2()


@pytest.fixture(scope="session")
def glsA3():
    return load("gls_A3.alg")
