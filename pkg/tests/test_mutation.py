import pytest
from hypothesis import given, settings, strategies as st

from conftest import gls_a2, linear_a, load
from randomalg import random_algebra
from sttilt.algebra import RelationSpec, build
from sttilt.complexes import algebra_complex, decompose, is_silting, order_geq, zero_object
from sttilt.errors import IncompletePoset, NotSilting
from sttilt.mutation import HomCache, SiltingNode, enumerate_sttilt, left_mutate, order_pairs
from sttilt.poset import is_isomorphic, regularity_check, sttilt_poset
from sttilt.quiver import Quiver


def node_of(alg):
    return SiltingNode.from_complex(algebra_complex(alg))


def test_mutate_lambda_at_p2(kA2):
    lam = node_of(kA2)
    s = [x.g_vector() for x in lam.summands].index((0, 1))
    assert left_mutate(lam, s).fingerprint == ((1, -1), (1, 0))


def test_mutate_lambda_at_p1(kA2):
    lam = node_of(kA2)
    s = [x.g_vector() for x in lam.summands].index((1, 0))
    assert left_mutate(lam, s).fingerprint == ((-1, 0), (0, 1))


def test_minimum_does_not_mutate_down(kA2):
    bottom = SiltingNode.from_complex(zero_object(kA2))
    for s in range(2):
        with pytest.raises(NotSilting):
            left_mutate(bottom, s)


def test_pentagon(kA2):
    sp = enumerate_sttilt(kA2)
    assert len(sp.nodes) == 5 and len(sp.hasse) == 5 and sp.complete and not sp.cap_hit
    assert sp.nodes[0].fingerprint == ((0, 1), (1, 0))
    rel = order_pairs(sp)
    bottom = sp.index_of([(-1, 0), (0, -1)])
    assert all(rel[0][j] and rel[j][bottom] for j in range(5))
    m1 = sp.index_of([(1, 0), (1, -1)])
    m2 = sp.index_of([(0, 1), (-1, 0)])
    assert not rel[m1][m2] and not rel[m2][m1]


def test_counts():
    assert len(enumerate_sttilt(gls_a2()).nodes) == 5
    assert len(enumerate_sttilt(linear_a(3)).nodes) == 14
    loop = build(Quiver.from_edges([1], [("x", 1, 1)]), [RelationSpec.of("x x")], 2)
    sp = enumerate_sttilt(loop)
    assert len(sp.nodes) == 2 and sp.hasse == [(0, 1)]


def test_cap(kA3):
    sp = enumerate_sttilt(kA3, cap=4)
    assert sp.cap_hit and not sp.complete and len(sp.nodes) == 4
    assert regularity_check(sp) is None
    with pytest.raises(IncompletePoset):
        order_pairs(sp)
    with pytest.raises(ValueError):
        enumerate_sttilt(kA3, cap=0)


def test_gls_a2_pentagon_isomorphic(kA2):
    assert is_isomorphic(sttilt_poset(enumerate_sttilt(kA2)), sttilt_poset(enumerate_sttilt(gls_a2())))


def test_hom_cache_canonical_presentation(kA2):
    cache = HomCache()
    a, b = decompose(algebra_complex(kA2))
    assert cache.canonical(a) is a
    assert cache.canonical(decompose(algebra_complex(kA2))[0]) is a


# -- structural invariants ----------------------------------------------------

FAMILY = {
    "kA1": lambda: linear_a(1),
    "kA3": lambda: linear_a(3),
    "kA4": lambda: linear_a(4),
    "kA3/(a1a2)": lambda: linear_a(3, ["a1 a2"]),
    "glsA2": gls_a2,
    "glsA3": lambda: load("gls_A3.alg"),
    "D4": lambda: load("D4.alg"),
}


@pytest.fixture(scope="module", params=sorted(FAMILY))
def enumerated(request):
    return enumerate_sttilt(FAMILY[request.param]())


def check_structure(sp):
    n = len(sp.nodes)
    assert sp.complete
    assert regularity_check(sp)
    rel = order_pairs(sp)
    maxima = [i for i in range(n) if all(rel[i][j] for j in range(n))]
    minima = [i for i in range(n) if all(rel[j][i] for j in range(n))]
    assert maxima == [0] and len(minima) == 1
    assert all(x < 0 for g in sp.nodes[minima[0]].fingerprint for x in g if x)
    hasse = set(sp.hasse)
    fps = [set(nd.fingerprint) for nd in sp.nodes]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            adjacent = (i, j) in hasse or (j, i) in hasse
            assert adjacent == (len(fps[i] - fps[j]) == 1)
    for i, j in sp.hasse:
        assert rel[i][j] and not rel[j][i]
    # every summand appears with its own g-vector (injectivity on indecomposables)
    seen = {}
    for nd in sp.nodes:
        for s in nd.summands:
            key = s.g_vector()
            if key in seen:
                assert (seen[key].p1, seen[key].p0) == (s.p1, s.p0)
            seen[key] = s


def test_structure(enumerated):
    check_structure(enumerated)


def test_nodes_are_silting(enumerated):
    for nd in enumerated.nodes[:60]:
        assert is_silting(nd.complex)
        assert order_geq(enumerated.nodes[0].complex, nd.complex)


def test_enumeration_is_deterministic():
    a = enumerate_sttilt(load("D4.alg"))
    b = enumerate_sttilt(load("D4.alg"))
    assert [n.fingerprint for n in a.nodes] == [n.fingerprint for n in b.nodes]
    assert a.hasse == b.hasse


@settings(max_examples=15)
@given(st.integers(0, 10_000))
def test_random_tree_algebras_structure(seed):
    ra = random_algebra(seed, max_vertices=3)
    check_structure(enumerate_sttilt(build(ra.quiver, ra.relations, ra.nilbound)))
