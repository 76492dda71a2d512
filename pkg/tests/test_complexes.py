import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import gls_a2, linear_a
from sttilt.complexes import (
    TwoTermComplex,
    algebra_complex,
    chain_maps,
    decompose,
    direct_sum,
    g_matrix,
    hom_k1_dimension,
    is_presilting,
    is_silting,
    minimize,
    module_data,
    order_geq,
    projective_complex,
    zero_object,
)
from sttilt.errors import AlgebraMismatch, NotMinimized, NotSilting

A = linear_a(2)
ALPHA = A.path("a1").terms
P1, P2 = projective_complex(A, 1), projective_complex(A, 2)
P1s, P2s = projective_complex(A, 1, shifted=True), projective_complex(A, 2, shifted=True)
X1 = TwoTermComplex(A, (2,), (1,), [[ALPHA]])  # presentation of the simple at 1


def test_projective_complexes():
    assert P1.g_vector() == (1, 0) and P1.p1 == () and P1.p0 == (1,)
    assert P2s.g_vector() == (0, -1) and P2s.p1 == (2,) and P2s.p0 == ()
    lam = algebra_complex(A)
    assert sorted(lam.p0) == [1, 2] and lam.p1 == ()


def test_corner_validation():
    with pytest.raises(ValueError):
        TwoTermComplex(A, (1,), (2,), [[ALPHA]])


def test_hom_k1_examples():
    assert hom_k1_dimension(P1, P2) == 0
    assert hom_k1_dimension(P2, X1) == 0
    assert hom_k1_dimension(X1, P2) == 1
    with pytest.raises(AlgebraMismatch):
        hom_k1_dimension(P1, projective_complex(linear_a(2), 1))


def test_presilting_examples():
    assert is_presilting(algebra_complex(A))
    assert not is_presilting(direct_sum([X1, P2]))
    assert is_presilting(direct_sum([X1, P2s]))
    with pytest.raises(NotMinimized):
        is_presilting(TwoTermComplex(A, (1,), (1,), [[A.e(1)]]))


def test_silting_examples():
    assert is_silting(algebra_complex(A))
    assert not is_silting(P1)
    assert is_silting(direct_sum([X1, P1]))


def test_g_matrix_examples():
    assert g_matrix(algebra_complex(A)) == ((0, 1), (1, 0))
    assert g_matrix(zero_object(A)) == ((-1, 0), (0, -1))
    assert g_matrix(direct_sum([X1, P2s])) == ((0, -1), (1, -1))


def test_minimize_examples():
    assert minimize(TwoTermComplex(A, (1,), (1,), [[A.e(1)]])).is_zero
    t = TwoTermComplex(A, (2,), (1, 2), [[ALPHA], [A.e(2)]])
    m = minimize(t)
    assert m.p1 == () and m.p0 == (1,)
    assert minimize(X1).p1 == X1.p1 and minimize(X1).p0 == X1.p0


def test_decompose_examples():
    parts = decompose(algebra_complex(A))
    assert [p.g_vector() for p in parts] == [(0, 1), (1, 0)]
    assert [p.g_vector() for p in decompose(X1)] == [(1, -1)]
    twice = decompose(direct_sum([P1, P1]))
    assert [p.g_vector() for p in twice] == [(1, 0), (1, 0)]


def test_decompose_mixed_sum_with_multiplicity():
    t = direct_sum([X1, P1, X1, P2s, P1])
    gs = sorted(p.g_vector() for p in decompose(t))
    assert gs == sorted([(1, -1), (1, 0), (1, -1), (0, -1), (1, 0)])


def test_order_geq_examples():
    lam, zero = algebra_complex(A), zero_object(A)
    m2 = direct_sum([P2, P1s])
    m3 = direct_sum([X1, P2s])
    for t in (lam, zero, m2, m3, direct_sum([X1, P1])):
        assert order_geq(lam, t) and order_geq(t, zero)
    assert not order_geq(m2, m3) and not order_geq(m3, m2)
    with pytest.raises(NotSilting):
        order_geq(P1, lam)


def test_module_data_examples():
    md = module_data(algebra_complex(A))
    assert md.dim_vector == (1, 2) and md.support == (1, 2) and md.shifted == ()
    md = module_data(direct_sum([X1, P2s]))
    assert md.dim_vector == (1, 0) and md.support == (1,) and md.shifted == (2,)
    md = module_data(zero_object(A))
    assert md.dim_vector == (0, 0) and md.support == () and md.shifted == (1, 2)


def test_chain_maps_satisfy_commutation():
    g = gls_a2()
    x = TwoTermComplex(g, (2,), (1,), [[g.path("a").terms]])
    for f1, f0 in chain_maps(x, x):
        lhs = g.mul(f0[0][0], x.d[0][0])
        rhs = g.mul(x.d[0][0], f1[0][0])
        assert lhs == rhs


# -- random complexes --------------------------------------------------------

ALGEBRAS = [A, linear_a(3), gls_a2(), linear_a(3, ["a1 a2"])]


def random_complex(alg, rng, max_terms=5):
    vs = alg.vertices
    p1 = tuple(rng.choice(vs) for _ in range(rng.randint(0, max_terms)))
    p0 = tuple(rng.choice(vs) for _ in range(rng.randint(0, max_terms)))
    d = []
    for v in p0:
        row = []
        for u in p1:
            entry = {}
            for k in alg.corner_indices(v, u):
                c = rng.choice((0, 0, 1, -1, 2))
                if c:
                    entry[k] = Fraction(c)
            row.append(entry)
        d.append(row)
    return TwoTermComplex(alg, p1, p0, d if p0 else ())


def probes(alg):
    out = []
    for v in alg.vertices:
        out += [projective_complex(alg, v), projective_complex(alg, v, shifted=True)]
    return out


@settings(max_examples=150)
@given(st.integers(0, 3), st.integers(0, 10**6))
def test_minimize_preserves_hom_k1(which, seed):
    alg = ALGEBRAS[which]
    t = random_complex(alg, random.Random(seed))
    m = minimize(t)
    assert m.is_minimal()
    assert m.g_vector() == t.g_vector()
    for p in probes(alg):
        assert hom_k1_dimension(m, p) == hom_k1_dimension(t, p)
        assert hom_k1_dimension(p, m) == hom_k1_dimension(p, t)


@settings(max_examples=150)
@given(st.integers(0, 3), st.integers(0, 10**6))
def test_decompose_resums(which, seed):
    alg = ALGEBRAS[which]
    t = minimize(random_complex(alg, random.Random(seed)))
    parts = decompose(t)
    for p in parts:
        assert p.is_minimal() and not p.is_zero
        assert len(decompose(p)) == 1
    s = direct_sum(parts, alg)
    assert s.g_vector() == t.g_vector()
    for p in probes(alg) + [t]:
        assert hom_k1_dimension(s, p) == hom_k1_dimension(t, p)
        assert hom_k1_dimension(p, s) == hom_k1_dimension(p, t)


@settings(max_examples=150)
@given(st.integers(0, 3), st.integers(0, 10**6))
def test_presilting_support_and_shifts_disjoint(which, seed):
    alg = ALGEBRAS[which]
    t = minimize(random_complex(alg, random.Random(seed)))
    if not is_presilting(t):
        return
    md = module_data(t)
    assert not set(md.support) & set(md.shifted)
    # two-term presilting complexes share no vertex between degrees
    assert not set(t.p1) & set(t.p0)
