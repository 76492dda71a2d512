import pytest
from hypothesis import given, settings, strategies as st

from conftest import gls_a2, linear_a, load
from randomalg import random_algebra
from sttilt.algebra import build
from sttilt.complexes import TwoTermComplex, algebra_complex, decompose, is_silting
from sttilt.errors import PreconditionFailed
from sttilt.extension import build_extension, crosscheck_tsilt_iso, lift, verify_condition_cg
from sttilt.mutation import enumerate_sttilt


@pytest.fixture(scope="module")
def ext():
    return build_extension(gls_a2())


def test_gls_a2_extension(ext):
    assert ext.core_algebra.dim == 3
    assert sorted(ext.lam.basis[k].label() for k in ext.kernel_basis) == ["e1", "e1*a", "e2"]
    for k in range(ext.core_algebra.dim):
        assert ext.project(ext.section[k]) == {k: 1}


def test_hereditary_extension_has_zero_kernel(kA3):
    e = build_extension(kA3)
    assert e.kernel_basis == [] and e.core_algebra.dim == kA3.dim
    assert verify_condition_cg(e).ok


def test_zero_path_is_refused():
    with pytest.raises(PreconditionFailed):
        build_extension(linear_a(3, ["a1 a2"]))


def test_lift_examples(ext):
    a = ext.core_algebra
    lam = lift(ext, algebra_complex(a))
    assert sorted(lam.p0) == sorted(algebra_complex(ext.lam).p0) and lam.p1 == ()
    assert is_silting(lam)
    x = TwoTermComplex(a, (2,), (1,), [[a.path("a").terms]])
    y = lift(ext, x)
    assert y.d[0][0] == ext.lam.path("a").terms
    assert y.g_vector() == x.g_vector()
    assert len(decompose(y)) == 1
    with pytest.raises(ValueError):
        lift(ext, algebra_complex(ext.lam))


def test_cg_gls_a2(ext):
    assert verify_condition_cg(ext).ok


def test_crosscheck_gls():
    assert crosscheck_tsilt_iso(build_extension(gls_a2()))
    assert crosscheck_tsilt_iso(build_extension(load("gls_A3.alg")))


def test_lifted_fingerprints_match(ext):
    base = enumerate_sttilt(ext.core_algebra)
    top = enumerate_sttilt(ext.lam)
    lifted = {tuple(sorted(lift(ext, s).g_vector() for s in nd.summands)) for nd in base.nodes}
    assert lifted == {nd.fingerprint for nd in top.nodes}


@settings(max_examples=12)
@given(st.integers(0, 10_000))
def test_random_fc_algebras_cross_check(seed):
    ra = random_algebra(seed, max_vertices=4)
    e = build_extension(build(ra.quiver, ra.relations, ra.nilbound))
    assert verify_condition_cg(e).ok
    assert crosscheck_tsilt_iso(e)
