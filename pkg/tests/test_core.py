import pytest
from hypothesis import given, strategies as st

from choix.core import (
    Assessment,
    AssessmentPair,
    InputError,
    ToleranceConfig,
    as_options,
    as_vec,
    leq,
    rescale_assessment,
    strictly_less,
    translate_set,
)

vecs = st.tuples(*([st.integers(-5, 5).map(float)] * 3))


def test_leq_examples():
    assert leq((0.0, 0.0), (0.0, 0.0))
    assert leq((1.0, -1.0), (2.0, 0.0))
    assert not leq((4.0, -2.0), (0.0, 0.0))


def test_leq_dimension_mismatch():
    with pytest.raises(InputError):
        leq((0.0,), (0.0, 0.0))


def test_strictly_less_examples():
    assert strictly_less((0.0, 0.0), (0.0, 1.0))
    assert not strictly_less((0.0, 0.0), (0.0, 0.0))
    assert not strictly_less((0.0, 0.0), (-7.0, 7.0))


def test_strictly_less_with_slack():
    cfg = ToleranceConfig(tau=0.1)
    assert leq((0.0, 0.05), (0.0, 0.0), cfg)
    assert not strictly_less((0.0, 0.0), (0.05, 0.05), cfg)


@given(vecs)
def test_leq_reflexive(u):
    assert leq(u, u)
    assert not strictly_less(u, u)


@given(vecs, vecs)
def test_strict_implies_weak_and_antisymmetry(u, v):
    if strictly_less(u, v):
        assert leq(u, v)
        assert not strictly_less(v, u)


@given(vecs, vecs, vecs)
def test_leq_transitive(u, v, w):
    if leq(u, v) and leq(v, w):
        assert leq(u, w)


def test_translate_set_example():
    a3 = ((-3.0, 4.0), (0.0, 1.0), (4.0, -3.0))
    assert translate_set(a3, (4.0, -3.0)) == ((-7.0, 7.0), (-4.0, 4.0), (0.0, 0.0))
    assert translate_set(a3, (0.0, 0.0)) == a3
    assert translate_set(((1.0, 1.0),), (1.0, 1.0)) == ((0.0, 0.0),)


def test_as_vec_rejects_bad_input():
    with pytest.raises(InputError):
        as_vec(["x"])
    with pytest.raises(InputError):
        as_vec([])
    with pytest.raises(InputError):
        as_vec([float("nan")])


def test_as_options_rejects_mixed_dimensions():
    with pytest.raises(InputError):
        as_options([[1.0], [1.0, 2.0]])


def test_pair_validation():
    with pytest.raises(InputError):
        AssessmentPair(chosen=(), rejected=((1.0,),))
    with pytest.raises(InputError):
        AssessmentPair(chosen=((1.0, 2.0),), rejected=((1.0, 2.0),))
    pair = AssessmentPair(chosen=((1.0, 2.0), (1.0, 2.0)), rejected=())
    assert pair.dimension == 2


def test_assessment_validation():
    pair = AssessmentPair(chosen=((1.0, 2.0),), rejected=())
    with pytest.raises(InputError):
        Assessment(dimension=3, pairs=(pair,))
    a = Assessment(dimension=2, pairs=(pair,))
    assert a.pairs == (pair,)


def test_rescale_assessment():
    a = Assessment(
        dimension=2,
        pairs=(AssessmentPair(chosen=((1.0, 0.0),), rejected=((0.0, 1.0),)),),
    )
    assert rescale_assessment(a, 1.0, (0.0, 0.0)) == a
    scaled = rescale_assessment(a, 2.0, (1.0, 1.0))
    assert scaled.pairs[0].chosen == ((3.0, 1.0),)
    assert scaled.pairs[0].rejected == ((1.0, 3.0),)
    with pytest.raises(InputError):
        rescale_assessment(a, 0.0, (0.0, 0.0))


def test_tolerance_validation():
    with pytest.raises(InputError):
        ToleranceConfig(tau=-1.0)
    cfg = ToleranceConfig()
    assert cfg.tau == 0.0
    assert cfg.lp_tol == 1e-9
