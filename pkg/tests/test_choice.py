import pytest

from choix.choice import (
    ChoiceResult,
    Method,
    check_consistency,
    clear_full_cache,
    full_generator,
    is_chosen,
    is_consistent_generator,
    natural_extension,
)
from choix.core import Assessment, AssessmentPair, InputError
from choix.generators import assessment_to_conjunctive_naive, disjunctive_stream

A3 = ((-3.0, 4.0), (0.0, 1.0), (4.0, -3.0))
A4 = ((-2.0, 2.0), (5.0, -4.0))


def running_assessment() -> Assessment:
    return Assessment(
        dimension=2,
        pairs=(
            AssessmentPair(
                chosen=((5.0, -3.0), (3.0, -2.0)),
                rejected=((1.0, -1.0), (-2.0, 1.0)),
            ),
            AssessmentPair(chosen=((-4.0, 8.0),), rejected=((3.0, 1.0),)),
        ),
    )


def inconsistent_assessment() -> Assessment:
    return Assessment(
        dimension=2,
        pairs=(AssessmentPair(chosen=((0.0, 0.0),), rejected=((1.0, 1.0),)),),
    )


def test_method_parse():
    assert Method.parse("naive") is Method.NAIVE
    assert Method.parse("conj") is Method.CONJUNCTIVE
    assert Method.parse("full") is Method.FULL
    with pytest.raises(InputError):
        Method.parse("fast")


def test_is_consistent_generator_examples():
    stream = disjunctive_stream(assessment_to_conjunctive_naive(running_assessment()))
    assert is_consistent_generator(stream, 2)
    assert is_consistent_generator(iter([()]), 2)
    assert not is_consistent_generator(iter([]), 2)


def test_is_chosen_examples():
    g = ((7.0, -4.0), (-7.0, 7.0))
    assert not is_chosen(A3, (4.0, -3.0), iter([g]))
    assert is_chosen(A3, (-3.0, 4.0), iter([g]))
    # A strictly positive alternative rejects without touching the stream.
    assert not is_chosen(((0.0, 0.0), (0.0, 1.0)), (0.0, 0.0), iter([]))


@pytest.mark.parametrize("method", list(Method))
def test_running_example_choices(method):
    a = running_assessment()
    assert check_consistency(a, method)
    r3 = natural_extension(A3, a, method)
    assert r3.consistent
    assert r3.chosen == ((-3.0, 4.0),)
    assert r3.rejected == ((0.0, 1.0), (4.0, -3.0))
    r4 = natural_extension(A4, a, method)
    assert r4.chosen == A4
    assert r4.rejected == ()


@pytest.mark.parametrize("method", list(Method))
def test_inconsistent_assessment(method):
    a = inconsistent_assessment()
    assert not check_consistency(a, method)
    result = natural_extension(A3, a, method)
    assert result == ChoiceResult(chosen=(), rejected=A3, consistent=False)


@pytest.mark.parametrize("method", list(Method))
def test_empty_assessment_is_vacuous(method):
    a = Assessment(dimension=2)
    assert check_consistency(a, method)
    # With nothing learnt, only strict dominance rejects.
    result = natural_extension(((0.0, 0.0), (0.0, 1.0), (1.0, -1.0)), a, method)
    assert result.chosen == ((0.0, 1.0), (1.0, -1.0))
    assert result.rejected == ((0.0, 0.0),)


def test_duplicates_get_identical_verdicts():
    a = running_assessment()
    result = natural_extension(A3 + A3[:1], a, Method.FULL)
    assert result.chosen == ((-3.0, 4.0), (-3.0, 4.0))


def test_query_validation():
    a = running_assessment()
    with pytest.raises(InputError):
        natural_extension((), a, Method.FULL)
    with pytest.raises(InputError):
        natural_extension(((1.0, 2.0, 3.0),), a, Method.FULL)


def test_full_generator_is_cached():
    clear_full_cache()
    a = running_assessment()
    g1 = full_generator(a)
    g2 = full_generator(a)
    assert g1 is g2
    assert g1.sets == (((7.0, -4.0), (-7.0, 7.0)),)
    clear_full_cache()
    assert full_generator(a) is not g1
