from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jackpaths import series
from jackpaths.diagrams import (AnisotropicDiagram, DiscreteMeasure,
                                InterlacingError, StaircaseShape,
                                observable_family, observables, profile,
                                rescale_observable, transition_measure)
from jackpaths.partitions import Partition, partitions_of


def test_profile_examples():
    s = AnisotropicDiagram(Partition([1]), 1, 1).profile()
    assert s.minima == [-1, 1] and s.maxima == [0]
    s0 = AnisotropicDiagram(Partition(), 3, Fraction(1, 2)).profile()
    assert s0.minima == [0] and s0.maxima == []
    s2 = AnisotropicDiagram(Partition([4, 3, 1, 1]), 2, Fraction(1, 2)).profile()
    assert len(s2.minima) == 4 and len(s2.maxima) == 3


def test_profile_evaluate_is_anchored_on_both_sides():
    s = AnisotropicDiagram(Partition([4, 3, 1, 1]), 2, Fraction(1, 2)).profile()
    left, right = s.minima[0], s.minima[-1]
    assert s.evaluate(right + 3) == right + 3
    assert s.evaluate(left - 3) == -(left - 3)
    # local maxima really are local maxima
    for y in s.maxima:
        eps = Fraction(1, 7)
        assert s.evaluate(y) > s.evaluate(y - eps)
        assert s.evaluate(y) > s.evaluate(y + eps)


def test_transition_measure_examples():
    m = transition_measure(StaircaseShape([-1, 1], [0]))
    assert m.atoms == [(-1, Fraction(1, 2)), (1, Fraction(1, 2))]
    assert transition_measure(StaircaseShape([0], [])).atoms == [(0, Fraction(1))]
    alpha = Fraction(5, 7)
    m2 = transition_measure(AnisotropicDiagram(Partition([1]), alpha, 1).profile())
    assert m2.atoms == [(-1, alpha / (1 + alpha)), (alpha, 1 / (1 + alpha))]
    assert m2.mean() == 0


def test_interlacing_guard():
    with pytest.raises(InterlacingError):
        StaircaseShape([0, 1], [2])
    with pytest.raises(InterlacingError):
        StaircaseShape([0, 0], [])


@pytest.mark.parametrize("alpha", [Fraction(1, 3), Fraction(1), Fraction(2),
                                   Fraction(7, 2)])
def test_transition_measures_probability_and_mean_zero(alpha):
    for d in range(0, 9):
        for lam in partitions_of(d):
            m = transition_measure(
                AnisotropicDiagram(lam, alpha, 1).profile())
            assert all(mass > 0 for _, mass in m.atoms)
            assert m.total_mass() == 1
            assert m.mean() == 0


def test_observable_values_and_x2():
    lam = Partition([3, 1])
    w, h = Fraction(2), Fraction(1, 3)
    m = transition_measure(AnisotropicDiagram(lam, w, h).profile())
    for kind in ("moment", "boolean", "free", "fundamental"):
        assert observables(m, kind, 1) == 0
        assert observables(m, kind, 2) == w * h * lam.size()


def test_boolean_semicircle_example():
    m = DiscreteMeasure([(-1, Fraction(1, 2)), (1, Fraction(1, 2))])
    assert observables(m, "boolean", 2) == 1
    assert observables(m, "free", 2) == 1
    assert observables(m, "fundamental", 2) == 1  # = wh|lam| like all four kinds


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(-6, 6), st.integers(1, 9)),
                min_size=1, max_size=5, unique_by=lambda t: t[0]))
def test_moment_boolean_roundtrip_random_measures(raw):
    atoms = sorted((Fraction(p), Fraction(m)) for p, m in raw)
    total = sum(m for _, m in atoms)
    atoms = [(p, m / total) for p, m in atoms]
    meas = DiscreteMeasure(atoms)
    moments = [meas.moment(k) for k in range(1, 9)]
    booleans = series.boolean_from_moments(moments)
    assert series.moments_from_boolean(booleans) == moments
    free = series.free_from_moments(moments)
    assert series.moments_from_free(free) == moments


def test_moment_boolean_roundtrip_on_transition_measures():
    alpha = Fraction(2)
    for lam in partitions_of(5):
        m = transition_measure(AnisotropicDiagram(lam, alpha, 1).profile())
        moments = [m.moment(k) for k in range(1, 11)]
        booleans = series.boolean_from_moments(moments)
        assert series.moments_from_boolean(booleans) == moments


def test_free_cumulant_roundtrip():
    moments = [Fraction(0), Fraction(2), Fraction(1), Fraction(7),
               Fraction(-1), Fraction(40)]
    free = series.free_from_moments(moments)
    assert series.moments_from_free(free) == moments


def test_scaling_property_cross_checked_by_recomputation():
    lam = Partition([2, 1])
    base = transition_measure(AnisotropicDiagram(lam, 1, 1).profile())
    c = Fraction(1, 2)
    scaled = transition_measure(AnisotropicDiagram(lam, c, c).profile())
    for kind in ("moment", "boolean", "free", "fundamental"):
        for ell in range(1, 6):
            x = observables(base, kind, ell)
            assert rescale_observable(x, ell, c) == observables(scaled, kind, ell)
    assert rescale_observable(Fraction(1), 2, 2) == 4


def test_reflect_roundtrip():
    s = AnisotropicDiagram(Partition([3, 1]), 2, 1).profile()
    r = s.reflect()
    assert r.reflect().minima == s.minima
    u = Fraction(3, 7)
    assert s.evaluate(u) == r.evaluate(-u)


def test_measure_json_roundtrip():
    m = DiscreteMeasure([(Fraction(-1, 3), Fraction(2, 5)),
                         (Fraction(4), Fraction(3, 5))])
    again = DiscreteMeasure.from_json(m.to_json())
    assert again.atoms == m.atoms
