import numpy as np
import pytest
from hypothesis import given, strategies as st

from arcphase import Arc, arc_contains, arc_double, arc_subset, circ_dist, mod1

angles = st.floats(min_value=0.0, max_value=1.0, exclude_max=True, allow_nan=False)


def test_circ_dist_examples():
    assert circ_dist(0.49, 0.50) == pytest.approx(0.01)
    assert circ_dist(0.99, 0.01) == pytest.approx(0.02)
    assert circ_dist(0.25, 0.75) == pytest.approx(0.50)


@given(angles, angles)
def test_circ_dist_symmetric_and_bounded(a, b):
    d = circ_dist(a, b)
    assert d == pytest.approx(circ_dist(b, a))
    assert 0.0 <= d <= 0.5


@given(angles)
def test_circ_dist_self_zero(a):
    assert circ_dist(a, a) == 0.0


@given(angles, angles, st.integers(min_value=-5, max_value=5))
def test_circ_dist_integer_shift_invariant(a, b, k):
    assert circ_dist(a + k, b) == pytest.approx(circ_dist(a, b))


@given(angles, angles, angles)
def test_circ_dist_triangle(a, b, c):
    assert circ_dist(a, c) <= circ_dist(a, b) + circ_dist(b, c) + 1e-12


def test_mod1_reduces_to_unit_interval():
    for x in [-3.2, -1e-18, 0.0, 0.4, 1.0, 2.6, 3.2]:
        assert 0.0 <= mod1(x) < 1.0


def test_arc_normalizes_lower_and_validates_width():
    a = Arc(2.6, 0.6)
    assert a.lower == pytest.approx(0.6)
    with pytest.raises(ValueError):
        Arc(0.2, 0.0)
    with pytest.raises(ValueError):
        Arc(0.2, 1.5)


def test_arc_contains_examples():
    assert arc_contains(Arc(0.2, 0.6), 0.3)  # 0.3 in [1.2, 1.8] on the circle
    assert not arc_contains(Arc(0.2, 0.6), 0.9)
    assert arc_contains(Arc(0.9, 0.3), 0.05)


def test_arc_contains_is_half_open():
    a = Arc(0.2, 0.3)
    assert arc_contains(a, 0.2)
    assert not arc_contains(a, 0.5)


def test_arc_subset_examples():
    assert arc_subset(Arc(0.3, 0.3), Arc(0.2, 0.6))
    assert arc_subset(Arc(0.8, 0.3), Arc(0.6, 0.6))  # [0.8,1.1] in [2.6,3.2]
    a = Arc(0.7, 0.25)
    assert arc_subset(a, a)
    assert not arc_subset(Arc(0.1, 0.6), Arc(0.2, 0.6))


def test_arc_double_examples():
    d = arc_double(Arc(0.6, 0.3))
    assert d.lower == pytest.approx(0.2) and d.width == pytest.approx(0.6)
    d = arc_double(Arc(0.3, 1 / 6))
    assert d.lower == pytest.approx(0.6) and d.width == pytest.approx(1 / 3)
    d = arc_double(Arc(0.9, 0.1))
    assert d.lower == pytest.approx(0.8) and d.width == pytest.approx(0.2)
    with pytest.raises(ValueError):
        arc_double(Arc(0.0, 0.6))


def test_subset_membership_transitivity_sampled():
    rng = np.random.default_rng(0)
    checked = 0
    while checked < 500:
        b = Arc(rng.uniform(), rng.uniform(0.05, 1.0))
        a = Arc(b.lower + rng.uniform(0, b.width), rng.uniform(0.01, b.width))
        if not arc_subset(a, b):
            continue
        t = mod1(a.lower + rng.uniform(0, a.width))
        if arc_contains(a, t):
            assert arc_contains(b, t)
            checked += 1


def test_arc_double_preserves_membership_sampled():
    rng = np.random.default_rng(1)
    for _ in range(500):
        a = Arc(rng.uniform(), rng.uniform(0.01, 0.5))
        t = mod1(a.lower + rng.uniform(0, a.width) * 0.999)
        assert arc_contains(a, t)
        assert arc_contains(arc_double(a), mod1(2 * t))
