import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl2geo import (adjoint_matrix, basis, bracket, exp2, from_coords,
                    metric_g, rotation, to_coords)

A0, A1, A2 = basis()

coord = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)
coords3 = st.tuples(coord, coord, coord)


def test_basis_values():
    assert np.array_equal(A0, 0.5 * np.array([[0.0, -1.0], [1.0, 0.0]]))
    assert np.array_equal(A1, 0.5 * np.array([[0.0, 1.0], [1.0, 0.0]]))
    assert np.array_equal(A2, np.array([[0.5, 0.0], [0.0, -0.5]]))


def test_basis_traceless():
    for a in (A0, A1, A2):
        assert np.trace(a) == 0.0


def test_a1_squares_to_quarter_identity():
    assert np.array_equal(A1 @ A1, 0.25 * np.eye(2))


@pytest.mark.parametrize("a, b, expected", [
    (A0, A1, -A2),
    (A0, A2, A1),
    (A1, A2, A0),
])
def test_commutation_relations(a, b, expected):
    assert np.allclose(bracket(a, b), expected, atol=1e-15)


def test_bracket_of_equal_arguments_vanishes():
    assert np.array_equal(bracket(A1, A1), np.zeros((2, 2)))


@settings(max_examples=50, deadline=None)
@given(coords3, coords3, coords3, coord, coord)
def test_bracket_bilinear_and_jacobi(va, vb, vc, lam, mu):
    a, b, c = from_coords(va), from_coords(vb), from_coords(vc)
    left = bracket(lam * a + mu * b, c)
    right = lam * bracket(a, c) + mu * bracket(b, c)
    assert np.allclose(left, right, atol=1e-12)
    jacobi = (bracket(a, bracket(b, c)) + bracket(b, bracket(c, a))
              + bracket(c, bracket(a, b)))
    assert np.max(np.abs(jacobi)) < 1e-12


def test_metric_orthonormal_basis():
    assert metric_g(A1, A1) == pytest.approx(1.0, abs=1e-15)
    assert metric_g(A1, A2) == pytest.approx(0.0, abs=1e-15)
    assert metric_g(A0, A0) == pytest.approx(1.0, abs=1e-15)


def test_exp2_zero_is_identity():
    assert np.array_equal(exp2(np.zeros((2, 2))), np.eye(2))


def test_exp2_boost_direction():
    expected = np.array([[math.cosh(0.5), math.sinh(0.5)],
                         [math.sinh(0.5), math.cosh(0.5)]])
    assert np.allclose(exp2(A1), expected, atol=1e-15)


def test_exp2_rotation_direction():
    assert np.allclose(exp2(math.pi * A0), np.array([[0.0, -1.0], [1.0, 0.0]]),
                       atol=1e-12)


def test_exp2_series_branch_continuity():
    # Straddle the series cutoff: values on both sides must agree smoothly.
    for sign in (1.0, -1.0):
        m = from_coords((0.0, 1.0, sign))  # det = (v0^2 - v1^2 - v2^2)/4 near 0
        for eps in (1e-10, 1e-9, 1e-7, 1e-5):
            a = exp2(m * math.sqrt(eps))
            b = exp2(m * math.sqrt(eps) * (1.0 + 1e-9))
            assert np.max(np.abs(a - b)) < 1e-8


@settings(max_examples=50, deadline=None)
@given(coords3, st.floats(min_value=-2.0, max_value=2.0, allow_nan=False))
def test_exp2_unimodular(v, t):
    x = exp2(t * from_coords(v))
    scale = max(1.0, float(np.sum(x * x)))
    assert abs(np.linalg.det(x) - 1.0) <= 1e-11 * scale


@settings(max_examples=50, deadline=None)
@given(coords3, st.floats(min_value=-1.5, max_value=1.5, allow_nan=False),
       st.floats(min_value=-1.5, max_value=1.5, allow_nan=False))
def test_exp2_one_parameter_group(v, t, s):
    m = from_coords(v)
    assert np.allclose(exp2(t * m) @ exp2(s * m), exp2((t + s) * m), atol=1e-9)


def test_coords_round_trip(rng):
    for _ in range(50):
        v = rng.normal(0.0, 2.0, 3)
        assert np.allclose(to_coords(from_coords(v)), v, atol=1e-14)


def test_adjoint_basis_matrices():
    # The displayed matrix of ad_{A0}: [A0, A1] = -A2 and [A0, A2] = A1 force
    # unit entries (a global 1/2 would break the representation property
    # checked below, and the bracket relations pinned above).
    assert np.array_equal(adjoint_matrix(A0),
                          np.array([[0.0, 0.0, 0.0],
                                    [0.0, 0.0, 1.0],
                                    [0.0, -1.0, 0.0]]))
    assert np.array_equal(adjoint_matrix(A1),
                          np.array([[0.0, 0.0, 1.0],
                                    [0.0, 0.0, 0.0],
                                    [1.0, 0.0, 0.0]]))


def test_adjoint_of_zero():
    assert np.array_equal(adjoint_matrix(np.zeros((2, 2))), np.zeros((3, 3)))


@settings(max_examples=50, deadline=None)
@given(coords3, coords3)
def test_adjoint_representation_property(va, vb):
    a, b = from_coords(va), from_coords(vb)
    lhs = adjoint_matrix(bracket(a, b))
    rhs = (adjoint_matrix(a) @ adjoint_matrix(b)
           - adjoint_matrix(b) @ adjoint_matrix(a))
    assert np.allclose(lhs, rhs, atol=1e-12)


def test_rotation_matches_exponential():
    theta = 0.77
    assert np.allclose(rotation(theta), exp2(2.0 * theta * A0), atol=1e-14)
